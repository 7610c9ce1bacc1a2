#pragma once

#include <string>

namespace si::eval {

// First maximal run of characters not in {'.', '?', '!', ';', '\n'},
// surrounding whitespace trimmed.
std::string first_sentence(const std::string& text);

// Lowercase, alphabetic characters only.
std::string normalize_alpha(const std::string& text);

// Lowercase, alphanumeric characters only.
std::string normalize_alnum(const std::string& text);

// Last whitespace-delimited token that still contains a letter, stripped
// to its alphabetic characters, lowercased. Empty when none.
std::string final_word(const std::string& text);

}  // namespace si::eval
