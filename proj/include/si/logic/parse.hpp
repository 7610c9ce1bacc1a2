#pragma once

#include <string>

#include "si/logic/form.hpp"

namespace si::logic {

// Parse one controlled-English sentence (optionally ending with ".") into
// its canonical form. The grammar is a fixed production set; anything
// outside it raises UnparsableSentence, and a sentence matching more than
// one production with different forms raises AmbiguousSentence.
Form parse_sentence(const std::string& text);

// True when the text parses under the closed grammar.
bool parses(const std::string& text);

}  // namespace si::logic
