#pragma once

#include <string>

#include "si/logic/form.hpp"

namespace si::logic {

// Deterministic surface text for a form. Sentence-initial letter is
// capitalized; everything else keeps canonical casing (person entities
// capitalized, "the X" entities lowercase).
std::string render(const Literal& literal);
std::string render(const Rule& rule);
std::string render(const Form& form);

// The literal's text without the trailing period and without the
// sentence-initial capitalization (as it appears inside a quoted question).
std::string render_statement(const Literal& literal);

}  // namespace si::logic
