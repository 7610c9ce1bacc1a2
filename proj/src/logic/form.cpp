#include "si/logic/form.hpp"

#include <array>
#include <utility>

#include "si/errors.hpp"

namespace si::logic {

std::string to_string(Label label) {
  switch (label) {
    case Label::True: return "True";
    case Label::False: return "False";
    case Label::Unknown: return "Unknown";
  }
  return "Unknown";
}

Label label_from_string(const std::string& s) {
  if (s == "True") return Label::True;
  if (s == "False") return Label::False;
  if (s == "Unknown") return Label::Unknown;
  throw Error("bad label string: " + s);
}

namespace {

constexpr std::array<std::pair<const char*, const char*>, 6> kVerbs = {{
    {"like", "likes"},
    {"chase", "chases"},
    {"eat", "eats"},
    {"see", "sees"},
    {"need", "needs"},
    {"visit", "visits"},
}};

constexpr std::array<std::pair<const char*, const char*>, 9> kSpecies = {{
    {"wolf", "wolves"},
    {"mouse", "mice"},
    {"cat", "cats"},
    {"sheep", "sheep"},
    {"lion", "lions"},
    {"swan", "swans"},
    {"frog", "frogs"},
    {"rhino", "rhinos"},
    {"bear", "bears"},
}};

}  // namespace

bool is_verb_base(const std::string& w) {
  for (auto& [base, _] : kVerbs)
    if (w == base) return true;
  return false;
}

bool is_verb_3s(const std::string& w) {
  for (auto& [_, s3] : kVerbs)
    if (w == s3) return true;
  return false;
}

std::string verb_base_of(const std::string& w) {
  for (auto& [base, s3] : kVerbs)
    if (w == s3 || w == base) return base;
  throw Error("not a verb: " + w);
}

std::string verb_3s_of(const std::string& base) {
  for (auto& [b, s3] : kVerbs)
    if (base == b) return s3;
  throw Error("not a verb base: " + base);
}

bool is_species(const std::string& w) {
  for (auto& [s, _] : kSpecies)
    if (w == s) return true;
  return false;
}

std::optional<std::string> species_from_plural(const std::string& w) {
  for (auto& [s, p] : kSpecies)
    if (w == p) return s;
  return std::nullopt;
}

std::string species_plural(const std::string& singular) {
  for (auto& [s, p] : kSpecies)
    if (singular == s) return p;
  throw Error("not a species: " + singular);
}

}  // namespace si::logic
