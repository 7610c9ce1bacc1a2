#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace si::logic {

// An argument of a literal. Entity names are lowercase with '_' joining
// multi-word names ("bald_eagle"); `definite` marks "the X" surface forms.
struct Term {
  std::string name;
  bool definite = false;
  bool variable = false;

  bool operator==(const Term&) const = default;
  auto operator<=>(const Term&) const = default;
};

inline Term entity(std::string name, bool definite = false) {
  return Term{std::move(name), definite, false};
}
inline Term var() { return Term{"X", false, true}; }

struct Literal {
  bool positive = true;
  std::string predicate;
  Term subject;
  std::optional<Term> object;

  bool is_ground() const {
    return !subject.variable && (!object || !object->variable);
  }
  bool operator==(const Literal&) const = default;
  auto operator<=>(const Literal&) const = default;
};

// Surface template a rule was parsed from / should render to.
enum class RuleSurface {
  if_then,        // "If something is quiet and blue then it is not cold."
  all_block,      // "All quiet things are cold." / "All cold, smart things are not furry."
  bare_plural,    // "Big things are cold." / "Red, big people are nice."
  species_fear,   // "cats are afraid of wolves."
  species_often,  // "lions are often white."
};

// Variable wording used by if_then and the things/people choice elsewhere.
enum class VarStyle { something, someone };

struct Rule {
  std::vector<Literal> conditions;  // 1..3
  Literal conclusion;
  RuleSurface surface = RuleSurface::if_then;
  VarStyle style = VarStyle::someone;

  bool is_ground() const {
    for (const auto& c : conditions)
      if (!c.is_ground()) return false;
    return conclusion.is_ground();
  }
  bool operator==(const Rule&) const = default;
};

using Form = std::variant<Literal, Rule>;

enum class Label { True, False, Unknown };

std::string to_string(Label label);
Label label_from_string(const std::string& s);

// Word classes. The grammar is closed: verbs and pluralizable nouns come
// from fixed lexicons so that clause boundaries are decidable.
bool is_verb_base(const std::string& w);
bool is_verb_3s(const std::string& w);
std::string verb_base_of(const std::string& w);  // "chases" -> "chase"
std::string verb_3s_of(const std::string& base);
bool is_species(const std::string& w);                        // singular
std::optional<std::string> species_from_plural(const std::string& w);
std::string species_plural(const std::string& singular);

}  // namespace si::logic
