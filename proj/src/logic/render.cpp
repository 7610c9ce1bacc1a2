#include "si/logic/render.hpp"

#include "si/errors.hpp"
#include "si/util/text.hpp"

namespace si::logic {

namespace {

std::string spaced(const std::string& name) {
  return replace_all(name, "_", " ");
}

// Tracks how the rule's single variable reads at each mention.
struct VarWords {
  std::string first;    // "something" / "someone"
  std::string pronoun;  // "it" / "they"
  bool introduced = false;
};

VarWords var_words(VarStyle style) {
  if (style == VarStyle::something) return {"something", "it", false};
  return {"someone", "they", false};
}

std::string subject_word(const Term& t, VarWords* vw) {
  if (t.variable) {
    if (!vw) return "something";
    if (!vw->introduced) {
      vw->introduced = true;
      return vw->first;
    }
    return vw->pronoun;
  }
  if (t.definite) return "the " + spaced(t.name);
  return capitalize_first(spaced(t.name));
}

bool plural_subject(const std::string& word) { return word == "they"; }

std::string adjective_phrase(const Literal& l) {
  return (l.positive ? "" : "not ") + l.predicate;
}

// One clause: "<subject> is not kind", "they eat the dog", ...
std::string clause(const Literal& l, VarWords* vw) {
  std::string subj = subject_word(l.subject, vw);
  bool plural = plural_subject(subj);
  if (l.predicate == "afraid" && l.object) {
    std::string cop = plural ? "are" : "is";
    return subj + " " + cop + (l.positive ? "" : " not") + " afraid of " + spaced(l.object->name);
  }
  if (is_species(l.predicate)) {
    std::string cop = plural ? "are" : "is";
    return subj + " " + cop + (l.positive ? "" : " not") + " a " + l.predicate;
  }
  if (l.predicate == "in" && l.object) {
    std::string cop = plural ? "are" : "is";
    return subj + " " + cop + (l.positive ? "" : " not") + " in the " + spaced(l.object->name);
  }
  if (is_verb_base(l.predicate) && l.object) {
    std::string obj = " the " + spaced(l.object->name);
    if (!l.positive) return subj + (plural ? " do not " : " does not ") + l.predicate + obj;
    return subj + " " + (plural ? l.predicate : verb_3s_of(l.predicate)) + obj;
  }
  // adjective
  std::string cop = plural ? "are" : "is";
  return subj + " " + cop + " " + adjective_phrase(l);
}

bool is_unary_adjective(const Literal& l) {
  return !l.object && !is_species(l.predicate) && !is_verb_base(l.predicate) &&
         l.predicate != "afraid";
}

// Conditions rendered for if_then, merging consecutive unary adjectives on
// the shared variable into "something is a and not b" style conjunctions.
// Ground subjects repeat the full clause.
std::string if_then_conditions(const std::vector<Literal>& conds, VarWords* vw) {
  std::vector<std::string> parts;
  size_t i = 0;
  while (i < conds.size()) {
    size_t j = i + 1;
    while (j < conds.size() && conds[i].subject.variable && is_unary_adjective(conds[i]) &&
           is_unary_adjective(conds[j]) && conds[j].subject == conds[i].subject) {
      ++j;
    }
    if (j - i >= 2) {
      std::string c = clause(conds[i], vw);
      for (size_t k = i + 1; k < j; ++k) c += " and " + adjective_phrase(conds[k]);
      parts.push_back(std::move(c));
    } else {
      parts.push_back(clause(conds[i], vw));
    }
    i = j;
  }
  return join(parts, " and ");
}

bool plural_rule_ok(const Rule& r) {
  // all_block / bare_plural need positive unary-adjective conditions and a
  // unary-adjective conclusion, all on the variable.
  for (const auto& c : r.conditions)
    if (!c.positive || !is_unary_adjective(c) || !c.subject.variable) return false;
  return is_unary_adjective(r.conclusion) && r.conclusion.subject.variable &&
         r.conditions.size() <= 2;
}

std::string render_if_then(const Rule& r) {
  VarWords vw = var_words(r.style);
  std::string out = "If " + if_then_conditions(r.conditions, &vw);
  out += " then " + clause(r.conclusion, &vw);
  return capitalize_first(out) + ".";
}

}  // namespace

std::string render(const Rule& rule) {
  switch (rule.surface) {
    case RuleSurface::if_then:
      return render_if_then(rule);
    case RuleSurface::all_block:
    case RuleSurface::bare_plural: {
      if (!plural_rule_ok(rule)) return render_if_then(rule);
      std::vector<std::string> adjs;
      for (const auto& c : rule.conditions) adjs.push_back(c.predicate);
      std::string noun = rule.style == VarStyle::someone ? "people" : "things";
      std::string head = join(adjs, ", ") + " " + noun;
      if (rule.surface == RuleSurface::all_block) head = "all " + head;
      return capitalize_first(head + " are " + adjective_phrase(rule.conclusion)) + ".";
    }
    case RuleSurface::species_fear: {
      if (rule.conditions.size() != 1 || !is_species(rule.conditions[0].predicate) ||
          !rule.conclusion.object)
        return render_if_then(rule);
      return capitalize_first(species_plural(rule.conditions[0].predicate) + " are afraid of " +
                              spaced(rule.conclusion.object->name)) +
             ".";
    }
    case RuleSurface::species_often: {
      if (rule.conditions.size() != 1 || !is_species(rule.conditions[0].predicate))
        return render_if_then(rule);
      return capitalize_first(species_plural(rule.conditions[0].predicate) + " are often " +
                              rule.conclusion.predicate) +
             ".";
    }
  }
  return render_if_then(rule);
}

std::string render(const Literal& literal) {
  return capitalize_first(clause(literal, nullptr)) + ".";
}

std::string render(const Form& form) {
  if (std::holds_alternative<Literal>(form)) return render(std::get<Literal>(form));
  return render(std::get<Rule>(form));
}

std::string render_statement(const Literal& literal) {
  return strip_period(render(literal));
}

}  // namespace si::logic
