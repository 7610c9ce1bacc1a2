#include "si/logic/parse.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "si/errors.hpp"
#include "si/util/text.hpp"

namespace si::logic {

namespace {

const std::set<std::string> kReserved = {
    "if", "then", "and", "not", "all",  "things", "people", "something",
    "someone", "it", "they", "the", "a", "is", "are", "does", "do",
    "often", "afraid", "of", "in", ",",
};

bool reserved(const std::string& w) { return kReserved.count(w) > 0; }

bool boundary(const std::string& w) {
  return w == "is" || w == "are" || w == "does" || w == "do" || is_verb_3s(w) ||
         is_verb_base(w);
}

std::vector<std::string> tokenize(const std::string& text) {
  std::string t = trim(text);
  while (!t.empty() && t.back() == '.') t.pop_back();
  t = lowercase(t);
  std::vector<std::string> toks;
  for (auto& w : split_ws(t)) {
    size_t commas = 0;
    while (w.size() > commas && w[w.size() - 1 - commas] == ',') ++commas;
    std::string core = w.substr(0, w.size() - commas);
    if (!core.empty()) toks.push_back(core);
    for (size_t i = 0; i < commas; ++i) toks.push_back(",");
  }
  return toks;
}

bool plain_word(const std::string& w) {
  if (w.empty() || reserved(w)) return false;
  for (char c : w)
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// Does a new clause begin at `pos`? True when a copula/verb shows up before
// the next "and"/"then", with at least one subject token in front of it.
bool clause_starts_at(const std::vector<std::string>& toks, size_t pos) {
  if (pos >= toks.size()) return false;
  const std::string& w = toks[pos];
  if (w == "the" || w == "it" || w == "they" || w == "something" || w == "someone") return true;
  size_t words = 0;
  for (size_t j = pos; j < toks.size(); ++j) {
    if (toks[j] == "and" || toks[j] == "then") return false;
    if (boundary(toks[j])) return words >= 1;
    if (!plain_word(toks[j])) return false;
    ++words;
  }
  return false;
}

struct ClauseState {
  bool var_seen = false;
  std::optional<VarStyle> style;
};

struct Clause {
  std::vector<Literal> literals;
  size_t end = 0;
};

std::optional<Term> parse_subject(const std::vector<std::string>& toks, size_t& pos,
                                  ClauseState* st, bool allow_variable) {
  if (pos >= toks.size()) return std::nullopt;
  const std::string& w = toks[pos];
  if (w == "something" || w == "someone") {
    if (!allow_variable || !st) return std::nullopt;
    if (!st->var_seen) st->style = (w == "something") ? VarStyle::something : VarStyle::someone;
    st->var_seen = true;
    ++pos;
    return var();
  }
  if (w == "it" || w == "they") {
    if (!allow_variable || !st || !st->var_seen) return std::nullopt;
    ++pos;
    return var();
  }
  bool definite = false;
  if (w == "the") {
    definite = true;
    ++pos;
  }
  std::vector<std::string> words;
  while (pos < toks.size() && plain_word(toks[pos]) && !boundary(toks[pos])) {
    words.push_back(toks[pos]);
    ++pos;
  }
  if (words.empty()) return std::nullopt;
  return entity(join(words, "_"), definite);
}

// Object phrase after a verb or preposition: "the" + words, ending at the
// clause boundary ("and" starting a clause, "then", or end of tokens).
std::optional<Term> parse_object(const std::vector<std::string>& toks, size_t& pos,
                                 bool require_the = true) {
  if (require_the) {
    if (pos >= toks.size() || toks[pos] != "the") return std::nullopt;
    ++pos;
  }
  std::vector<std::string> words;
  while (pos < toks.size() && plain_word(toks[pos])) {
    words.push_back(toks[pos]);
    ++pos;
  }
  if (words.empty()) return std::nullopt;
  return entity(join(words, "_"), require_the);
}

std::optional<Clause> parse_clause(const std::vector<std::string>& toks, size_t pos,
                                   ClauseState* st, bool allow_variable) {
  Clause out;
  auto subj = parse_subject(toks, pos, st, allow_variable);
  if (!subj) return std::nullopt;
  if (pos >= toks.size()) return std::nullopt;
  const std::string w = toks[pos];

  if (w == "is" || w == "are") {
    ++pos;
    bool neg = false;
    if (pos < toks.size() && toks[pos] == "not") {
      neg = true;
      ++pos;
    }
    if (pos < toks.size() && toks[pos] == "a") {
      if (pos + 1 < toks.size() && is_species(toks[pos + 1])) {
        out.literals.push_back({!neg, toks[pos + 1], *subj, std::nullopt});
        out.end = pos + 2;
        return out;
      }
      return std::nullopt;
    }
    if (pos < toks.size() && toks[pos] == "afraid") {
      if (pos + 1 >= toks.size() || toks[pos + 1] != "of") return std::nullopt;
      pos += 2;
      auto obj = parse_object(toks, pos, /*require_the=*/false);
      if (!obj) return std::nullopt;
      obj->definite = false;
      out.literals.push_back({!neg, "afraid", *subj, obj});
      out.end = pos;
      return out;
    }
    if (pos < toks.size() && toks[pos] == "in") {
      ++pos;
      auto obj = parse_object(toks, pos);
      if (!obj) return std::nullopt;
      out.literals.push_back({!neg, "in", *subj, obj});
      out.end = pos;
      return out;
    }
    // adjective, possibly a conjunction sharing the subject
    if (pos >= toks.size() || !plain_word(toks[pos])) return std::nullopt;
    out.literals.push_back({!neg, toks[pos], *subj, std::nullopt});
    ++pos;
    while (pos + 1 < toks.size() && toks[pos] == "and" && !clause_starts_at(toks, pos + 1)) {
      size_t q = pos + 1;
      bool neg2 = false;
      if (toks[q] == "not") {
        neg2 = true;
        ++q;
      }
      if (q >= toks.size() || !plain_word(toks[q])) break;
      out.literals.push_back({!neg2, toks[q], *subj, std::nullopt});
      pos = q + 1;
    }
    out.end = pos;
    return out;
  }

  if (w == "does" || w == "do") {
    if (pos + 1 >= toks.size() || toks[pos + 1] != "not") return std::nullopt;
    pos += 2;
    if (pos >= toks.size() || !is_verb_base(toks[pos])) return std::nullopt;
    std::string verb = toks[pos];
    ++pos;
    auto obj = parse_object(toks, pos);
    if (!obj) return std::nullopt;
    out.literals.push_back({false, verb, *subj, obj});
    out.end = pos;
    return out;
  }

  if (is_verb_3s(w) || is_verb_base(w)) {
    std::string verb = verb_base_of(w);
    ++pos;
    auto obj = parse_object(toks, pos);
    if (!obj) return std::nullopt;
    out.literals.push_back({true, verb, *subj, obj});
    out.end = pos;
    return out;
  }

  return std::nullopt;
}

std::optional<Form> try_fact(const std::vector<std::string>& toks) {
  // A plural species as bare subject ("wolves are ...") belongs to the rule
  // productions, never to facts.
  if (!toks.empty() && species_from_plural(toks[0])) return std::nullopt;
  auto clause = parse_clause(toks, 0, nullptr, /*allow_variable=*/false);
  if (!clause || clause->end != toks.size() || clause->literals.size() != 1) return std::nullopt;
  return Form(clause->literals[0]);
}

std::optional<Form> try_if_then(const std::vector<std::string>& toks) {
  if (toks.empty() || toks[0] != "if") return std::nullopt;
  auto then_it = std::find(toks.begin(), toks.end(), "then");
  if (then_it == toks.end()) return std::nullopt;
  size_t then_idx = static_cast<size_t>(then_it - toks.begin());

  ClauseState st;
  Rule rule;
  size_t pos = 1;
  while (pos < then_idx) {
    auto clause = parse_clause(toks, pos, &st, /*allow_variable=*/true);
    if (!clause || clause->end > then_idx) return std::nullopt;
    for (auto& l : clause->literals) rule.conditions.push_back(l);
    pos = clause->end;
    if (pos == then_idx) break;
    if (toks[pos] != "and") return std::nullopt;
    ++pos;
    if (!clause_starts_at(toks, pos)) return std::nullopt;
  }
  if (rule.conditions.empty() || rule.conditions.size() > 3) return std::nullopt;

  size_t cpos = then_idx + 1;
  // The conclusion may use a pronoun but cannot introduce the variable.
  if (cpos < toks.size() && (toks[cpos] == "something" || toks[cpos] == "someone"))
    return std::nullopt;
  auto concl = parse_clause(toks, cpos, &st, /*allow_variable=*/true);
  if (!concl || concl->end != toks.size() || concl->literals.size() != 1) return std::nullopt;
  rule.conclusion = concl->literals[0];
  rule.surface = RuleSurface::if_then;
  rule.style = st.style.value_or(VarStyle::someone);
  return Form(rule);
}

std::optional<Form> try_plural_rule(const std::vector<std::string>& toks) {
  size_t pos = 0;
  bool all = false;
  if (pos < toks.size() && toks[pos] == "all") {
    all = true;
    ++pos;
  }
  std::vector<std::string> adjs;
  while (pos < toks.size() && plain_word(toks[pos])) {
    adjs.push_back(toks[pos]);
    ++pos;
    if (pos < toks.size() && toks[pos] == ",") ++pos;
    else break;
  }
  if (adjs.empty() || adjs.size() > 2) return std::nullopt;
  if (pos >= toks.size() || (toks[pos] != "things" && toks[pos] != "people")) return std::nullopt;
  VarStyle style = toks[pos] == "people" ? VarStyle::someone : VarStyle::something;
  ++pos;
  if (pos >= toks.size() || toks[pos] != "are") return std::nullopt;
  ++pos;
  bool neg = false;
  if (pos < toks.size() && toks[pos] == "not") {
    neg = true;
    ++pos;
  }
  if (pos + 1 != toks.size() || !plain_word(toks[pos])) return std::nullopt;

  Rule rule;
  for (auto& a : adjs) rule.conditions.push_back({true, a, var(), std::nullopt});
  rule.conclusion = {!neg, toks[pos], var(), std::nullopt};
  rule.surface = all ? RuleSurface::all_block : RuleSurface::bare_plural;
  rule.style = style;
  return Form(rule);
}

std::optional<Form> try_species_rule(const std::vector<std::string>& toks) {
  if (toks.size() < 4) return std::nullopt;
  auto species = species_from_plural(toks[0]);
  if (!species || toks[1] != "are") return std::nullopt;
  Rule rule;
  rule.conditions.push_back({true, *species, var(), std::nullopt});
  rule.style = VarStyle::something;
  if (toks[2] == "afraid" && toks[3] == "of" && toks.size() == 5 && plain_word(toks[4])) {
    rule.conclusion = {true, "afraid", var(), entity(toks[4])};
    rule.surface = RuleSurface::species_fear;
    return Form(rule);
  }
  if (toks[2] == "often" && toks.size() == 4 && plain_word(toks[3])) {
    rule.conclusion = {true, toks[3], var(), std::nullopt};
    rule.surface = RuleSurface::species_often;
    return Form(rule);
  }
  return std::nullopt;
}

}  // namespace

Form parse_sentence(const std::string& text) {
  auto toks = tokenize(text);
  if (toks.empty()) throw UnparsableSentence(text);

  std::vector<Form> matches;
  auto add = [&](std::optional<Form> f) {
    if (!f) return;
    for (const auto& m : matches)
      if (m == *f) return;
    matches.push_back(std::move(*f));
  };
  add(try_if_then(toks));
  add(try_plural_rule(toks));
  add(try_species_rule(toks));
  add(try_fact(toks));

  if (matches.empty()) throw UnparsableSentence(text);
  if (matches.size() > 1) throw AmbiguousSentence(text);
  return matches[0];
}

bool parses(const std::string& text) {
  try {
    parse_sentence(text);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace si::logic
