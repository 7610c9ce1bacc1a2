#include "si/logic/prover.hpp"

#include <algorithm>

#include "si/errors.hpp"
#include "si/logic/render.hpp"

namespace si::logic {

Literal negate(const Literal& l) {
  if (!l.is_ground()) throw NonGroundLiteral();
  Literal out = l;
  out.positive = !out.positive;
  return out;
}

namespace {

Term substitute(const Term& t, const std::optional<Term>& binding) {
  if (t.variable) {
    if (!binding) throw NoMatch("rule variable left unbound");
    return *binding;
  }
  return t;
}

Literal substitute(const Literal& l, const std::optional<Term>& binding) {
  Literal out = l;
  out.subject = substitute(l.subject, binding);
  if (l.object) out.object = substitute(*l.object, binding);
  return out;
}

// Unify one condition against a ground fact, extending the binding.
bool unify(const Literal& cond, const Literal& fact, std::optional<Term>& binding) {
  if (cond.positive != fact.positive || cond.predicate != fact.predicate) return false;
  if (static_cast<bool>(cond.object) != static_cast<bool>(fact.object)) return false;
  auto unify_term = [&](const Term& c, const Term& f) {
    if (!c.variable) return c == f;
    if (binding) return *binding == f;
    binding = f;
    return true;
  };
  if (!unify_term(cond.subject, fact.subject)) return false;
  if (cond.object && !unify_term(*cond.object, *fact.object)) return false;
  return true;
}

}  // namespace

Literal single_step_entail(const Rule& rule, const std::vector<Literal>& facts) {
  if (facts.size() != rule.conditions.size())
    throw ArityMismatch(rule.conditions.size(), facts.size());
  std::optional<Term> binding;
  for (size_t i = 0; i < facts.size(); ++i) {
    if (!unify(rule.conditions[i], facts[i], binding))
      throw NoMatch("condition " + std::to_string(i + 1) + " does not match its fact");
  }
  Literal out = substitute(rule.conclusion, binding);
  if (!out.is_ground()) throw NoMatch("conclusion not ground after substitution");
  return out;
}

std::optional<int> ClosureResult::find(const Literal& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int ClosureResult::add(ClosureFact f) {
  auto it = index_.find(f.literal);
  if (it != index_.end()) return it->second;
  int idx = static_cast<int>(facts_.size());
  index_.emplace(f.literal, idx);
  facts_.push_back(std::move(f));
  return idx;
}

ClosureResult closure(const Theory& theory, int max_depth) {
  ClosureResult cl;
  std::vector<std::pair<int, const Rule*>> rules;
  for (size_t i = 0; i < theory.sentences().size(); ++i) {
    const auto& s = theory.sentences()[i];
    if (std::holds_alternative<Literal>(s.form)) {
      const auto& lit = std::get<Literal>(s.form);
      if (lit.is_ground())
        cl.add({lit, 0, static_cast<int>(i), -1, {}});
    } else {
      rules.emplace_back(static_cast<int>(i), &std::get<Rule>(s.form));
    }
  }

  // Level saturation: round d only combines facts of depth < d, so the
  // first derivation of a literal is at its minimal depth. Rules iterate
  // in sentence order, entities in first-mention order, which realizes the
  // lowest-label tie-break.
  for (int depth = 1; depth <= max_depth; ++depth) {
    std::vector<ClosureFact> found;
    for (auto& [rule_idx, rule] : rules) {
      bool has_var = !rule->is_ground();
      size_t n_bindings = has_var ? theory.entities().size() : 1;
      for (size_t b = 0; b < n_bindings; ++b) {
        std::optional<Term> binding;
        if (has_var) binding = theory.entities()[b];
        std::vector<int> premises;
        int max_prem_depth = 0;
        bool ok = true;
        for (const auto& cond : rule->conditions) {
          Literal want = substitute(cond, binding);
          auto idx = cl.find(want);
          if (!idx) {
            ok = false;
            break;
          }
          premises.push_back(*idx);
          max_prem_depth = std::max(max_prem_depth, cl.facts()[*idx].depth);
        }
        if (!ok || max_prem_depth != depth - 1) continue;
        Literal concl = substitute(rule->conclusion, binding);
        if (cl.contains(concl)) continue;
        bool pending = false;
        for (const auto& f : found)
          if (f.literal == concl) {
            pending = true;
            break;
          }
        if (pending) continue;
        found.push_back({concl, depth, -1, rule_idx, premises});
      }
    }
    if (found.empty()) break;
    for (auto& f : found) cl.add(std::move(f));
  }
  return cl;
}

namespace {

// Linearize the derivation of `target` into proof steps ordered by depth
// (ties by discovery order). Intermediate conclusions get extended labels
// "sent n+i" continuing the context numbering.
Proof build_proof(const Theory& theory, const ClosureResult& cl, int target) {
  Proof proof;
  const auto& facts = cl.facts();
  if (facts[target].depth == 0) return proof;

  std::vector<int> needed;
  std::vector<char> seen(facts.size(), 0);
  std::vector<int> stack{target};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    if (seen[i] || facts[i].depth == 0) continue;
    seen[i] = 1;
    needed.push_back(i);
    for (int p : facts[i].premises) stack.push_back(p);
  }
  std::sort(needed.begin(), needed.end(), [&](int a, int b) {
    if (facts[a].depth != facts[b].depth) return facts[a].depth < facts[b].depth;
    return a < b;
  });

  std::map<int, std::string> step_label;  // closure index -> extended label
  for (size_t k = 0; k < needed.size(); ++k)
    step_label[needed[k]] = "sent " + std::to_string(theory.context_size() + k + 1);

  for (int i : needed) {
    const auto& f = facts[i];
    ProofStep step;
    step.premise_labels.push_back(theory.sentences()[f.rule_sentence].label);
    for (int p : f.premises) {
      if (facts[p].depth == 0)
        step.premise_labels.push_back(theory.sentences()[facts[p].stated_sentence].label);
      else
        step.premise_labels.push_back(step_label.at(p));
    }
    step.conclusion = f.literal;
    step.conclusion_text = render(f.literal);
    step.depth = f.depth;
    proof.steps.push_back(std::move(step));
  }
  return proof;
}

}  // namespace

ProveResult prove(const Theory& theory, const Literal& statement, int max_depth) {
  if (!statement.is_ground()) throw NonGroundLiteral();
  ClosureResult cl = closure(theory, max_depth);
  auto pos = cl.find(statement);
  auto neg = cl.find(negate(statement));
  if (pos && neg) throw ContradictoryTheory(render_statement(statement));
  ProveResult result;
  if (pos) {
    result.label = Label::True;
    result.proof = build_proof(theory, cl, *pos);
  } else if (neg) {
    result.label = Label::False;
    result.proof = build_proof(theory, cl, *neg);
  }
  return result;
}

std::optional<NextStep> next_proofwriter_step(const Theory& theory, const Literal& statement,
                                              int max_depth) {
  ProveResult res = prove(theory, statement, max_depth);
  if (res.label == Label::Unknown) return std::nullopt;
  Literal target = res.label == Label::True ? statement : negate(statement);

  NextStep next;
  if (res.proof->steps.empty()) {
    // Target is a stated fact: the gold selection restates it.
    for (const auto& s : theory.sentences()) {
      if (std::holds_alternative<Literal>(s.form) && std::get<Literal>(s.form) == target) {
        next.restatement = true;
        next.fact_context_indices = {s.context_index};
        next.conclusion = target;
        next.conclusion_text = s.text;
        return next;
      }
    }
    return std::nullopt;
  }

  const ProofStep& first = res.proof->steps.front();
  auto context_index_of = [&](const std::string& label) {
    for (const auto& s : theory.sentences())
      if (s.label == label) return s.context_index;
    throw Error("proof premise label not in theory: " + label);
  };
  next.rule_context_index = context_index_of(first.premise_labels[0]);
  for (size_t i = 1; i < first.premise_labels.size(); ++i)
    next.fact_context_indices.push_back(context_index_of(first.premise_labels[i]));
  next.conclusion = first.conclusion;
  next.conclusion_text = first.conclusion_text;
  return next;
}

}  // namespace si::logic
