#pragma once

#include <map>
#include <optional>
#include <vector>

#include "si/logic/theory.hpp"

namespace si::logic {

inline constexpr int kDefaultMaxDepth = 10;

// Flip the polarity of a ground literal. Involution.
Literal negate(const Literal& l);

// Apply one rule to facts matched positionally against its conditions;
// returns the conclusion under the unique consistent variable binding.
// This is the oracle for a single inference step.
Literal single_step_entail(const Rule& rule, const std::vector<Literal>& facts);

// One derived (or stated) ground literal with its minimal-depth derivation.
struct ClosureFact {
  Literal literal;
  int depth = 0;
  int stated_sentence = -1;       // sentences() index when depth == 0
  int rule_sentence = -1;         // sentences() index of the applied rule
  std::vector<int> premises;      // ClosureFact indices, condition order
};

// Fixed point of single-step rule application under open-world semantics:
// negative conditions are satisfied only by explicit negative literals.
// Facts carry minimal derivation depth; ties broken by lowest sentence label.
class ClosureResult {
 public:
  const std::vector<ClosureFact>& facts() const { return facts_; }
  std::optional<int> find(const Literal& l) const;
  bool contains(const Literal& l) const { return find(l).has_value(); }

  int add(ClosureFact f);

 private:
  std::vector<ClosureFact> facts_;
  std::map<Literal, int> index_;
};

ClosureResult closure(const Theory& theory, int max_depth = kDefaultMaxDepth);

struct ProveResult {
  Label label = Label::Unknown;
  std::optional<Proof> proof;  // proof of the statement (True) or its negation (False)
};

// True + minimal-depth proof if the statement is in the closure; False +
// proof of the negation when that is; Unknown otherwise. Throws
// ContradictoryTheory when both polarities are derivable.
ProveResult prove(const Theory& theory, const Literal& statement,
                  int max_depth = kDefaultMaxDepth);

// The next gold inference for a grown context: the first step of the
// minimal proof of whichever polarity of the statement is provable.
struct NextStep {
  bool restatement = false;          // target is already a stated fact
  int rule_context_index = -1;       // context line of the rule (unless restatement)
  std::vector<int> fact_context_indices;  // fact premises, condition order
  Literal conclusion;
  std::string conclusion_text;
};

std::optional<NextStep> next_proofwriter_step(const Theory& theory, const Literal& statement,
                                              int max_depth = kDefaultMaxDepth);

}  // namespace si::logic
