#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "si/backend/backend.hpp"
#include "si/logic/form.hpp"

namespace si::eval {

// Generative exact match: truncate the prediction at its first sentence,
// lowercase both sides, drop every non-alphabetic character, compare.
bool generative_match(const std::string& predicted, const std::string& gold);

// ProofWriter label assignment: True iff the statement (after the same
// normalization) matches any stated fact or accumulated inference,
// otherwise False. matched_at_step is 0 for a stated-fact match and k for
// a match at inference k (1-based); negation_matched is diagnostic only.
struct LabelVerdict {
  logic::Label label = logic::Label::False;
  std::optional<int> matched_at_step;
  bool negation_matched = false;
};
LabelVerdict proofwriter_label(const std::vector<std::string>& stated_facts,
                               const std::vector<std::string>& inferences,
                               const logic::Literal& statement);

// Score each choice as a continuation of the prompt (" " + choice); if
// normalize, divide by the backend's token count. Argmax; ties -> lowest
// index.
int multichoice_pick(backend::Backend& backend, const std::string& prompt,
                     const std::vector<std::string>& choices, bool normalize);

// |M ∩ GT| / |M ∪ GT| over steps normalized to lowercase alphanumeric
// characters; both empty -> 1.0.
double jaccard_trace(const std::vector<std::string>& model_steps,
                     const std::vector<std::string>& gold_steps);

struct ZTestResult {
  double z = 0.0;
  double p = 1.0;
};
// Pooled two-proportion z statistic with a two-sided normal p-value.
ZTestResult two_prop_ztest(int successes_a, int n_a, int successes_b, int n_b);

struct EvalRecord {
  std::string id;
  std::string predicted;
  std::string gold;
  bool correct = false;
  std::optional<double> jaccard;
};

struct EvalReport {
  std::string task;
  int n = 0;
  double accuracy = 0.0;
  std::optional<double> mean_jaccard;
  std::vector<EvalRecord> records;

  nlohmann::ordered_json to_json() const;
  std::string summary_line() const;
};

EvalReport aggregate(std::vector<EvalRecord> records, const std::string& task);

}  // namespace si::eval
