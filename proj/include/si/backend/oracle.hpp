#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "si/backend/backend.hpp"

namespace si::backend {

// Answers scoring and generation queries from the symbolic prover instead
// of a language model, making the full pipeline verifiable. Works from the
// prompt text alone: the final prompt block carries the (possibly grown)
// context, the question, and the partial selection.
//
// Scores are 0.0 for the continuation matching the gold next selection
// element (or the sentinel once the selection is complete) and -10.0
// otherwise.
class OracleBackend : public Backend {
 public:
  explicit OracleBackend(std::string task = "") : task_(std::move(task)) {}

  ScoreResult score(const ScoreRequest& req) override;
  std::string generate(const GenerateRequest& req) override;

  static constexpr double kGoldScore = 0.0;
  static constexpr double kOtherScore = -10.0;

 private:
  struct Plan {
    std::vector<std::string> premises;  // period-stripped gold selection, in order
  };
  Plan plan_for(const std::vector<std::string>& context, const std::string& question);

  std::string task_;
  std::mutex mu_;
  std::unordered_map<std::string, Plan> cache_;
};

// Selection-frame helpers shared with the engine and tests: split
// "A. We know that B and C" into its member sentences (period-stripped).
std::vector<std::string> split_selection_frame(const std::string& selection_text);

}  // namespace si::backend
