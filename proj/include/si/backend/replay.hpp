#pragma once

#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "si/backend/backend.hpp"

namespace si::backend {

// Deterministic fixture-driven backend. Scores are per-token log
// probabilities aligned with whitespace tokenization of the continuation;
// score() returns their sum. Unseen prompts raise FixtureMiss.
class ReplayBackend : public Backend {
 public:
  ReplayBackend() = default;

  static ReplayBackend from_file(const std::string& path);
  static ReplayBackend from_json(const nlohmann::json& j);

  void add_score(const std::string& prefix, const std::string& continuation,
                 std::vector<double> token_logprobs);
  void add_generation(const std::string& prefix, const std::string& text);

  ScoreResult score(const ScoreRequest& req) override;
  std::string generate(const GenerateRequest& req) override;

  nlohmann::ordered_json to_json() const;
  size_t score_entries() const { return entries_.size(); }

 private:
  struct Entry {
    std::string prefix, continuation;
    std::vector<double> token_logprobs;
  };
  std::vector<Entry> entries_;  // insertion order, for stable serialization
  std::unordered_map<std::string, size_t> score_index_;
  std::vector<std::pair<std::string, std::string>> generations_;
  std::unordered_map<std::string, size_t> generation_index_;
};

}  // namespace si::backend
