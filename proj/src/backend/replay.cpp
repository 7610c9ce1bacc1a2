#include "si/backend/replay.hpp"

#include <numeric>

#include "si/errors.hpp"
#include "si/util/text.hpp"

namespace si::backend {

namespace {

std::string key_of(const std::string& prefix, const std::string& continuation) {
  return prefix + '\x1f' + continuation;
}

std::string trailer(const std::string& s, size_t n = 80) {
  return s.size() <= n ? s : "..." + s.substr(s.size() - n);
}

}  // namespace

ReplayBackend ReplayBackend::from_file(const std::string& path) {
  return from_json(nlohmann::json::parse(read_file(path)));
}

ReplayBackend ReplayBackend::from_json(const nlohmann::json& j) {
  ReplayBackend b;
  if (j.contains("scores")) {
    for (const auto& e : j.at("scores")) {
      b.add_score(e.at("prefix").get<std::string>(), e.at("continuation").get<std::string>(),
                  e.at("token_logprobs").get<std::vector<double>>());
    }
  }
  if (j.contains("generations")) {
    for (const auto& e : j.at("generations"))
      b.add_generation(e.at("prefix").get<std::string>(), e.at("text").get<std::string>());
  }
  return b;
}

void ReplayBackend::add_score(const std::string& prefix, const std::string& continuation,
                              std::vector<double> token_logprobs) {
  size_t tokens = split_ws(continuation).size();
  if (tokens == 0 || token_logprobs.size() != tokens)
    throw Error("fixture entry has " + std::to_string(token_logprobs.size()) +
                " token logprobs but the continuation has " + std::to_string(tokens) +
                " whitespace tokens: \"" + continuation + "\"");
  std::string key = key_of(prefix, continuation);
  auto it = score_index_.find(key);
  if (it != score_index_.end()) {
    entries_[it->second].token_logprobs = std::move(token_logprobs);
    return;
  }
  score_index_[key] = entries_.size();
  entries_.push_back({prefix, continuation, std::move(token_logprobs)});
}

void ReplayBackend::add_generation(const std::string& prefix, const std::string& text) {
  auto it = generation_index_.find(prefix);
  if (it != generation_index_.end()) {
    generations_[it->second].second = text;
    return;
  }
  generation_index_[prefix] = generations_.size();
  generations_.emplace_back(prefix, text);
}

ScoreResult ReplayBackend::score(const ScoreRequest& req) {
  auto it = score_index_.find(key_of(req.prefix, req.continuation));
  if (it == score_index_.end())
    throw FixtureMiss("score \"" + req.continuation + "\" after " + trailer(req.prefix));
  const auto& lp = entries_[it->second].token_logprobs;
  return {std::accumulate(lp.begin(), lp.end(), 0.0), static_cast<int>(lp.size())};
}

std::string ReplayBackend::generate(const GenerateRequest& req) {
  auto it = generation_index_.find(req.prefix);
  if (it == generation_index_.end()) throw FixtureMiss("generate after " + trailer(req.prefix));
  return generations_[it->second].second;
}

nlohmann::ordered_json ReplayBackend::to_json() const {
  nlohmann::ordered_json j;
  auto scores = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json s;
    s["prefix"] = e.prefix;
    s["continuation"] = e.continuation;
    s["token_logprobs"] = e.token_logprobs;
    scores.push_back(std::move(s));
  }
  j["scores"] = std::move(scores);
  auto gens = nlohmann::ordered_json::array();
  for (const auto& [prefix, text] : generations_) {
    nlohmann::ordered_json g;
    g["prefix"] = prefix;
    g["text"] = text;
    gens.push_back(std::move(g));
  }
  j["generations"] = std::move(gens);
  return j;
}

}  // namespace si::backend
