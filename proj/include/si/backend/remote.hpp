#pragma once

#include <memory>
#include <semaphore>

#include "si/backend/backend.hpp"

namespace si::backend {

// HTTP completion-API client. Scoring uses echo mode: the provider returns
// per-token log probabilities with character offsets, and the continuation
// score is the sum over tokens whose span lies in the continuation suffix.
// Timeouts and 5xx responses retry with exponential backoff up to
// max_attempts total tries, then surface as typed RemoteErrors. Failures
// never fabricate text.
class RemoteBackend : public Backend {
 public:
  explicit RemoteBackend(RemoteConfig config);

  ScoreResult score(const ScoreRequest& req) override;
  std::string generate(const GenerateRequest& req) override;

 private:
  struct Response {
    int status = 0;
    std::string body;
  };
  Response post_with_retries(const std::string& body);

  RemoteConfig config_;
  std::string host_base_;  // scheme://host:port
  std::string path_;
  std::string bearer_;
  std::counting_semaphore<> in_flight_;
};

}  // namespace si::backend
