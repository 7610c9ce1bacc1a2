#pragma once

#include <memory>
#include <string>
#include <vector>

namespace si::backend {

struct ScoreRequest {
  std::string prefix;
  std::string continuation;  // non-empty
};

struct GenerateRequest {
  std::string prefix;
  int max_tokens = 64;
  std::vector<std::string> stop;
};

struct ScoreResult {
  double logprob = 0.0;
  int token_count = 1;  // backend's own tokenization of the continuation
};

// The scorer/generator contract every pipeline stage runs against.
// Implementations must tolerate concurrent calls.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual ScoreResult score(const ScoreRequest& req) = 0;
  virtual std::string generate(const GenerateRequest& req) = 0;
};

struct RemoteConfig {
  std::string endpoint;  // e.g. http://127.0.0.1:8089/v1/completions
  std::string model;
  std::string api_key_env = "SI_API_KEY";
  int timeout_ms = 30000;
  int max_attempts = 3;  // total tries on timeout/5xx
  int backoff_ms = 500;  // doubles per retry
  int max_in_flight = 8;
};

enum class BackendKind { replay, oracle, remote };

struct BackendDescriptor {
  BackendKind kind = BackendKind::oracle;
  std::string fixture_path;  // replay
  std::string task;          // oracle: task kind hint (sniffed from prompts if empty)
  RemoteConfig remote;
};

std::unique_ptr<Backend> make_backend(const BackendDescriptor& desc);

BackendKind backend_kind_from_string(const std::string& s);

}  // namespace si::backend
