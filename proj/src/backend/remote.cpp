#include "si/backend/remote.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "si/errors.hpp"
#include "si/util/text.hpp"

namespace si::backend {

using nlohmann::json;

namespace {

// scheme://host[:port]/path -> (scheme://host:port, /path)
std::pair<std::string, std::string> split_endpoint(const std::string& endpoint) {
  size_t scheme = endpoint.find("://");
  if (scheme == std::string::npos) throw Error("endpoint needs a scheme: " + endpoint);
  size_t path = endpoint.find('/', scheme + 3);
  if (path == std::string::npos) return {endpoint, "/"};
  return {endpoint.substr(0, path), endpoint.substr(path)};
}

}  // namespace

RemoteBackend::RemoteBackend(RemoteConfig config)
    : config_(std::move(config)), in_flight_(std::max(1, config_.max_in_flight)) {
  std::tie(host_base_, path_) = split_endpoint(config_.endpoint);
  if (const char* key = std::getenv(config_.api_key_env.c_str())) bearer_ = key;
}

RemoteBackend::Response RemoteBackend::post_with_retries(const std::string& body) {
  in_flight_.acquire();
  struct Release {
    std::counting_semaphore<>& sem;
    ~Release() { sem.release(); }
  } release{in_flight_};

  int backoff = config_.backoff_ms;
  bool timed_out = false;
  Response last;
  for (int attempt = 1; attempt <= std::max(1, config_.max_attempts); ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
      backoff *= 2;
    }
    httplib::Client client(host_base_);
    client.set_connection_timeout(0, config_.timeout_ms * 1000LL);
    client.set_read_timeout(0, config_.timeout_ms * 1000LL);
    client.set_write_timeout(0, config_.timeout_ms * 1000LL);
    httplib::Headers headers;
    if (!bearer_.empty()) headers.emplace("Authorization", "Bearer " + bearer_);
    auto res = client.Post(path_, headers, body, "application/json");
    if (!res) {
      timed_out = true;
      continue;  // connection error or timeout: retriable
    }
    last = {res->status, res->body};
    timed_out = false;
    if (res->status >= 500) continue;  // retriable
    return last;
  }
  if (timed_out)
    throw RemoteError(RemoteErrorKind::timeout, 0,
                      "remote request timed out after " +
                          std::to_string(config_.max_attempts) + " attempts");
  throw RemoteError(RemoteErrorKind::http_status, last.status,
                    "remote returned HTTP " + std::to_string(last.status) + " after " +
                        std::to_string(config_.max_attempts) + " attempts");
}

ScoreResult RemoteBackend::score(const ScoreRequest& req) {
  json body;
  body["model"] = config_.model;
  body["prompt"] = req.prefix + req.continuation;
  body["max_tokens"] = 0;
  body["temperature"] = 0;
  body["logprobs"] = true;
  body["echo"] = true;
  Response res = post_with_retries(body.dump());
  if (res.status != 200)
    throw RemoteError(RemoteErrorKind::http_status, res.status,
                      "remote returned HTTP " + std::to_string(res.status));
  try {
    json j = json::parse(res.body);
    const json& lp = j.at("choices").at(0).at("logprobs");
    const json& logprobs = lp.at("token_logprobs");
    const json& offsets = lp.at("text_offset");
    if (logprobs.size() != offsets.size()) throw Error("token arrays disagree");
    double sum = 0.0;
    int count = 0;
    for (size_t i = 0; i < logprobs.size(); ++i) {
      if (offsets[i].get<size_t>() < req.prefix.size()) continue;
      if (logprobs[i].is_null()) continue;
      sum += logprobs[i].get<double>();
      ++count;
    }
    return {sum, std::max(count, 1)};
  } catch (const RemoteError&) {
    throw;
  } catch (const std::exception& e) {
    throw RemoteError(RemoteErrorKind::malformed_body, res.status,
                      std::string("malformed completion body: ") + e.what());
  }
}

std::string RemoteBackend::generate(const GenerateRequest& req) {
  json body;
  body["model"] = config_.model;
  body["prompt"] = req.prefix;
  body["max_tokens"] = req.max_tokens;
  body["temperature"] = 0;
  if (!req.stop.empty()) body["stop"] = req.stop;
  body["echo"] = false;
  Response res = post_with_retries(body.dump());
  if (res.status != 200)
    throw RemoteError(RemoteErrorKind::http_status, res.status,
                      "remote returned HTTP " + std::to_string(res.status));
  try {
    json j = json::parse(res.body);
    return j.at("choices").at(0).at("text").get<std::string>();
  } catch (const std::exception& e) {
    throw RemoteError(RemoteErrorKind::malformed_body, res.status,
                      std::string("malformed completion body: ") + e.what());
  }
}

}  // namespace si::backend
