#pragma once

#include <stdexcept>
#include <string>

namespace si {

// Base class for every typed error raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// logic
struct UnparsableSentence : Error {
  explicit UnparsableSentence(const std::string& text)
      : Error("unparsable sentence: \"" + text + "\"") {}
};
struct AmbiguousSentence : Error {
  explicit AmbiguousSentence(const std::string& text)
      : Error("ambiguous sentence: \"" + text + "\"") {}
};
struct NonGroundLiteral : Error {
  NonGroundLiteral() : Error("literal contains a variable") {}
};
struct NoMatch : Error {
  explicit NoMatch(const std::string& why) : Error("no consistent binding: " + why) {}
};
struct ArityMismatch : Error {
  ArityMismatch(size_t conditions, size_t facts)
      : Error("rule has " + std::to_string(conditions) + " conditions but " +
              std::to_string(facts) + " facts were given") {}
};
struct ContradictoryTheory : Error {
  explicit ContradictoryTheory(const std::string& what)
      : Error("statement and its negation are both derivable: " + what) {}
};

// taskgen
struct GenerationExhausted : Error {
  GenerationExhausted(const std::string& kind, unsigned long long seed)
      : Error("generator for " + kind + " exhausted its retry budget (seed " +
              std::to_string(seed) + ")") {}
};
struct MissingProof : Error {
  explicit MissingProof(const std::string& id)
      : Error("problem " + id + " has no gold proof") {}
};

// backends
struct FixtureMiss : Error {
  explicit FixtureMiss(const std::string& key)
      : Error("replay fixture has no entry for: " + key) {}
};
struct OracleNoMatch : Error {
  explicit OracleNoMatch(const std::string& why) : Error("oracle: " + why) {}
};
struct BackendFailure : Error {
  explicit BackendFailure(const std::string& why) : Error(why) {}
};

enum class RemoteErrorKind { timeout, http_status, malformed_body };

struct RemoteError : Error {
  RemoteErrorKind kind;
  int status;  // meaningful for http_status only
  RemoteError(RemoteErrorKind k, int http_status, const std::string& why)
      : Error(why), kind(k), status(http_status) {}
};

// prompting
struct TemplateMismatch : Error {
  explicit TemplateMismatch(const std::string& why) : Error("template mismatch: " + why) {}
};

// engine
struct EmptyContext : Error {
  EmptyContext() : Error("selection requires a non-empty context") {}
};
struct EmptyGeneration : Error {
  EmptyGeneration() : Error("backend generated no extractable sentence") {}
};
struct IndexOutOfRange : Error {
  IndexOutOfRange(int index, size_t size)
      : Error("step index " + std::to_string(index) + " out of range (trace has " +
              std::to_string(size) + " steps)") {}
};

// eval
struct InvalidCounts : Error {
  explicit InvalidCounts(const std::string& why) : Error("invalid counts: " + why) {}
};
struct EmptyInput : Error {
  EmptyInput() : Error("no records to aggregate") {}
};
struct EmptyTrace : Error {
  EmptyTrace() : Error("trace has no steps") {}
};

// cli / io
struct IoError : Error {
  explicit IoError(const std::string& why) : Error(why) {}
};

}  // namespace si
