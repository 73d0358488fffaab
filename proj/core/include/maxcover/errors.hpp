#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace maxcover {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A set index is outside [0, set_count).
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// The same set index appears more than once where distinct indices are required.
class DuplicateIndex : public Error {
 public:
  using Error::Error;
};

/// Combination size outside [1, candidate count].
class InvalidArity : public Error {
 public:
  using Error::Error;
};

/// A precondition on a solver / cursor argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Instance construction violated an invariant (element range, duplicate element).
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

/// Generator spec violated an invariant.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// Text parse failure. `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Benchmark config file failure. `line` is 1-based.
class ConfigError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// File-level I/O failure.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Predicted number of combination evaluations for one solver call.
/// `evaluations` saturates at the 64-bit maximum when `overflow` is set.
struct CostPrediction {
  std::uint64_t evaluations = 0;
  bool overflow = false;

  bool exceeds(std::uint64_t limit) const { return overflow || evaluations > limit; }

  std::string to_string() const {
    if (overflow) {
      return "more than " + std::to_string(std::numeric_limits<std::uint64_t>::max()) +
             " (64-bit overflow)";
    }
    return std::to_string(evaluations);
  }
};

/// The cost guard refused a solver run: the predicted evaluation count is
/// above the configured limit. Raised before any evaluation pass starts.
class CostLimitExceeded : public Error {
 public:
  CostLimitExceeded(CostPrediction predicted, std::uint64_t limit, const std::string& context)
      : Error(context + ": predicted " + predicted.to_string() +
              " combination evaluations, cost limit " + std::to_string(limit)),
        predicted_(predicted),
        limit_(limit) {}

  /// Same error with caller context prepended to the message.
  static CostLimitExceeded annotate(const CostLimitExceeded& inner, const std::string& prefix) {
    return CostLimitExceeded(inner.predicted_, inner.limit_, prefix + ": " + inner.what(),
                             RawMessage{});
  }

  const CostPrediction& predicted() const { return predicted_; }
  std::uint64_t limit() const { return limit_; }

 private:
  struct RawMessage {};

  CostLimitExceeded(CostPrediction predicted, std::uint64_t limit, const std::string& message,
                    RawMessage)
      : Error(message), predicted_(predicted), limit_(limit) {}

  CostPrediction predicted_;
  std::uint64_t limit_;
};

}  // namespace maxcover
