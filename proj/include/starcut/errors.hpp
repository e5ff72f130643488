#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace starcut {

/// Malformed input: unparsable vertex strings, unknown kinds, bad ranges.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A vertex label outside [0, 2^n) for the topology it was used with.
class InvalidVertex : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A pair query that requires two distinct vertices received the same one.
class InvalidPair : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter outside the range a construction or formula is defined on.
/// `source` names the rule that rejected it (a lemma case, a builder, ...).
class RangeError : public std::out_of_range {
 public:
  RangeError(std::string source, const std::string& what)
      : std::out_of_range(source + ": " + what), source_(std::move(source)) {}

  const std::string& source() const noexcept { return source_; }

 private:
  std::string source_;
};

/// Refusal to run a computation whose cost exceeds the configured guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace starcut
