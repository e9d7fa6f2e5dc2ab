//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef COMMONCERT_ERRORS_H_
#define COMMONCERT_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace commoncert {

// Malformed graph, kernel or certificate input. `line()` is 1-based, or 0
// when the error is not tied to a line.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &message, std::size_t line = 0)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " +
                                           message),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// An enumeration would exceed one of the configured Limits.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(std::string cap, const std::string &message)
      : std::runtime_error(message), cap_(std::move(cap)) {}

  // One of "assignments", "cycle-space", "subsets".
  const std::string &cap() const { return cap_; }

private:
  std::string cap_;
};

// The inputs violate a hypothesis of the certified statement (even girth,
// alpha = 1/2, epsilon outside (0, epsilon0), non-graphon kernel, ...).
class HypothesisError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Two exact computations that must agree did not. Always a bug.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace commoncert

#endif // COMMONCERT_ERRORS_H_
