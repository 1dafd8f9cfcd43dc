#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepaths {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad vertex id, parse error, parity violation.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class InvalidPath : public Error {
 public:
  InvalidPath(std::size_t index, const std::string& reason)
      : Error("path " + std::to_string(index) + ": " + reason), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

// A named structural hypothesis (C1..C5, degree threshold, ...) does not hold.
class PreconditionViolation : public Error {
 public:
  PreconditionViolation(std::string property, const std::string& detail)
      : Error(property + ": " + detail), property_(std::move(property)) {}
  const std::string& property() const { return property_; }

 private:
  std::string property_;
};

// A constructive step failed; stage names the step (round, coordinate, bit, ...).
class StrategyFailure : public Error {
 public:
  StrategyFailure(std::string stage, const std::string& detail)
      : Error(stage + ": " + detail), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace sepaths
