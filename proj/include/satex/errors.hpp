#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace satex {

/// Invalid parameters or violated preconditions.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input. `offset` is the byte offset of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// The request exceeds a size guard (enumeration range, matching budget, ...).
class SizeRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No graph can satisfy the requested copy budget.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem hypothesis the evaluator checks was not met.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotImplementedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace satex
