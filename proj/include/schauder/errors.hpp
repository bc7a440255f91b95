#pragma once

#include <stdexcept>
#include <string>

namespace schauder {

/// Caller supplied something outside an operation's domain
/// (dimension mismatch, bad index, empty input, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unknown basis, function or command-line option.
class UsageError : public InputError {
 public:
  using InputError::InputError;
};

/// A sampled value or intermediate result was not finite.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double node)
      : std::runtime_error(what), node_(node) {}
  explicit NumericError(const std::string& what)
      : std::runtime_error(what), node_(0.0) {}

  /// First coordinate of the sample point that produced the failure.
  double node() const noexcept { return node_; }

 private:
  double node_;
};

/// An operation was asked to certify a property whose hypotheses fail.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace schauder
