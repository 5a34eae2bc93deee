#pragma once

#include <stdexcept>
#include <string>

namespace divclass {

/// Caller supplied something outside an operation's domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed quantity disagreed with the value it is checked against.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal state, e.g. a presentation whose rewriting does not terminate.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace divclass
