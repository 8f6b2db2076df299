#pragma once

#include <stdexcept>
#include <string>

namespace wedgekit {

/// Raised when an argument violates an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed result fails its own postcondition check.
/// Never expected on valid input; the CLI maps it to exit code 3.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define WEDGEKIT_REQUIRE(cond, msg)                 \
  do {                                              \
    if (!(cond)) throw ::wedgekit::InputError(msg); \
  } while (0)

#define WEDGEKIT_ENSURE(cond, msg)                        \
  do {                                                    \
    if (!(cond)) throw ::wedgekit::ConsistencyError(msg); \
  } while (0)

}  // namespace wedgekit
