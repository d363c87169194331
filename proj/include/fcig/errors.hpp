#pragma once

#include <stdexcept>
#include <string>

namespace fcig {

// Bad argument to a pure operation (non-prime modulus, non-unit, k out of range).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A spec that fails cross-field validation where an operation needs it valid.
class InvalidSpec : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed spec document (JSON or schema level).
class SpecParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite object would exceed the configured order cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal consistency check failed; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fcig
