#pragma once

#include <stdexcept>
#include <string>

namespace superlie {

/// Malformed or inconsistent caller input (dimension mismatch, unknown key,
/// violated parameter constraint, bad literal).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A computation was refused because it would exceed a size guard.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace superlie
