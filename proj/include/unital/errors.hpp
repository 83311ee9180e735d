#pragma once

#include <stdexcept>
#include <string>

namespace unital {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad shapes, schema violations, ill-defined maps.
class InputError : public Error {
 public:
  using Error::Error;
};

class GroupMismatch : public InputError {
 public:
  using InputError::InputError;
};

class IllDefinedHom : public InputError {
 public:
  using InputError::InputError;
};

/// A cocycle failed one of its defining relations; `relation()` names it.
class CocycleError : public InputError {
 public:
  CocycleError(std::string relation, const std::string& where)
      : InputError("cocycle relation " + relation + " violated at " + where),
        relation_(std::move(relation)) {}
  const std::string& relation() const noexcept { return relation_; }

 private:
  std::string relation_;
};

/// Enumeration was requested on an infinite group.
class FinitenessError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed the configured limits.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Integer overflow in exact arithmetic.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace unital
