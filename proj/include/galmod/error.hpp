#pragma once

#include <stdexcept>
#include <string>

namespace galmod {

enum class ErrorKind {
  OutOfRange,
  InvalidGroup,
  WrongBasis,
  NegativeMultiplicity,
  Parse,
  Validation,
  DegreeTooSmall,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace galmod
