#pragma once

#include <stdexcept>
#include <string>

namespace superconf {

enum class Errc {
  AlgebraMismatch,
  NotInvertible,
  Parity,
  CompositionArgument,
  NotInvertibleAsFunction,
  BerezinianDoesNotExist,
  NotSuperconformal,
  NotTwistParity,
  UndefinedSpinProduct,
  KindMismatch,
  UnknownCheck,
  InvalidConfig,
  Parse,
};

// Every failure raised by the library carries a stable code; the message
// starts with the short phrase documented for that code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace superconf
