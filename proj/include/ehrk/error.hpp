#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ehrk {

enum class Errc {
  Overflow,
  DivisionByZero,
  ZeroPolynomial,
  EmptyInput,
  InvalidInput,
  LengthMismatch,
  NotRMultiplicity,
  NotReflexive,
  NotDesirable,
  InconsistentResidues,
  InvalidParameters,
  DegreeExceedsDimension,
  ScaleExceeded,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ehrk
