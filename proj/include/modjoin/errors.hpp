#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace modjoin {

enum class Errc {
  InvalidInput,
  TooLarge,
  DivisionByZeroPolynomial,
  NotPrime,
  NotSimple,
  NotAFlat,
  NotACoatom,
  NotComparable,
  EmptyFlat,
  NotModular,
  NotModularCoatom,
  IdentityViolation,
  LiftViolation,
  InternalInconsistency,
  HasLoops,
  NotSimpleFrame,
  NoMultiplicativeEmbedding,
  NoAdditiveEmbedding,
  SizeMismatch,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above; the
// CLI maps InvalidInput/TooLarge onto distinct exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace modjoin
