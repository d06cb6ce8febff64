#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace modjoin {

/// Univariate polynomial with arbitrary-precision integer coefficients.
/// Coefficient i multiplies t^i; trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial monomial(const mpz_class& c, std::size_t degree);
  /// t - root
  static IntPolynomial linear(const mpz_class& root);
  /// Product of (t - r) over the given roots.
  static IntPolynomial from_roots(const std::vector<long>& roots);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for zero.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  mpz_class coeff(std::size_t i) const;
  const mpz_class& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  mpz_class evaluate(const mpz_class& t) const;

  /// Human-readable form, highest degree first, e.g. "t^2 - 4*t + 3".
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_pow(const IntPolynomial& a, unsigned exponent);

/// Exact quotient over Z, or nullopt when den does not divide num with an
/// integer-coefficient quotient. Throws Errc::DivisionByZeroPolynomial for
/// den = 0.
std::optional<IntPolynomial> poly_exact_div(const IntPolynomial& num, const IntPolynomial& den);

inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  return poly_mul(a, b);
}
inline IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  return poly_add(a, b);
}

}  // namespace modjoin
