#include "modjoin/poly.hpp"

#include "modjoin/errors.hpp"

#include <sstream>

namespace modjoin {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotSimple: return "NotSimple";
    case Errc::NotAFlat: return "NotAFlat";
    case Errc::NotACoatom: return "NotACoatom";
    case Errc::NotComparable: return "NotComparable";
    case Errc::EmptyFlat: return "EmptyFlat";
    case Errc::NotModular: return "NotModular";
    case Errc::NotModularCoatom: return "NotModularCoatom";
    case Errc::IdentityViolation: return "IdentityViolation";
    case Errc::LiftViolation: return "LiftViolation";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::HasLoops: return "HasLoops";
    case Errc::NotSimpleFrame: return "NotSimpleFrame";
    case Errc::NoMultiplicativeEmbedding: return "NoMultiplicativeEmbedding";
    case Errc::NoAdditiveEmbedding: return "NoAdditiveEmbedding";
    case Errc::SizeMismatch: return "SizeMismatch";
  }
  return "Unknown";
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
  return IntPolynomial(std::vector<mpz_class>{c});
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const mpz_class& root) {
  return IntPolynomial(std::vector<mpz_class>{-root, mpz_class(1)});
}

IntPolynomial IntPolynomial::from_roots(const std::vector<long>& roots) {
  IntPolynomial p = constant(1);
  for (long r : roots) p = poly_mul(p, linear(r));
  return p;
}

mpz_class IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

mpz_class IntPolynomial::evaluate(const mpz_class& t) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "t";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) out[i] += b.coeffs()[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<mpz_class> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_pow(const IntPolynomial& a, unsigned exponent) {
  IntPolynomial result = IntPolynomial::constant(1);
  for (unsigned i = 0; i < exponent; ++i) result = poly_mul(result, a);
  return result;
}

std::optional<IntPolynomial> poly_exact_div(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZeroPolynomial, "divisor is the zero polynomial");
  if (num.is_zero()) return IntPolynomial{};
  if (num.degree() < den.degree()) return std::nullopt;

  std::vector<mpz_class> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dn = d.size() - 1;
  std::vector<mpz_class> quot(rem.size() - dn);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const mpz_class& top = rem[k + dn];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d[dn].get_mpz_t())) return std::nullopt;
    mpz_class q = top / d[dn];
    for (std::size_t j = 0; j <= dn; ++j) rem[k + j] -= q * d[j];
    quot[k] = std::move(q);
  }
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

}  // namespace modjoin
