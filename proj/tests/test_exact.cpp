#include <doctest.h>

#include <random>

#include "modjoin/errors.hpp"
#include "modjoin/field.hpp"
#include "modjoin/poly.hpp"
#include "support.hpp"

using namespace modjoin;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<long> c(-9, 9);
  std::vector<mpz_class> co;
  for (int i = 0; i < degree; ++i) co.emplace_back(c(rng));
  co.emplace_back(1);
  return IntPolynomial(co);
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InternalInconsistency;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial a = IntPolynomial::from_roots({1, 3, 3});
  CHECK(a == IntPolynomial({-9, 15, -7, 1}));
  CHECK(a.degree() == 3);
  CHECK(a.evaluate(1) == 0);
  CHECK(a.evaluate(3) == 0);
  CHECK(a.to_string() == "t^3 - 7*t^2 + 15*t - 9");
  CHECK(IntPolynomial().degree() == -1);
  CHECK(IntPolynomial({0, 0}).is_zero());
  CHECK(poly_pow(IntPolynomial::linear(2), 3) == IntPolynomial::from_roots({2, 2, 2}));
  CHECK(IntPolynomial::monomial(5, 2).coeff(2) == 5);
  CHECK(IntPolynomial::monomial(5, 2).coeff(7) == 0);
}

TEST_CASE("exact division") {
  const IntPolynomial num = IntPolynomial::from_roots({1, 3, 3, 3, 3});
  auto q = poly_exact_div(num, IntPolynomial::from_roots({3, 3}));
  REQUIRE(q);
  CHECK(*q == IntPolynomial::from_roots({1, 3, 3}));
  CHECK_FALSE(poly_exact_div(num, IntPolynomial::linear(2)));
  // Divides over Q but not over Z.
  CHECK_FALSE(poly_exact_div(IntPolynomial({1, 1}), IntPolynomial({1, 2})));
  CHECK(code_of([&] { (void)poly_exact_div(num, IntPolynomial()); }) == Errc::DivisionByZeroPolynomial);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPolynomial a = random_poly(rng, trial % 6);
    const IntPolynomial b = random_poly(rng, trial % 4);
    auto back = poly_exact_div(a * b, b);
    REQUIRE(back);
    CHECK(*back == a);
    CHECK((a * b).evaluate(2) == a.evaluate(2) * b.evaluate(2));
    CHECK((a + b).evaluate(-3) == a.evaluate(-3) + b.evaluate(-3));
  }
}

TEST_CASE("big coefficients stay exact") {
  IntPolynomial p = poly_pow(IntPolynomial::linear(1000003), 12);
  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 1000003, 12);
  CHECK(p.coeff(0) == expected);
  CHECK(p.coeff(11) == -12 * mpz_class(1000003));
  auto q = poly_exact_div(p, poly_pow(IntPolynomial::linear(1000003), 11));
  REQUIRE(q);
  CHECK(*q == IntPolynomial::linear(1000003));
}

TEST_CASE("fields and scalars") {
  CHECK(code_of([] { (void)Field::gf(4); }) == Errc::NotPrime);
  CHECK(code_of([] { (void)Field::gf(1); }) == Errc::NotPrime);
  const Field f7 = Field::gf(7);
  const FieldScalar a(3, f7), b(5, f7);
  CHECK((a * b).to_string() == "1");
  CHECK((a / b * b) == a);
  CHECK((-a).to_string() == "4");
  CHECK(FieldScalar::parse("-1", f7).to_string() == "6");
  CHECK(FieldScalar::parse("1/2", f7).to_string() == "4");
  CHECK(FieldScalar(2, f7).pow(3).to_string() == "1");
  const Field q = Field::rational();
  CHECK(FieldScalar::parse("6/4", q).to_string() == "3/2");
  CHECK(code_of([&] { (void)(FieldScalar(1, q) / FieldScalar(0, q)); }) == Errc::InvalidInput);
  CHECK(code_of([&] { (void)FieldScalar::parse("x", q); }) == Errc::InvalidInput);
}

TEST_CASE("elimination rank agrees with an independent elimination") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {0U, 2U, 3U, 5U}) {
    for (int trial = 0; trial < 40; ++trial) {
      oracle::Vectors v;
      v.p = p;
      std::uniform_int_distribution<int> c(p ? 0 : -3, p ? static_cast<int>(p) - 1 : 3);
      const int dim = 2 + trial % 4, n = 3 + trial % 6;
      for (int j = 0; j < n; ++j) {
        std::vector<mpq_class> col(static_cast<std::size_t>(dim));
        for (auto& x : col) x = c(rng);
        v.vecs.push_back(col);
      }
      const Field f = p ? Field::gf(p) : Field::rational();
      FieldMatrix m(f, dim, n);
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < dim; ++i) m.set(i, j, FieldScalar(v.vecs[j][i].get_num().get_si(), f));
      }
      for (oracle::Mask s = 0; s < (oracle::Mask{1} << n); ++s) {
        REQUIRE(static_cast<int>(m.column_rank(s)) == oracle::rank(v, s));
      }
      CHECK(static_cast<int>(m.rank()) == oracle::rank(v, (oracle::Mask{1} << n) - 1));
      CHECK(m.transpose().rank() == m.rank());
      CHECK(m.pivot_columns().size() == m.rank());
    }
  }
}
