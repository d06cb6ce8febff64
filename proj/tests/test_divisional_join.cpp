#include <doctest.h>

#include "modjoin/arrangement.hpp"
#include "modjoin/certificate.hpp"
#include "modjoin/corpus.hpp"
#include "modjoin/divisional.hpp"
#include "modjoin/errors.hpp"
#include "modjoin/graph.hpp"
#include "modjoin/join.hpp"
#include "modjoin/modularity.hpp"
#include "support.hpp"

using namespace modjoin;

namespace {

bool throws_code(const std::function<void()>& f, Errc code) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

FlatLattice lattice_of(const std::string& name) { return enumerate_flats(named_input(name)->matroid); }

}  // namespace

TEST_CASE("linear roots") {
  CHECK(linear_root(IntPolynomial::linear(3)) == mpz_class(3));
  CHECK(linear_root(IntPolynomial::linear(-2)) == mpz_class(-2));
  CHECK_FALSE(linear_root(IntPolynomial({1, 2})));
  CHECK_FALSE(linear_root(IntPolynomial::from_roots({1, 1})));
}

TEST_CASE("divisional atoms and flags of braid arrangements") {
  const FlatLattice l = lattice_of("braid-5");
  for (std::size_t e = 0; e < l.matroid().size(); ++e) {
    const DivisionalVerdict v = is_divisional_atom(l, static_cast<int>(e));
    CHECK(v.divisional);
    REQUIRE(v.quotient);
    CHECK(*v.quotient * v.contraction == v.parent);
  }
  const auto flag = divisional_flag(l);
  REQUIRE(flag);
  CHECK(flag->flats.size() == 5);
  std::vector<mpz_class> roots = flag->roots();
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<mpz_class>{1, 2, 3, 4});
  IntPolynomial prod = IntPolynomial::constant(1);
  for (const auto& q : flag->quotients) prod = prod * q;
  CHECK(prod == charpoly(l));
}

TEST_CASE("no flag for non-divisional matroids") {
  CHECK_FALSE(divisional_flag(graphic_matroid(cycle_graph(4))));
  CHECK_FALSE(divisional_flag(uniform_matroid(3, 4)));
  CHECK_FALSE(is_divisional_atom(uniform_matroid(3, 4), 0).divisional);
}

TEST_CASE("Stanley division") {
  const FlatLattice l = lattice_of("example-13");
  for (auto x : modular_flats(l, l.top())) {
    const StanleyVerdict v = stanley_division_check(l, l.flat(x).atoms);
    CHECK(v.divides);
    REQUIRE(v.quotient);
    CHECK(*v.quotient * interval_charpoly(l, l.bottom(), x) == charpoly(l));
  }
  const Matroid c4 = graphic_matroid(cycle_graph(4));
  CHECK(throws_code([&] { (void)stanley_division_check(c4, Subset::of(4, {0, 1})); }, Errc::NotModular));
  CHECK(throws_code([&] { (void)stanley_division_check(c4, Subset::of(4, {0, 1, 2})); }, Errc::NotAFlat));
}

TEST_CASE("modular joins of example-13") {
  const FlatLattice l = lattice_of("example-13");
  const auto joins = find_modular_joins(l);
  REQUIRE_FALSE(joins.empty());
  const JoinDecomposition& first = joins.front();
  CHECK(first.x == Subset::of(13, {0}));
  CHECK(first.x_round);
  for (const auto& d : joins) {
    CHECK((d.e1 | d.e2) == l.flat(l.top()).atoms);
    CHECK((d.e1 & d.e2) == d.x);
    const BrylawskiTerms t = brylawski_identity_check(l, d);
    CHECK(t.whole * t.meet == t.first * t.second);
    const auto r = support::library_rank(l.matroid());
    CHECK(t.first == oracle::whitney_charpoly(r, d.e1.bits()));
    CHECK(t.meet == oracle::whitney_charpoly(r, d.x.bits()));
    for (int e : (d.e1 - d.x).indices()) {
      const LiftCheck lc = join_divisional_lift_check(l, d, e);
      if (lc.applicable) CHECK(is_divisional_atom(l, e).divisional);
    }
  }
}

TEST_CASE("me certificates replay and mutations fail") {
  const FlatLattice l = lattice_of("example-13");
  const auto cert = me_certify(l);
  REQUIRE(cert);
  CHECK(cert->kind == CertKind::ModularJoin);
  CHECK(certificate_size(*cert) >= 3);
  CHECK(verify_certificate(l, *cert).ok);

  Certificate bad = *cert;
  bad.children[1].flats[0] = bad.children[1].flats[0].without(static_cast<std::size_t>(bad.children[1].flats[0].indices().back()));
  const VerifyResult v = verify_certificate(l, bad);
  CHECK_FALSE(v.ok);
  CHECK(v.path == "root/1");

  Certificate bad_root = *cert;
  bad_root.flats[2] = Subset::of(13, {1});
  CHECK(verify_certificate(l, bad_root).path == "root");

  const auto flag = divisional_flag(l);
  REQUIRE(flag);
  Certificate fc;
  fc.kind = CertKind::Flag;
  fc.subject = l.flat(l.top()).atoms;
  for (const auto& f : flag->flats) fc.flats.push_back(f.atoms);
  fc.roots = flag->roots();
  CHECK(verify_certificate(l, fc).ok);
  fc.roots[0] += 1;
  CHECK_FALSE(verify_certificate(l, fc).ok);
}

TEST_CASE("type D4 is round, has no modular coatom and is not modularly extended") {
  const FlatLattice l = lattice_of("dn-4");
  CHECK(is_round(l).round);
  CHECK(modular_coatoms(l, l.top()).empty());
  CHECK_FALSE(me_certify(l));
  CHECK(divisional_flag(l));
}

TEST_CASE("supersolvable implies modularly extended on the corpus") {
  for (const auto& entry : corpus()) {
    const FlatLattice l = lattice_of(entry.name);
    const bool ss = supersolvable_chain(l).has_value();
    const auto cert = me_certify(l);
    const bool div = divisional_flag(l).has_value();
    if (ss) CHECK(cert.has_value());
    if (cert) {
      CHECK(div);
      CHECK(verify_certificate(l, *cert).ok);
    }
  }
}
