#include <doctest.h>

#include <random>

#include "modjoin/arrangement.hpp"
#include "modjoin/errors.hpp"
#include "modjoin/graph.hpp"
#include "modjoin/lattice.hpp"
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

std::vector<Mask> library_flats(const FlatLattice& l) {
  std::vector<Mask> out;
  for (std::size_t i = 0; i < l.size(); ++i) out.push_back(l.mask(i));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("Fano plane lattice") {
  const Arrangement a = pg_arrangement(3, 2);
  const Matroid m = dependence_matroid(a);
  const FlatLattice l = enumerate_flats(m);
  CHECK(l.size() == 16);
  CHECK(l.rank_counts() == std::vector<std::size_t>{1, 7, 7, 1});
  const auto r = support::library_rank(m);
  CHECK(charpoly(l) == IntPolynomial::from_roots({1, 2, 4}));
  CHECK(oracle::whitney_charpoly(r, m.ground_mask()) == IntPolynomial::from_roots({1, 2, 4}));
  for (std::size_t i = 0; i < l.size(); ++i) CHECK(is_modular_in(l, i, l.top()));
}

TEST_CASE("lattice order is rank then lexicographic") {
  const FlatLattice l = enumerate_flats(graphic_matroid(complete_graph(4)));
  for (std::size_t i = 1; i < l.size(); ++i) {
    const bool ordered =
        l.rank_of(i - 1) < l.rank_of(i) || (l.rank_of(i - 1) == l.rank_of(i) && lex_less(l.mask(i - 1), l.mask(i)));
    CHECK(ordered);
    CHECK(l.index_of(l.flat(i).atoms) == i);
  }
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (auto c : l.covers(i)) {
      CHECK(l.leq(i, c));
      CHECK(l.rank_of(c) == l.rank_of(i) + 1);
    }
  }
  CHECK(throws_code([&] { (void)interval_charpoly(l, l.top(), l.bottom()); }, Errc::NotComparable));
}

TEST_CASE("flats, Möbius and charpoly against brute force") {
  std::mt19937_64 rng(99);
  for (std::uint32_t p : {0U, 2U, 3U}) {
    for (int trial = 0; trial < 10; ++trial) {
      const int dim = 2 + trial % 3;
      const int n = std::min(4 + trial % 6, p == 2 ? (1 << dim) - 1 : 10);
      const oracle::Vectors v = oracle::random_simple_vectors(rng, p, dim, n);
      const Matroid m = support::to_matroid(v);
      const FlatLattice l = enumerate_flats(m);
      const auto r = oracle::rank_fn(v);
      const Mask all = m.ground_mask();
      const auto brute = oracle::flats(static_cast<int>(m.size()), r);
      CHECK(library_flats(l) == brute);

      // Intersections of flats are flats.
      for (Mask a : brute) {
        for (Mask b : brute) CHECK(l.find(a & b).has_value());
      }

      const IntPolynomial chi = charpoly(l);
      CHECK(chi == oracle::mobius_charpoly(brute, r, all));
      CHECK(chi == oracle::whitney_charpoly(r, all));
      CHECK(chi.evaluate(1) == 0);
      CHECK(chi.degree() == l.rank());

      // Σ_{Y ≤ X} μ(0, Y) = 0 for X above the bottom.
      const MobiusTable mu = mobius(l);
      for (std::size_t x = 1; x < l.size(); ++x) {
        std::int64_t sum = 0;
        for (std::size_t y = 0; y < l.size(); ++y) {
          if (l.leq(y, x)) sum += mu[y];
        }
        CHECK(sum == 0);
      }

      // Interval charpolys of [0, X] agree with restriction.
      for (std::size_t x = 0; x < l.size(); ++x) {
        CHECK(interval_charpoly(l, l.bottom(), x) == oracle::whitney_charpoly(r, l.mask(x)));
      }
    }
  }
}

TEST_CASE("three modularity criteria agree with the definition") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {0U, 2U, 3U}) {
    for (int trial = 0; trial < 8; ++trial) {
      const int dim = 3 + trial % 2;
      const int n = std::min(5 + trial % 5, p == 2 ? (1 << dim) - 1 : 10);
      const oracle::Vectors v = oracle::random_simple_vectors(rng, p, dim, n);
      const Matroid m = support::to_matroid(v);
      const FlatLattice l = enumerate_flats(m);
      const auto r = oracle::rank_fn(v);
      const auto brute = oracle::flats(static_cast<int>(m.size()), r);
      const auto circ = circuits(m);
      for (std::size_t i = 0; i < l.size(); ++i) {
        const Subset x = l.flat(i).atoms;
        const bool truth = oracle::is_modular(x.bits(), brute, r);
        const ModularityWitness w = is_modular_flat(l, x);
        CHECK(w.modular == truth);
        CHECK(is_modular_in(l, i, l.top()) == truth);
        if (!w.modular) {
          REQUIRE(w.violating_flat);
          const Mask y = w.violating_flat->bits();
          CHECK(r(x.bits()) + r(y) != r(x.bits() & y) + r(x.bits() | y));
        }
        if (!x.empty()) {
          const ModularityWitness sc = short_circuit_check(m, x, circ);
          CHECK(sc.modular == truth);
          if (!sc.modular) {
            REQUIRE(sc.circuit);
            REQUIRE(sc.atom);
            CHECK(sc.circuit->contains(static_cast<std::size_t>(*sc.atom)));
          }
        }
        if (l.rank_of(i) == l.rank() - 1) {
          const ModularityWitness ct = is_modular_coatom_triangle(m, x);
          CHECK(ct.modular == truth);
          if (ct.modular) {
            for (const auto& t : ct.triangles) CHECK(r(bit(t[0]) | bit(t[1]) | bit(t[2])) == 2);
          } else {
            REQUIRE(ct.uncovered_pair);
          }
        }
      }
    }
  }
}

TEST_CASE("modularity error cases") {
  const Matroid m = graphic_matroid(cycle_graph(4));
  CHECK(throws_code([&] { (void)short_circuit_check(m, Subset::empty(4)); }, Errc::EmptyFlat));
  CHECK(throws_code([&] { (void)short_circuit_check(m, Subset::of(4, {0, 1, 2})); }, Errc::NotAFlat));
  CHECK(throws_code([&] { (void)is_modular_flat(m, Subset::of(4, {0, 1, 2})); }, Errc::NotAFlat));
  CHECK(throws_code([&] { (void)is_modular_coatom_triangle(m, Subset::of(4, {0})); }, Errc::NotACoatom));
  // A Boolean matroid has only modular flats, but a rank-1 flat of B3 is no coatom.
  const Matroid b3 = uniform_matroid(3, 3);
  CHECK(throws_code([&] { (void)coatom_pairing(b3, Subset::of(3, {0})); }, Errc::NotModularCoatom));
  // In C4 every outside pair of a coatom has no completing atom.
  CHECK(throws_code([&] { (void)coatom_pairing(m, Subset::of(4, {0, 1})); }, Errc::NotModularCoatom));
}

TEST_CASE("coatom pairing on the Fano plane") {
  const Matroid m = dependence_matroid(pg_arrangement(3, 2));
  const FlatLattice l = enumerate_flats(m);
  const Subset line = l.flat(l.coatoms().front()).atoms;
  const auto f = coatom_pairing(m, line);
  CHECK(f.size() == 6);
  for (const auto& [pair, c] : f) {
    CHECK(line.contains(static_cast<std::size_t>(c)));
    CHECK(m.rank(bit(pair.first) | bit(pair.second) | bit(c)) == 2);
  }
}

TEST_CASE("roundness against brute force") {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {0U, 2U, 3U}) {
    for (int trial = 0; trial < 10; ++trial) {
      const int dim = 2 + trial % 3;
      const int n = std::min(3 + trial % 7, p == 2 ? (1 << dim) - 1 : 10);
      const oracle::Vectors v = oracle::random_simple_vectors(rng, p, dim, n);
      const Matroid m = support::to_matroid(v);
      const auto r = oracle::rank_fn(v);
      const auto brute = oracle::flats(static_cast<int>(m.size()), r);
      const RoundnessWitness w = is_round(m);
      CHECK(w.round == oracle::is_round(brute, m.ground_mask()));
      if (!w.round) {
        REQUIRE(w.cover);
        CHECK((w.cover->first | w.cover->second) == m.ground());
        CHECK(m.rank(w.cover->first) == m.full_rank() - 1);
      }
    }
  }
  CHECK_FALSE(is_round(graphic_matroid(cycle_graph(4))).round);
  CHECK(is_round(graphic_matroid(complete_graph(5))).round);
}

TEST_CASE("supersolvable chains") {
  const FlatLattice l = enumerate_flats(graphic_matroid(complete_graph(5)));
  const auto chain = supersolvable_chain(l);
  REQUIRE(chain);
  REQUIRE(chain->size() == 5);
  for (std::size_t i = 0; i < chain->size(); ++i) {
    CHECK((*chain)[i].rank == static_cast<int>(i));
    CHECK(is_modular_flat(l, (*chain)[i].atoms).modular);
    if (i) CHECK((*chain)[i - 1].atoms.is_subset_of((*chain)[i].atoms));
  }
  CHECK_FALSE(supersolvable_chain(graphic_matroid(cycle_graph(5))));
  CHECK_FALSE(supersolvable_chain(uniform_matroid(3, 5)));
  // Modular tower: a modular flat of a modular flat is modular.
  const auto mods = modular_flats(l, l.top());
  for (auto x : mods) {
    for (auto y : modular_flats(l, x)) CHECK(is_modular_in(l, y, l.top()));
  }
}
