#include <doctest.h>

#include <random>

#include "modjoin/errors.hpp"
#include "modjoin/graph.hpp"
#include "modjoin/lattice.hpp"
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

}  // namespace

TEST_CASE("subsets") {
  const Subset s = Subset::of(6, {0, 2, 5});
  CHECK(s.count() == 3);
  CHECK(s.to_string() == "{0,2,5}");
  CHECK(s.complement() == Subset::of(6, {1, 3, 4}));
  CHECK((s - Subset::of(6, {2})) == Subset::of(6, {0, 5}));
  CHECK(lex_less(indices_to_mask({0, 3}), indices_to_mask({1, 2})));
  CHECK(lex_less(indices_to_mask({0, 1}), indices_to_mask({0, 2})));
  CHECK(full_mask(64) == ~Mask{0});
}

TEST_CASE("uniform and graphic ranks") {
  const Matroid u = uniform_matroid(2, 4);
  CHECK(u.rank(indices_to_mask({0, 1, 2})) == 2);
  CHECK(u.full_rank() == 2);
  const SimpleGraph k4 = complete_graph(4);
  const Matroid g = graphic_matroid(k4);
  CHECK(g.size() == 6);
  CHECK(g.full_rank() == 3);
  for (Mask s = 0; s < 64; ++s) CHECK(g.rank(s) == oracle::graphic_rank(k4, s));
}

TEST_CASE("linear matroids reject non-simple input") {
  const Field q = Field::rational();
  CHECK(throws_code([&] { (void)linear_matroid(FieldMatrix::from_rows(q, {{1, 2}, {0, 0}})); }, Errc::NotSimple));
  CHECK(throws_code([&] { (void)linear_matroid(FieldMatrix::from_rows(q, {{0, 1}, {0, 1}})); }, Errc::NotSimple));
  CHECK_NOTHROW((void)linear_matroid(FieldMatrix::from_rows(q, {{1, 0, 1}, {0, 1, 1}})));
}

TEST_CASE("guardrails") {
  CHECK(throws_code([] { (void)enumerate_flats(uniform_matroid(3, 30)); }, Errc::TooLarge));
  CHECK(throws_code([] { (void)enumerate_flats(uniform_matroid(3, 12), Limits{24, 20}); }, Errc::TooLarge));
  CHECK_NOTHROW((void)enumerate_flats(uniform_matroid(3, 30), Limits{40, 1 << 20}));
}

TEST_CASE("restriction and simplified contraction") {
  const Matroid g = graphic_matroid(complete_graph(4));
  const Flat tri = g.closure(Subset::of(6, {0, 1}));
  CHECK(tri.rank == 2);
  CHECK(tri.atoms.count() == 3);
  const Matroid r = restrict(g, tri.atoms);
  CHECK(r.size() == 3);
  CHECK(r.full_rank() == 2);
  CHECK(throws_code([&] { (void)restrict(g, Subset::of(6, {0, 1})); }, Errc::NotAFlat));

  // K4 / e simplifies to a triangle.
  const Contraction c = contract_simplify(g, g.closure(Subset::of(6, {0})).atoms);
  CHECK(c.matroid.full_rank() == 2);
  CHECK(c.matroid.size() == 3);
  CHECK(c.atom_map[0] == -1);
}

// Rank and closure axioms, exhaustively, on random simple linear matroids.
TEST_CASE("rank and closure axioms on random linear matroids") {
  std::mt19937_64 rng(2024);
  for (std::uint32_t p : {0U, 2U, 3U}) {
    for (int trial = 0; trial < 12; ++trial) {
      const int dim = 2 + trial % 3;
      const int n = std::min(4 + trial % 5, p == 2 ? (1 << dim) - 1 : 9);
      const oracle::Vectors v = oracle::random_simple_vectors(rng, p, dim, n);
      const Matroid m = support::to_matroid(v);
      const Mask all = m.ground_mask();
      for (Mask s = 0; s <= all; ++s) {
        const int rs = m.rank(s);
        REQUIRE(rs == oracle::rank(v, s));
        REQUIRE(rs >= 0);
        REQUIRE(rs <= popcount(s));
        const Mask cl = m.closure_mask(s);
        REQUIRE(is_subset(s, cl));
        REQUIRE(m.closure_mask(cl) == cl);
        REQUIRE(m.rank(cl) == rs);
        for (std::size_t a = 0; a < m.size(); ++a) {
          if (s & bit(a)) continue;
          const int ra = m.rank(s | bit(a));
          REQUIRE((ra == rs || ra == rs + 1));
          REQUIRE(is_subset(cl, m.closure_mask(s | bit(a))));
          for (std::size_t b = a + 1; b < m.size(); ++b) {
            if (s & bit(b)) continue;
            REQUIRE(ra + m.rank(s | bit(b)) >= m.rank(s | bit(a) | bit(b)) + rs);
            // Exchange: b ∈ cl(S+a) \ cl(S) implies a ∈ cl(S+b).
            if ((m.closure_mask(s | bit(a)) & bit(b)) && !(cl & bit(b))) {
              REQUIRE((m.closure_mask(s | bit(b)) & bit(a)));
            }
          }
        }
      }
    }
  }
}
