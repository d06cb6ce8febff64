#include <doctest.h>

#include "modjoin/arrangement.hpp"
#include "modjoin/errors.hpp"
#include "modjoin/gaingraph.hpp"
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

std::vector<FiniteGroup> small_groups() {
  return {FiniteGroup::trivial(), FiniteGroup::sign(), FiniteGroup::zmod(3), FiniteGroup::zmod(4)};
}

}  // namespace

TEST_CASE("finite groups") {
  const FiniteGroup z5 = FiniteGroup::zmod(5);
  CHECK(z5.order() == 5);
  CHECK(z5.mul(3, 4) == 2);
  CHECK(z5.inverse(2) == 3);
  CHECK(z5.element("4") == 4);
  REQUIRE(z5.multiplicative());
  CHECK(z5.multiplicative()->field == Field::gf(11));
  REQUIRE(z5.additive());
  CHECK(z5.additive()->field == Field::gf(5));
  const FiniteGroup z3 = FiniteGroup::zmod(3);
  CHECK(z3.multiplicative()->field == Field::gf(7));
  CHECK_FALSE(FiniteGroup::zmod(4).additive());
  CHECK(FiniteGroup::sign().additive()->field == Field::gf(2));
  CHECK(FiniteGroup::sign().multiplicative()->field == Field::rational());

  CHECK(throws_code([] { (void)FiniteGroup::table({"e", "a"}, {{0, 1}, {1, 1}}); }, Errc::InvalidInput));
  CHECK(throws_code([] { (void)FiniteGroup::table({"e", "a"}, {{0, 1}}); }, Errc::InvalidInput));
  const GroupEmbedding bad{Field::rational(), {FieldScalar(1, Field::rational()), FieldScalar(2, Field::rational())}};
  CHECK(throws_code([&] { (void)FiniteGroup::table({"e", "a"}, {{0, 1}, {1, 0}}, bad); }, Errc::InvalidInput));
  const GroupEmbedding good{Field::rational(), {FieldScalar(1, Field::rational()), FieldScalar(-1, Field::rational())}};
  CHECK_NOTHROW((void)FiniteGroup::table({"e", "a"}, {{0, 1}, {1, 0}}, good));
}

TEST_CASE("gain graph construction") {
  const FiniteGroup z3 = FiniteGroup::zmod(3);
  const GainGraph g(3, z3, {{2, 0, 1}}, {1});
  CHECK(g.edges().front() == GainEdge{0, 2, 2});
  CHECK(g.atom_labels() == std::vector<std::string>{"{0,2}_2", "L1"});
  CHECK(throws_code([&] { (void)GainGraph(3, z3, {{1, 1, 0}}); }, Errc::InvalidInput));
  CHECK(throws_code([&] { (void)GainGraph(3, z3, {{0, 3, 0}}); }, Errc::InvalidInput));
  CHECK(throws_code([&] { (void)GainGraph(3, z3, {}, {1, 1}); }, Errc::InvalidInput));
  CHECK(throws_code([&] { (void)frame_matroid(GainGraph(2, z3, {{0, 1, 0}, {0, 1, 0}})); }, Errc::NotSimpleFrame));
  CHECK(throws_code([&] { (void)lift_matroid(GainGraph(2, z3, {{0, 1, 0}}, {0})); }, Errc::HasLoops));
}

TEST_CASE("balance and potentials") {
  const FiniteGroup s = FiniteGroup::sign();
  const GainGraph tri(3, s, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  const BalanceReport rep = analyze_balance(tri, 0b111);
  REQUIRE(rep.components.size() == 1);
  CHECK_FALSE(rep.balanced());
  CHECK(rep.unbalanced_cycles.size() == 1);
  const BalanceReport part = analyze_balance(tri, 0b011);
  REQUIRE(part.components.size() == 1);
  const auto& c = part.components[0];
  CHECK(c.balanced);
  auto phi = [&](int v) {
    const auto it = std::find(c.vertices.begin(), c.vertices.end(), v);
    return c.potential[static_cast<std::size_t>(it - c.vertices.begin())];
  };
  for (std::size_t i = 0; i < 2; ++i) {
    const GainEdge& e = tri.edges()[i];
    CHECK(s.mul(phi(e.u), e.g) == phi(e.v));
  }
}

TEST_CASE("frame and lift ranks match their closed forms") {
  for (const auto& grp : small_groups()) {
    for (int n = 2; n <= 3; ++n) {
      for (bool loops : {false, true}) {
        const GainGraph g = complete_gain_graph(n, grp, loops);
        const Matroid m = frame_matroid(g);
        for (Mask s = 0; s <= m.ground_mask(); ++s) {
          REQUIRE(m.rank(s) == oracle::frame_rank(g, s));
          REQUIRE(frame_independent(g, s) == (oracle::frame_rank(g, s) == popcount(s)));
        }
      }
      const GainGraph g = complete_gain_graph(n, grp, false);
      const Matroid m = lift_matroid(g);
      for (Mask s = 0; s <= m.ground_mask(); ++s) {
        REQUIRE(m.rank(s) == oracle::lift_rank(g, s));
        REQUIRE(lift_independent(g, s) == (oracle::lift_rank(g, s) == popcount(s)));
      }
    }
  }
  const GainGraph bf = bowtie(true);
  const Matroid mf = frame_matroid(bf);
  for (Mask s = 0; s <= mf.ground_mask(); ++s) REQUIRE(mf.rank(s) == oracle::frame_rank(bf, s));
  const GainGraph bl = bowtie(false);
  const Matroid ml = lift_matroid(bl);
  for (Mask s = 0; s <= ml.ground_mask(); ++s) REQUIRE(ml.rank(s) == oracle::lift_rank(bl, s));
}

TEST_CASE("simplicial vertices") {
  const GainGraph bl = bowtie(false);
  CHECK(link_simplicial_vertices(bl).empty());
  CHECK(bias_simplicial_vertices(bowtie(true)).empty());
  CHECK(throws_code([] { (void)link_simplicial_vertices(bowtie(true)); }, Errc::HasLoops));
  const GainGraph k3 = complete_gain_graph(3, FiniteGroup::zmod(3), false);
  CHECK(link_simplicial_vertices(k3) == std::vector<int>{0, 1, 2});
  const GainGraph d3 = complete_gain_graph(3, FiniteGroup::sign(), true);
  CHECK(bias_simplicial_vertices(d3) == std::vector<int>{0, 1, 2});
}

TEST_CASE("induced subgraphs give modular flats") {
  const FiniteGroup z3 = FiniteGroup::zmod(3);
  const GainGraph d = complete_gain_graph(4, z3, true);
  const Matroid m = frame_matroid(d);
  const FlatLattice l = enumerate_flats(m);
  const Subset x(m.size(), frame_induced_atoms(d, {0, 1, 2}));
  CHECK(m.is_flat(x.bits()));
  CHECK(is_modular_flat(l, x).modular);

  const GainGraph k = complete_gain_graph(4, z3, false);
  const Matroid lm = lift_matroid(k);
  const FlatLattice ll = enumerate_flats(lm);
  // K3 over Z/3 is unbalanced, so its flat also holds ∞.
  const Subset y(lm.size(), lift_induced_atoms(k, {1, 2, 3}) | bit(0));
  CHECK(lm.closure_mask(lift_induced_atoms(k, {1, 2, 3})) == y.bits());
  CHECK(is_modular_flat(ll, y).modular);
}

TEST_CASE("fish: the K2 flat is not modular") {
  const GainGraph f = fish(FiniteGroup::sign());
  const Matroid m = frame_matroid(f);
  const Subset digon(m.size(), frame_induced_atoms(f, {1, 2}));
  CHECK(m.is_flat(digon.bits()));
  const ModularityWitness w = short_circuit_check(m, digon);
  CHECK_FALSE(w.modular);
  REQUIRE(w.circuit);
  CHECK(w.circuit->count() == 4);
}

TEST_CASE("signed star type") {
  CHECK(is_signed_star_type(GainGraph(3, FiniteGroup::sign(), {{0, 1, 1}, {0, 2, 1}, {1, 2, 0}})));
  CHECK_FALSE(is_signed_star_type(bowtie(false)));
}

TEST_CASE("realizations") {
  CHECK(throws_code([] { (void)realize_lift_arrangement(complete_gain_graph(3, FiniteGroup::zmod(4), false)); },
                    Errc::NoAdditiveEmbedding));
  CHECK(throws_code([] { (void)realize_lift_arrangement(bowtie(true)); }, Errc::HasLoops));
  const Arrangement a = realize_frame_arrangement(bowtie(true));
  CHECK(a.size() == 13);
  CHECK(a.dim == 5);
  CHECK(match_forms(a, example13_arrangement()).has_value());
  const Arrangement lift = realize_lift_arrangement(bowtie(false));
  CHECK(lift.size() == 9);
  CHECK(lift.dim == 6);
  CHECK(rank_agreement(dependence_matroid(lift), dependence_matroid(bowtie_lift9_arrangement())).agree);
}
