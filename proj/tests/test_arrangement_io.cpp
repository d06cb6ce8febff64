#include <doctest.h>

#include "modjoin/arrangement.hpp"
#include "modjoin/errors.hpp"
#include "modjoin/graph.hpp"
#include "modjoin/json_io.hpp"
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

TEST_CASE("arrangement construction") {
  const Field q = Field::rational();
  const Arrangement a = make_arrangement(q, 2, std::vector<std::vector<std::int64_t>>{{2, 4}, {0, -3}});
  CHECK(a.forms.at(0, 1).to_string() == "2");
  CHECK(a.forms.at(1, 1).to_string() == "1");
  CHECK(a.labels == std::vector<std::string>{"H0", "H1"});
  CHECK(throws_code([&] { (void)make_arrangement(q, 2, std::vector<std::vector<std::int64_t>>{{0, 0}}); },
                    Errc::InvalidInput));
  CHECK(throws_code([&] { (void)make_arrangement(q, 2, std::vector<std::vector<std::int64_t>>{{1, 2, 3}}); },
                    Errc::InvalidInput));
  CHECK(throws_code([&] { (void)make_arrangement(q, 2, std::vector<std::vector<std::int64_t>>{{1, 2}, {-2, -4}}); },
                    Errc::InvalidInput));
}

TEST_CASE("arrangement families") {
  CHECK(braid_arrangement(4).size() == 6);
  CHECK(type_b_arrangement(3).size() == 9);
  CHECK(type_d_arrangement(4).size() == 12);
  CHECK(boolean_arrangement(3).size() == 3);
  CHECK(pg_arrangement(3, 3).size() == 13);
  CHECK(pg_arrangement(4, 2).size() == 15);
  CHECK(throws_code([] { (void)pg_arrangement(4, 3); }, Errc::TooLarge));
  CHECK(throws_code([] { (void)pg_arrangement(3, 4); }, Errc::NotPrime));
  CHECK(arrangement_charpoly(braid_arrangement(4)) == IntPolynomial::from_roots({0, 1, 2, 3}));
  CHECK(arrangement_charpoly(type_b_arrangement(3)) == IntPolynomial::from_roots({1, 3, 5}));
  CHECK(arrangement_charpoly(type_d_arrangement(4)) == IntPolynomial::from_roots({1, 3, 3, 5}));
  CHECK(arrangement_charpoly(pg_arrangement(3, 3)) == IntPolynomial::from_roots({1, 3, 9}));
  const Arrangement e = essentialize(braid_arrangement(4));
  CHECK(e.dim == 3);
  CHECK(rank_agreement(dependence_matroid(e), dependence_matroid(braid_arrangement(4))).agree);
}

TEST_CASE("named example arrangements match an independent rank") {
  for (const auto& name : {"example-13", "a1-7", "ziegler-11", "bowtie-lift-9"}) {
    const Arrangement a = *named_arrangement(name);
    const Matroid m = dependence_matroid(a);
    const oracle::Vectors v = oracle::from_arrangement(a);
    for (Mask s = 0; s <= m.ground_mask(); ++s) REQUIRE(m.rank(s) == oracle::rank(v, s));
  }
  CHECK(named_arrangement("ziegler-19")->size() == 19);
  CHECK_FALSE(named_arrangement("nonsense"));
}

TEST_CASE("rank agreement reports the first disagreement") {
  const Matroid a = uniform_matroid(2, 4);
  const Matroid b = dependence_matroid(pg_arrangement(2, 3));
  CHECK(rank_agreement(a, b).agree);
  const Matroid c = uniform_matroid(3, 4);
  const Agreement d = rank_agreement(a, c);
  CHECK_FALSE(d.agree);
  REQUIRE(d.witness);
  CHECK(d.witness->count() == 3);
  CHECK(throws_code([&] { (void)rank_agreement(a, uniform_matroid(2, 5)); }, Errc::SizeMismatch));
  const Agreement sampled = rank_agreement(uniform_matroid(3, 20), uniform_matroid(3, 20), {}, {1 << 10, 500, 1});
  CHECK(sampled.agree);
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.checked >= 500);
}

TEST_CASE("json round trips") {
  const IntPolynomial p = IntPolynomial::from_roots({1, 3, 3, 3, 3});
  CHECK(poly_from_json(poly_to_json(p)) == p);
  CHECK(poly_to_json(p).dump() == R"(["-81","189","-162","66","-13","1"])");

  const Arrangement a = ziegler19_arrangement();
  const Arrangement back = arrangement_from_json(arrangement_to_json(a));
  CHECK(back.forms == a.forms);
  CHECK(back.labels == a.labels);

  const GainGraph g = bowtie(true);
  const GainGraph gb = gain_graph_from_json(gain_graph_to_json(g));
  CHECK(gb.edges() == g.edges());
  CHECK(gb.loops() == g.loops());

  const FiniteGroup t = FiniteGroup::table({"e", "a"}, {{0, 1}, {1, 0}},
                                           GroupEmbedding{Field::rational(), {FieldScalar(1, Field::rational()),
                                                                              FieldScalar(-1, Field::rational())}});
  const FiniteGroup tb = group_from_json(group_to_json(t));
  CHECK(tb == t);
  REQUIRE(tb.multiplicative());
  CHECK(tb.multiplicative()->image[1].to_string() == "-1");

  const NamedInput in = *named_input("example-13");
  const auto cert = me_certify(in.matroid);
  REQUIRE(cert);
  CHECK(certificate_from_json(certificate_to_json(*cert), 13) == *cert);
  CHECK(certificate_to_json(*cert).dump() == certificate_to_json(*me_certify(in.matroid)).dump());
}

TEST_CASE("json inputs") {
  const json arr = json::parse(R"({"field":{"kind":"gf","p":3},"dim":2,"forms":[[1,0],[0,1],[1,1],[1,2]]})");
  CHECK(input_from_json(arr).matroid.size() == 4);
  const json mat = json::parse(R"({"field":"Q","rows":[[1,0,"1/2"],[0,1,1]],"labels":["a","b","c"]})");
  CHECK(input_from_json(mat).matroid.label(2) == "c");
  const json gr = json::parse(R"({"vertices":4,"edges":[[0,1],[1,2],[2,3],[3,0]]})");
  CHECK(input_from_json(gr).matroid.full_rank() == 3);
  const json gg = json::parse(R"({"vertices":3,"group":"z3","edges":[[0,1,"1"],[1,2,"0"]],"matroid":"lift"})");
  CHECK(input_from_json(gg).matroid.size() == 3);
  const json un = json::parse(R"({"uniform":[2,5]})");
  CHECK(input_from_json(un).matroid.full_rank() == 2);

  CHECK(throws_code([] { (void)input_from_json(json::parse(R"({"foo":1})")); }, Errc::InvalidInput));
  CHECK(throws_code([] { (void)input_from_json(json::parse(R"({"uniform":[2,40]})")); }, Errc::TooLarge));
  CHECK(throws_code([] { (void)input_from_json(json::parse(R"({"field":{"kind":"gf","p":4},"dim":1,"forms":[[1]]})")); },
                    Errc::NotPrime));
  CHECK(throws_code([] { (void)subset_from_json(json::parse("[0,0]"), 3); }, Errc::InvalidInput));
  CHECK(throws_code([] { (void)subset_from_json(json::parse("[5]"), 3); }, Errc::InvalidInput));
  CHECK(throws_code([] { (void)load_input("no-such-thing"); }, Errc::InvalidInput));
  CHECK(throws_code([] { (void)load_input("graphic-kn-9"); }, Errc::TooLarge));
}

TEST_CASE("chordality: elimination ordering against induced cycles") {
  for (int n = 1; n <= 5; ++n) {
    const unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
    for (unsigned code = 0; code < (1U << pairs); ++code) {
      const SimpleGraph g = graph_from_code(n, code);
      REQUIRE(is_chordal(g) == oracle::chordal_by_induced_cycles(g));
      const auto peo = perfect_elimination_ordering(g);
      CHECK(peo.has_value() == is_chordal(g));
      if (peo) CHECK(peo->size() == static_cast<std::size_t>(n));
    }
  }
  CHECK(canonical_code(cycle_graph(4)) == canonical_code(graph_from_code(4, 0b011110)));
}
