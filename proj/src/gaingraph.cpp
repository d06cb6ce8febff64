#include "modjoin/gaingraph.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "modjoin/errors.hpp"
#include "modjoin/graph.hpp"

namespace modjoin {

// ---- FiniteGroup ------------------------------------------------------------

FiniteGroup FiniteGroup::trivial() {
  FiniteGroup g;
  g.kind_ = Kind::Trivial;
  g.names_ = {"1"};
  g.mul_ = {{0}};
  g.inv_ = {0};
  g.mult_ = GroupEmbedding{Field::rational(), {FieldScalar(1, Field::rational())}};
  g.add_ = GroupEmbedding{Field::rational(), {FieldScalar(0, Field::rational())}};
  return g;
}

FiniteGroup FiniteGroup::sign() {
  FiniteGroup g;
  g.kind_ = Kind::Sign;
  g.names_ = {"1", "-1"};
  g.mul_ = {{0, 1}, {1, 0}};
  g.inv_ = {0, 1};
  const Field q = Field::rational(), f2 = Field::gf(2);
  g.mult_ = GroupEmbedding{q, {FieldScalar(1, q), FieldScalar(-1, q)}};
  g.add_ = GroupEmbedding{f2, {FieldScalar(0, f2), FieldScalar(1, f2)}};
  return g;
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

/// Smallest prime q ≡ 1 (mod n) and an element of exact order n in GF(q)^×.
std::pair<std::uint32_t, std::uint32_t> root_of_unity(std::uint32_t n) {
  for (std::uint64_t q = n + 1;; q += n) {
    if (!is_prime(q)) continue;
    for (std::uint64_t a = 2; a < q; ++a) {
      if (pow_mod(a, n, q) != 1) continue;
      bool exact = true;
      for (std::uint64_t d = 1; d < n && exact; ++d) {
        if (n % d == 0 && pow_mod(a, d, q) == 1) exact = false;
      }
      if (exact) return {static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(a)};
    }
  }
}

}  // namespace

FiniteGroup FiniteGroup::zmod(int n) {
  if (n < 1 || n > 64) throw Error(Errc::InvalidInput, "Z/n needs 1 <= n <= 64");
  FiniteGroup g;
  g.kind_ = Kind::ZMod;
  const auto un = static_cast<std::size_t>(n);
  g.mul_.assign(un, std::vector<int>(un));
  g.inv_.resize(un);
  for (int a = 0; a < n; ++a) {
    g.names_.push_back(std::to_string(a));
    g.inv_[static_cast<std::size_t>(a)] = (n - a) % n;
    for (int b = 0; b < n; ++b) g.mul_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  if (n <= 2) {
    const Field q = Field::rational();
    g.mult_ = GroupEmbedding{q, {}};
    for (int a = 0; a < n; ++a) g.mult_->image.emplace_back(a == 0 ? 1 : -1, q);
  } else {
    auto [q, root] = root_of_unity(static_cast<std::uint32_t>(n));
    const Field f = Field::gf(q);
    g.mult_ = GroupEmbedding{f, {}};
    for (int a = 0; a < n; ++a) {
      g.mult_->image.emplace_back(static_cast<std::int64_t>(pow_mod(root, static_cast<std::uint64_t>(a), q)), f);
    }
  }
  if (n == 1 || is_prime(static_cast<std::uint64_t>(n))) {
    const Field f = n == 1 ? Field::rational() : Field::gf(static_cast<std::uint64_t>(n));
    g.add_ = GroupEmbedding{f, {}};
    for (int a = 0; a < n; ++a) g.add_->image.emplace_back(a, f);
  }
  return g;
}

FiniteGroup FiniteGroup::table(std::vector<std::string> names, std::vector<std::vector<int>> mul,
                               std::optional<GroupEmbedding> multiplicative, std::optional<GroupEmbedding> additive) {
  FiniteGroup g;
  g.kind_ = Kind::Table;
  g.names_ = std::move(names);
  g.mul_ = std::move(mul);
  g.validate();
  if (multiplicative) g.check_embedding(*multiplicative, true);
  if (additive) g.check_embedding(*additive, false);
  g.mult_ = std::move(multiplicative);
  g.add_ = std::move(additive);
  return g;
}

void FiniteGroup::validate() {
  const int n = order();
  if (n == 0) throw Error(Errc::InvalidInput, "group has no elements");
  if (static_cast<int>(mul_.size()) != n) throw Error(Errc::InvalidInput, "multiplication table has the wrong size");
  std::set<std::string> distinct(names_.begin(), names_.end());
  if (static_cast<int>(distinct.size()) != n) throw Error(Errc::InvalidInput, "group element names repeat");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != n) throw Error(Errc::InvalidInput, "multiplication table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw Error(Errc::InvalidInput, "multiplication table entry out of range");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw Error(Errc::InvalidInput, "element 0 is not the identity");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw Error(Errc::InvalidInput, "multiplication is not associative");
      }
    }
  }
  auto& inv = inv_;
  inv.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) inv[static_cast<std::size_t>(a)] = b;
    }
    if (inv[static_cast<std::size_t>(a)] < 0) throw Error(Errc::InvalidInput, "element " + names_[static_cast<std::size_t>(a)] + " has no inverse");
  }
}

void FiniteGroup::check_embedding(const GroupEmbedding& e, bool multiplicative) const {
  const int n = order();
  if (static_cast<int>(e.image.size()) != n) throw Error(Errc::InvalidInput, "embedding has the wrong length");
  for (int a = 0; a < n; ++a) {
    const auto& ia = e.image[static_cast<std::size_t>(a)];
    if (!(ia.field() == e.field)) throw Error(Errc::InvalidInput, "embedding value over another field");
    if (multiplicative && ia.is_zero()) throw Error(Errc::InvalidInput, "multiplicative embedding hits zero");
    for (int b = 0; b < a; ++b) {
      if (ia == e.image[static_cast<std::size_t>(b)]) throw Error(Errc::InvalidInput, "embedding is not injective");
    }
    for (int b = 0; b < n; ++b) {
      const auto& ib = e.image[static_cast<std::size_t>(b)];
      const auto& iab = e.image[static_cast<std::size_t>(mul(a, b))];
      if (!(iab == (multiplicative ? ia * ib : ia + ib))) {
        throw Error(Errc::InvalidInput, "embedding is not a homomorphism");
      }
    }
  }
}

int FiniteGroup::element(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error(Errc::InvalidInput, "unknown group element '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

// ---- GainGraph --------------------------------------------------------------

GainGraph::GainGraph(int vertices, FiniteGroup group, const std::vector<GainEdge>& edges, std::vector<int> loops)
    : n_(vertices), group_(std::move(group)), loops_(std::move(loops)) {
  if (n_ < 0) throw Error(Errc::InvalidInput, "negative vertex count");
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) throw Error(Errc::InvalidInput, "edge endpoint out of range");
    if (e.u == e.v) throw Error(Errc::InvalidInput, "edges need distinct endpoints; use loops");
    if (e.g < 0 || e.g >= group_.order()) throw Error(Errc::InvalidInput, "gain out of range");
    edges_.push_back(e.u < e.v ? e : GainEdge{e.v, e.u, group_.inverse(e.g)});
  }
  std::sort(loops_.begin(), loops_.end());
  if (std::adjacent_find(loops_.begin(), loops_.end()) != loops_.end()) {
    throw Error(Errc::InvalidInput, "repeated loop");
  }
  for (int v : loops_) {
    if (v < 0 || v >= n_) throw Error(Errc::InvalidInput, "loop vertex out of range");
  }
}

bool GainGraph::has_loop(int v) const { return std::binary_search(loops_.begin(), loops_.end(), v); }

std::vector<std::string> GainGraph::atom_labels() const {
  std::vector<std::string> out;
  for (const auto& e : edges_) {
    out.push_back("{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}_" + group_.name(e.g));
  }
  for (int v : loops_) out.push_back("L" + std::to_string(v));
  return out;
}

GainGraph GainGraph::induced(const std::vector<int>& w) const {
  std::vector<int> keep = w;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> pos(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n_) throw Error(Errc::InvalidInput, "vertex out of range");
    pos[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  }
  std::vector<GainEdge> edges;
  for (const auto& e : edges_) {
    const int a = pos[static_cast<std::size_t>(e.u)], b = pos[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b, e.g});
  }
  std::vector<int> loops;
  for (int v : loops_) {
    if (pos[static_cast<std::size_t>(v)] >= 0) loops.push_back(pos[static_cast<std::size_t>(v)]);
  }
  return GainGraph(static_cast<int>(keep.size()), group_, edges, loops);
}

GainGraph GainGraph::without_vertex(int v) const {
  std::vector<int> rest;
  for (int u = 0; u < n_; ++u) {
    if (u != v) rest.push_back(u);
  }
  return induced(rest);
}

// ---- balance ----------------------------------------------------------------

bool BalanceReport::balanced() const {
  return std::all_of(components.begin(), components.end(), [](const BalanceComponent& c) { return c.balanced; });
}

BalanceReport analyze_balance(const GainGraph& g, Mask s) {
  const auto& G = g.group();
  const auto& edges = g.edges();
  const std::size_t ne = edges.size();
  const auto n = static_cast<std::size_t>(g.vertices());

  // adjacency: (neighbor, gain read toward neighbor, atom)
  std::vector<std::vector<std::tuple<int, int, int>>> adj(n);
  std::vector<bool> touched(n, false), looped(n, false);
  std::vector<int> loop_atom(n, -1);
  for (std::size_t i = 0; i < ne; ++i) {
    if (!(s & bit(i))) continue;
    const auto& e = edges[i];
    adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.g, static_cast<int>(i));
    adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, G.inverse(e.g), static_cast<int>(i));
    touched[static_cast<std::size_t>(e.u)] = touched[static_cast<std::size_t>(e.v)] = true;
  }
  for (std::size_t k = 0; k < g.loops().size(); ++k) {
    if (!(s & bit(ne + k))) continue;
    const auto v = static_cast<std::size_t>(g.loops()[k]);
    touched[v] = looped[v] = true;
    loop_atom[v] = static_cast<int>(ne + k);
  }

  BalanceReport report;
  std::vector<int> comp(n, -1), phi(n, 0), parent_atom(n, -1), parent(n, -1), depth(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (!touched[root] || comp[root] >= 0) continue;
    const int id = static_cast<int>(report.components.size());
    BalanceComponent c;
    std::vector<std::size_t> queue{root};
    comp[root] = id;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t u = queue[qi];
      for (auto [w, gain, atom] : adj[u]) {
        const auto uw = static_cast<std::size_t>(w);
        if (comp[uw] >= 0) continue;
        comp[uw] = id;
        phi[uw] = G.mul(phi[u], gain);
        parent[uw] = static_cast<int>(u);
        parent_atom[uw] = atom;
        depth[uw] = depth[u] + 1;
        queue.push_back(uw);
      }
    }
    std::sort(queue.begin(), queue.end());
    for (std::size_t v : queue) {
      c.vertices.push_back(static_cast<int>(v));
      c.potential.push_back(phi[v]);
      if (looped[v]) {
        c.balanced = false;
        report.unbalanced_cycles.push_back(bit(static_cast<std::size_t>(loop_atom[v])));
      }
    }
    // Chords: each edge seen from its lower endpoint only.
    for (std::size_t v : queue) {
      for (auto [w, gain, atom] : adj[v]) {
        const auto& e = edges[static_cast<std::size_t>(atom)];
        if (static_cast<std::size_t>(e.u) != v) continue;
        if (parent_atom[static_cast<std::size_t>(w)] == atom || parent_atom[v] == atom) continue;
        if (G.mul(phi[v], gain) == phi[static_cast<std::size_t>(w)]) continue;
        c.balanced = false;
        Mask cycle = bit(static_cast<std::size_t>(atom));
        auto a = v, b = static_cast<std::size_t>(w);
        while (a != b) {
          if (depth[a] >= depth[b]) {
            cycle |= bit(static_cast<std::size_t>(parent_atom[a]));
            a = static_cast<std::size_t>(parent[a]);
          } else {
            cycle |= bit(static_cast<std::size_t>(parent_atom[b]));
            b = static_cast<std::size_t>(parent[b]);
          }
        }
        report.unbalanced_cycles.push_back(cycle);
      }
    }
    report.components.push_back(std::move(c));
  }
  return report;
}

namespace {

struct ComponentCount {
  int vertices = 0;
  int atoms = 0;
  bool balanced = true;
};

std::vector<ComponentCount> component_counts(const GainGraph& g, Mask s) {
  const auto report = analyze_balance(g, s);
  const std::size_t ne = g.edges().size();
  std::vector<int> comp_of(static_cast<std::size_t>(g.vertices()), -1);
  std::vector<ComponentCount> out(report.components.size());
  for (std::size_t c = 0; c < report.components.size(); ++c) {
    out[c].vertices = static_cast<int>(report.components[c].vertices.size());
    out[c].balanced = report.components[c].balanced;
    for (int v : report.components[c].vertices) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }
  for (int i : mask_to_indices(s)) {
    const auto ui = static_cast<std::size_t>(i);
    const int v = ui < ne ? g.edges()[ui].u : g.loops()[ui - ne];
    ++out[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(v)])].atoms;
  }
  return out;
}

int frame_rank(const GainGraph& g, Mask s) {
  int r = 0;
  for (const auto& c : component_counts(g, s)) r += c.vertices - 1 + (c.balanced ? 0 : 1);
  return r;
}

}  // namespace

bool frame_independent(const GainGraph& g, Mask s) {
  for (const auto& c : component_counts(g, s)) {
    if (c.atoms > c.vertices) return false;
    if (c.atoms == c.vertices && c.balanced) return false;
  }
  return true;
}

bool lift_independent(const GainGraph& g, Mask s) {
  const bool inf = s & 1U;
  const Mask edges = s >> 1;
  int excess = inf ? 1 : 0;
  bool balanced = true;
  for (const auto& c : component_counts(g, edges)) {
    excess += c.atoms - c.vertices + 1;
    balanced = balanced && c.balanced;
  }
  if (excess > 1) return false;
  return inf || excess == 0 || !balanced;
}

Matroid frame_matroid(const GainGraph& g) {
  if (g.atom_count() > kMaxGroundSet) throw Error(Errc::TooLarge, "more than 64 atoms");
  const auto labels = g.atom_labels();
  const Matroid probe(g.atom_count(), [g](Mask s) { return frame_rank(g, s); }, Backend::Frame);
  auto pairs = probe.parallel_pairs();
  if (!pairs.empty()) {
    throw Error(Errc::NotSimpleFrame, "atoms " + std::to_string(pairs[0].first) + " and " +
                                          std::to_string(pairs[0].second) + " (" + labels[static_cast<std::size_t>(pairs[0].first)] +
                                          ") are parallel");
  }
  return Matroid(g.atom_count(), [g](Mask s) { return frame_rank(g, s); }, Backend::Frame, labels);
}

Matroid lift_matroid(const GainGraph& g) {
  if (!g.loops().empty()) throw Error(Errc::HasLoops, "extended lift matroids need a loopless gain graph");
  const std::size_t n = g.edges().size() + 1;
  if (n > kMaxGroundSet) throw Error(Errc::TooLarge, "more than 64 atoms");
  std::vector<std::string> labels{"inf"};
  for (auto& l : g.atom_labels()) labels.push_back(l);
  auto rank = [g](Mask s) {
    Mask basis = 0;
    int r = 0;
    for (int i : mask_to_indices(s)) {
      if (lift_independent(g, basis | bit(static_cast<std::size_t>(i)))) {
        basis |= bit(static_cast<std::size_t>(i));
        ++r;
      }
    }
    return r;
  };
  auto pairs = Matroid(n, rank, Backend::Lift).parallel_pairs();
  if (!pairs.empty()) {
    throw Error(Errc::NotSimple, "atoms " + std::to_string(pairs[0].first) + " and " + std::to_string(pairs[0].second) +
                                     " (" + labels[static_cast<std::size_t>(pairs[0].first)] + ") are parallel");
  }
  return Matroid(n, rank, Backend::Lift, labels);
}

Mask frame_induced_atoms(const GainGraph& g, const std::vector<int>& w) {
  std::vector<bool> in(static_cast<std::size_t>(g.vertices()), false);
  for (int v : w) in.at(static_cast<std::size_t>(v)) = true;
  Mask out = lift_induced_atoms(g, w) >> 1;
  const std::size_t ne = g.edges().size();
  for (std::size_t k = 0; k < g.loops().size(); ++k) {
    if (in[static_cast<std::size_t>(g.loops()[k])]) out |= bit(ne + k);
  }
  return out;
}

Mask lift_induced_atoms(const GainGraph& g, const std::vector<int>& w) {
  std::vector<bool> in(static_cast<std::size_t>(g.vertices()), false);
  for (int v : w) in.at(static_cast<std::size_t>(v)) = true;
  Mask out = 0;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]) out |= bit(i + 1);
  }
  return out;
}

// ---- simplicial vertices ----------------------------------------------------

namespace {

/// (u, w, gain read from u to w) for both orientations of every edge.
std::set<std::tuple<int, int, int>> oriented_edges(const GainGraph& g) {
  std::set<std::tuple<int, int, int>> out;
  for (const auto& e : g.edges()) {
    out.emplace(e.u, e.v, e.g);
    out.emplace(e.v, e.u, g.group().inverse(e.g));
  }
  return out;
}

/// (neighbor u, gain read from u to v) for edges at v.
std::vector<std::pair<int, int>> into(const GainGraph& g, int v) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) {
    if (e.v == v) out.emplace_back(e.u, e.g);
    if (e.u == v) out.emplace_back(e.v, g.group().inverse(e.g));
  }
  return out;
}

bool closes_triangles(const GainGraph& g, int v, const std::set<std::tuple<int, int, int>>& oriented) {
  const auto in = into(g, v);
  for (auto [u, gu] : in) {
    for (auto [w, gw] : in) {
      if (u == w) continue;
      // {u,v}_g and {v,w}_h with h = gw⁻¹ require {u,w}_{gh}.
      const int gh = g.group().mul(gu, g.group().inverse(gw));
      if (!oriented.count({u, w, gh})) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<int> bias_simplicial_vertices(const GainGraph& g) {
  const auto oriented = oriented_edges(g);
  std::vector<int> out;
  for (int v = 0; v < g.vertices(); ++v) {
    if (!closes_triangles(g, v, oriented)) continue;
    const auto in = into(g, v);
    bool ok = true;
    for (auto [u, gu] : in) {
      for (auto [w, gw] : in) {
        if (u == w && gu != gw && !g.has_loop(u)) ok = false;
      }
      if (g.has_loop(v) && !g.has_loop(u)) ok = false;
    }
    if (ok) out.push_back(v);
  }
  return out;
}

std::vector<int> link_simplicial_vertices(const GainGraph& g) {
  if (!g.loops().empty()) throw Error(Errc::HasLoops, "link-simplicial vertices are defined for loopless gain graphs");
  const auto oriented = oriented_edges(g);
  std::vector<int> out;
  for (int v = 0; v < g.vertices(); ++v) {
    if (closes_triangles(g, v, oriented)) out.push_back(v);
  }
  return out;
}

// ---- generators ---------------------------------------------------------------

GainGraph complete_gain_graph(int n, const FiniteGroup& group, bool loops) {
  if (n < 0) throw Error(Errc::InvalidInput, "negative vertex count");
  std::vector<GainEdge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int a = 0; a < group.order(); ++a) edges.push_back({i, j, a});
    }
  }
  std::vector<int> ls;
  if (loops) {
    for (int i = 0; i < n; ++i) ls.push_back(i);
  }
  return GainGraph(n, group, edges, ls);
}

GainGraph bowtie(bool loops) {
  std::vector<GainEdge> edges{{0, 1, 0}, {0, 2, 0}, {1, 2, 0}, {1, 2, 1}, {0, 3, 0}, {0, 4, 0}, {3, 4, 0}, {3, 4, 1}};
  std::vector<int> ls;
  if (loops) ls = {0, 1, 2, 3, 4};
  return GainGraph(5, FiniteGroup::sign(), edges, ls);
}

GainGraph fish(const FiniteGroup& group) {
  std::vector<GainEdge> edges{{0, 1, 0}};
  for (int a = 0; a < group.order(); ++a) edges.push_back({1, 2, a});
  return GainGraph(3, group, edges, {0});
}

bool is_signed_star_type(const GainGraph& g) {
  if (g.group().kind() != FiniteGroup::Kind::Sign || !g.loops().empty() || g.vertices() == 0) return false;
  const int n = g.vertices();
  SimpleGraph positive{n, {}};
  std::vector<std::pair<int, int>> negative;
  std::set<std::pair<int, int>> seen_pos;
  for (const auto& e : g.edges()) {
    if (e.g == 0) {
      if (!seen_pos.insert({e.u, e.v}).second) return false;
      positive.edges.emplace_back(e.u, e.v);
    } else {
      negative.emplace_back(e.u, e.v);
    }
  }
  // connected
  std::vector<int> comp(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) comp[static_cast<std::size_t>(v)] = v;
  auto find = [&](int v) {
    while (comp[static_cast<std::size_t>(v)] != v) v = comp[static_cast<std::size_t>(v)] = comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
    return v;
  };
  for (const auto& e : g.edges()) comp[static_cast<std::size_t>(find(e.u))] = find(e.v);
  for (int v = 1; v < n; ++v) {
    if (find(v) != find(0)) return false;
  }
  if (!is_chordal(positive)) return false;
  if (negative.empty()) return true;

  std::vector<int> centers{negative[0].first, negative[0].second};
  for (int u : centers) {
    std::vector<int> leaves;
    bool star = true;
    for (auto [a, b] : negative) {
      if (a == u) leaves.push_back(b);
      else if (b == u) leaves.push_back(a);
      else star = false;
    }
    if (!star) continue;
    std::sort(leaves.begin(), leaves.end());
    if (std::adjacent_find(leaves.begin(), leaves.end()) != leaves.end()) continue;
    bool clique = true;
    for (std::size_t i = 0; i < leaves.size() && clique; ++i) {
      for (std::size_t j = i + 1; j < leaves.size() && clique; ++j) clique = positive.adjacent(leaves[i], leaves[j]);
    }
    if (clique) return true;
  }
  return false;
}

// ---- realizations ---------------------------------------------------------------

Arrangement realize_frame_arrangement(const GainGraph& g) {
  const auto& emb = g.group().multiplicative();
  if (!emb) throw Error(Errc::NoMultiplicativeEmbedding, "gain group has no multiplicative embedding");
  const Field f = emb->field;
  const auto n = static_cast<std::size_t>(g.vertices());
  std::vector<std::vector<FieldScalar>> forms;
  for (const auto& e : g.edges()) {
    std::vector<FieldScalar> row(n, FieldScalar(0, f));
    row[static_cast<std::size_t>(e.u)] = FieldScalar(1, f);
    row[static_cast<std::size_t>(e.v)] = -emb->image[static_cast<std::size_t>(e.g)];
    forms.push_back(std::move(row));
  }
  for (int v : g.loops()) {
    std::vector<FieldScalar> row(n, FieldScalar(0, f));
    row[static_cast<std::size_t>(v)] = FieldScalar(1, f);
    forms.push_back(std::move(row));
  }
  return make_arrangement(f, g.vertices(), forms, g.atom_labels());
}

Arrangement realize_lift_arrangement(const GainGraph& g) {
  if (!g.loops().empty()) throw Error(Errc::HasLoops, "lift realization needs a loopless gain graph");
  const auto& emb = g.group().additive();
  if (!emb) throw Error(Errc::NoAdditiveEmbedding, "gain group has no additive embedding");
  const Field f = emb->field;
  const auto n = static_cast<std::size_t>(g.vertices());
  std::vector<std::vector<FieldScalar>> forms;
  std::vector<FieldScalar> z(n + 1, FieldScalar(0, f));
  z[n] = FieldScalar(1, f);
  forms.push_back(z);
  std::vector<std::string> labels{"inf"};
  for (auto& l : g.atom_labels()) labels.push_back(l);
  for (const auto& e : g.edges()) {
    std::vector<FieldScalar> row(n + 1, FieldScalar(0, f));
    row[static_cast<std::size_t>(e.u)] = FieldScalar(1, f);
    row[static_cast<std::size_t>(e.v)] = FieldScalar(-1, f);
    row[n] = -emb->image[static_cast<std::size_t>(e.g)];
    forms.push_back(std::move(row));
  }
  return make_arrangement(f, g.vertices() + 1, forms, labels);
}

}  // namespace modjoin
