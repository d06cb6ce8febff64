#include "modjoin/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "modjoin/errors.hpp"

namespace modjoin {

void SimpleGraph::validate() const {
  if (vertices < 0) throw Error(Errc::InvalidInput, "negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw Error(Errc::InvalidInput, "edge endpoint out of range");
    }
    if (u == v) throw Error(Errc::InvalidInput, "graph has a loop at vertex " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw Error(Errc::InvalidInput, "repeated edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
  }
}

bool SimpleGraph::adjacent(int u, int v) const {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  });
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertices));
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g{n, {}};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  }
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g{n, {}};
  for (int i = 0; i < n; ++i) g.edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return g;
}

SimpleGraph graph_from_code(int vertices, unsigned code) {
  SimpleGraph g{vertices, {}};
  unsigned k = 0;
  for (int i = 0; i < vertices; ++i) {
    for (int j = i + 1; j < vertices; ++j, ++k) {
      if ((code >> k) & 1U) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

std::optional<std::vector<int>> perfect_elimination_ordering(const SimpleGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertices);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges) {
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  }
  std::vector<bool> removed(n, false);
  std::vector<int> order;
  for (std::size_t step = 0; step < n; ++step) {
    bool found = false;
    for (std::size_t v = 0; v < n && !found; ++v) {
      if (removed[v]) continue;
      std::vector<std::size_t> nbrs;
      for (std::size_t u = 0; u < n; ++u) {
        if (!removed[u] && adj[v][u]) nbrs.push_back(u);
      }
      bool clique = true;
      for (std::size_t a = 0; a < nbrs.size() && clique; ++a) {
        for (std::size_t b = a + 1; b < nbrs.size() && clique; ++b) clique = adj[nbrs[a]][nbrs[b]];
      }
      if (clique) {
        removed[v] = true;
        order.push_back(static_cast<int>(v));
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return order;
}

bool is_chordal(const SimpleGraph& g) { return perfect_elimination_ordering(g).has_value(); }

unsigned canonical_code(const SimpleGraph& g) {
  const int n = g.vertices;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  auto pair_index = [n](int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<unsigned>(i * n - i * (i + 1) / 2 + (j - i - 1));
  };
  unsigned best = ~0U;
  do {
    unsigned code = 0;
    for (auto [u, v] : g.edges) {
      code |= 1U << pair_index(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace modjoin
