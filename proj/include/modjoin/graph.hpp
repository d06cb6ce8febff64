#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace modjoin {

/// Simple undirected graph on vertices 0..vertices-1; edge order defines the
/// atom order of its graphic matroid.
struct SimpleGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  /// Throws Errc::InvalidInput on loops, repeated edges or bad endpoints.
  void validate() const;
  bool adjacent(int u, int v) const;
  std::vector<std::vector<int>> adjacency() const;
};

SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);

/// Graph on `vertices` vertices whose edges are the set bits of `code` over
/// the lexicographic list of vertex pairs.
SimpleGraph graph_from_code(int vertices, unsigned code);

/// A perfect elimination ordering found by repeatedly removing a simplicial
/// vertex (smallest index first), or nullopt when the graph is not chordal.
std::optional<std::vector<int>> perfect_elimination_ordering(const SimpleGraph& g);
bool is_chordal(const SimpleGraph& g);

/// Smallest code among all vertex relabelings of g (exhaustive, n <= 8).
unsigned canonical_code(const SimpleGraph& g);

}  // namespace modjoin
