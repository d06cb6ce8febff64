#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modjoin/arrangement.hpp"
#include "modjoin/matroid.hpp"

namespace modjoin {

/// Injective homomorphism of a finite group into K^× or K^+.
struct GroupEmbedding {
  Field field;
  std::vector<FieldScalar> image;
};

/// Finite group by multiplication table, identity at index 0.
class FiniteGroup {
 public:
  enum class Kind { Trivial, Sign, ZMod, Table };

  static FiniteGroup trivial();
  /// {1, -1} under multiplication; embeds multiplicatively in Q and additively in GF(2).
  static FiniteGroup sign();
  /// Z/n under addition, elements "0".."n-1". Multiplicative embedding into
  /// the smallest GF(q) with n | q-1; additive embedding into GF(n) for prime n.
  static FiniteGroup zmod(int n);
  /// Throws Errc::InvalidInput unless the table is a group with identity 0.
  /// Embeddings, when given, must be injective homomorphisms.
  static FiniteGroup table(std::vector<std::string> names, std::vector<std::vector<int>> mul,
                           std::optional<GroupEmbedding> multiplicative = std::nullopt,
                           std::optional<GroupEmbedding> additive = std::nullopt);

  Kind kind() const noexcept { return kind_; }
  int order() const noexcept { return static_cast<int>(names_.size()); }
  int identity() const noexcept { return 0; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inverse(int a) const { return inv_[a]; }
  const std::string& name(int a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::vector<int>>& table() const noexcept { return mul_; }
  /// Throws Errc::InvalidInput for unknown names.
  int element(const std::string& name) const;

  const std::optional<GroupEmbedding>& multiplicative() const noexcept { return mult_; }
  const std::optional<GroupEmbedding>& additive() const noexcept { return add_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.names_ == b.names_ && a.mul_ == b.mul_;
  }

 private:
  void validate();
  void check_embedding(const GroupEmbedding& e, bool multiplicative) const;

  Kind kind_ = Kind::Trivial;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::optional<GroupEmbedding> mult_;
  std::optional<GroupEmbedding> add_;
};

/// {u,v}_g with u < v: the gain read from u to v is g.
struct GainEdge {
  int u = 0;
  int v = 0;
  int g = 0;
  friend bool operator==(const GainEdge&, const GainEdge&) = default;
};

/// Gain graph on vertices 0..n-1. Frame atoms are the edges in order, then
/// the loops in increasing vertex order.
class GainGraph {
 public:
  GainGraph() = default;
  /// Edges may be given in either orientation; (v,u,g) is stored as
  /// (u,v,g⁻¹). Throws Errc::InvalidInput on bad endpoints, u = v, or
  /// repeated loops.
  GainGraph(int vertices, FiniteGroup group, const std::vector<GainEdge>& edges, std::vector<int> loops = {});

  int vertices() const noexcept { return n_; }
  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<GainEdge>& edges() const noexcept { return edges_; }
  const std::vector<int>& loops() const noexcept { return loops_; }
  bool has_loop(int v) const;
  std::size_t atom_count() const noexcept { return edges_.size() + loops_.size(); }
  std::vector<std::string> atom_labels() const;

  /// Γ[W] with vertices renumbered in increasing order.
  GainGraph induced(const std::vector<int>& w) const;
  GainGraph without_vertex(int v) const;

 private:
  int n_ = 0;
  FiniteGroup group_ = FiniteGroup::trivial();
  std::vector<GainEdge> edges_;
  std::vector<int> loops_;
};

struct BalanceComponent {
  std::vector<int> vertices;
  /// potential[i] belongs to vertices[i]; tree edges satisfy φ(u)·g = φ(v).
  std::vector<int> potential;
  bool balanced = true;
};

struct BalanceReport {
  std::vector<BalanceComponent> components;
  /// Unbalanced cycles found (loops, or a chord plus its tree path), as atom sets.
  std::vector<Mask> unbalanced_cycles;
  bool balanced() const;
};

/// s ranges over frame atoms (edges then loops). Only vertices touched by s
/// form components.
BalanceReport analyze_balance(const GainGraph& g, Mask s);

/// Independence per component: no balanced cycle, at most one unbalanced cycle.
bool frame_independent(const GainGraph& g, Mask s);
/// Lift atoms: 0 is ∞, 1.. are the edges. No balanced cycle, and at most
/// either ∞ or one unbalanced cycle.
bool lift_independent(const GainGraph& g, Mask s);

/// r(S) = Σ over components (|V(c)| - 1 + [c unbalanced]). Throws
/// Errc::NotSimpleFrame on parallel atoms.
Matroid frame_matroid(const GainGraph& g);
/// Rank by greedy growth under lift_independent. Atom 0 is ∞. Throws
/// Errc::HasLoops, and Errc::NotSimple on parallel atoms.
Matroid lift_matroid(const GainGraph& g);

/// Atom set of Γ[W] in the frame matroid (edges inside W, loops on W).
Mask frame_induced_atoms(const GainGraph& g, const std::vector<int>& w);
/// Edges of Γ[W] as lift atoms (∞ not included).
Mask lift_induced_atoms(const GainGraph& g, const std::vector<int>& w);

std::vector<int> bias_simplicial_vertices(const GainGraph& g);
/// Throws Errc::HasLoops.
std::vector<int> link_simplicial_vertices(const GainGraph& g);

GainGraph complete_gain_graph(int n, const FiniteGroup& group, bool loops);
/// The signed bowtie: center 0 joined positively to 1,2,3,4; digons {1,2}
/// and {3,4} carrying both signs. With loops, every vertex gets one.
GainGraph bowtie(bool loops);
/// Loop at 0, edge {0,1}, and every gain on {1,2}.
GainGraph fish(const FiniteGroup& group);

/// Connected loopless signed graph whose positive edges are chordal, whose
/// negative edges form a star at some u, and whose star leaves form a
/// positive clique.
bool is_signed_star_type(const GainGraph& g);

/// A_×(Γ): x_i - g x_j for edges, x_i for loops. Throws Errc::NoMultiplicativeEmbedding.
Arrangement realize_frame_arrangement(const GainGraph& g);
/// A_+(Γ) in K^{n+1} with z last: z first, then x_i - x_j - g z. Throws
/// Errc::NoAdditiveEmbedding, Errc::HasLoops.
Arrangement realize_lift_arrangement(const GainGraph& g);

}  // namespace modjoin
