#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modjoin/field.hpp"
#include "modjoin/subset.hpp"

namespace modjoin {

struct SimpleGraph;

enum class Backend { Linear, Graphic, Frame, Lift, Explicit };
std::string_view backend_name(Backend b) noexcept;

/// Desk-scale guardrails for anything that enumerates subsets or flats.
struct Limits {
  std::size_t max_atoms = 24;
  std::size_t max_flats = std::size_t{1} << 20;
};

/// A closed subset together with its rank.
struct Flat {
  Subset atoms;
  int rank = 0;

  Mask bits() const noexcept { return atoms.bits(); }
  friend bool operator==(const Flat&, const Flat&) = default;
};

/// Matroid given by a rank oracle on subsets of 0..n-1. Values are immutable;
/// copies share one memo table, which is safe for concurrent use.
class Matroid {
 public:
  using RankOracle = std::function<int(Mask)>;

  Matroid();
  Matroid(std::size_t n, RankOracle oracle, Backend backend, std::vector<std::string> labels = {});

  std::size_t size() const noexcept;
  Backend backend() const noexcept;
  const std::vector<std::string>& labels() const noexcept;
  std::string label(std::size_t atom) const;
  Subset ground() const { return Subset::full(size()); }
  Mask ground_mask() const noexcept { return full_mask(size()); }
  int full_rank() const noexcept;

  int rank(Mask s) const;
  int rank(const Subset& s) const { return rank(s.bits()); }

  Mask closure_mask(Mask s) const;
  Flat closure(const Subset& s) const;
  bool is_flat(Mask s) const { return closure_mask(s) == s; }

  /// Atoms of rank 0.
  std::vector<int> loops() const;
  /// Pairs {a,b} with r({a,b}) = 1 and neither a loop.
  std::vector<std::pair<int, int>> parallel_pairs() const;
  bool is_simple() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// Column matroid of a representation matrix. Zero or pairwise proportional
/// columns are rejected with Errc::NotSimple naming the offending columns.
Matroid linear_matroid(const FieldMatrix& m, std::vector<std::string> labels = {});

/// Cycle matroid of a simple graph: r(S) = |V(S)| - components(S).
Matroid graphic_matroid(const SimpleGraph& g);

/// U_{k,n}: r(S) = min(|S|, k).
Matroid uniform_matroid(int k, std::size_t n);

/// Restriction to a flat; atom i of the result is the i-th smallest atom of x.
/// Throws Errc::NotAFlat.
Matroid restrict(const Matroid& m, const Subset& x);

struct Contraction {
  Matroid matroid;
  /// For every atom of m: the atom of the simplified contraction it maps to,
  /// or -1 for atoms of the contracted flat.
  std::vector<int> atom_map;
  /// For every atom of the result: the flat of m covering x it stands for.
  std::vector<Mask> atom_flats;
};

/// si(M/x): atoms are the flats covering x, with r'(T) = r(x ∪ T) - r(x).
/// Throws Errc::NotAFlat.
Contraction contract_simplify(const Matroid& m, const Subset& x);

/// Refuses ground sets above the limit with Errc::TooLarge.
void check_atom_limit(const Matroid& m, const Limits& limits);

}  // namespace modjoin
