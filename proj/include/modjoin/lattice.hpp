#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "modjoin/matroid.hpp"
#include "modjoin/poly.hpp"

namespace modjoin {

/// The geometric lattice of flats of a simple matroid. Flats are stored by
/// rank, and within a rank in lexicographic order of their atom lists, so
/// indices are deterministic. Immutable once built.
class FlatLattice {
 public:
  using Index = std::size_t;

  const Matroid& matroid() const noexcept { return matroid_; }
  std::size_t size() const noexcept { return flats_.size(); }
  int rank() const noexcept { return static_cast<int>(levels_.size()) - 1; }

  const Flat& flat(Index i) const { return flats_.at(i); }
  Mask mask(Index i) const { return flats_[i].bits(); }
  int rank_of(Index i) const { return flats_[i].rank; }

  std::optional<Index> find(Mask m) const;
  /// Throws Errc::NotAFlat.
  Index index_of(const Subset& s) const;

  Index bottom() const noexcept { return 0; }
  Index top() const noexcept { return flats_.size() - 1; }
  const std::vector<Index>& level(int k) const { return levels_.at(static_cast<std::size_t>(k)); }
  const std::vector<Index>& atoms() const { return level(std::min(1, rank())); }
  const std::vector<Index>& coatoms() const { return level(std::max(0, rank() - 1)); }
  /// Flats covering i.
  const std::vector<Index>& covers(Index i) const { return covers_.at(i); }

  bool leq(Index a, Index b) const noexcept { return is_subset(mask(a), mask(b)); }
  /// Flats F with bottom <= F <= top, ordered as in the lattice.
  std::vector<Index> interval(Index bottom, Index top) const;
  /// Coatoms of the interval [0, top].
  std::vector<Index> coatoms_below(Index top) const;

  /// Number of flats per rank.
  std::vector<std::size_t> rank_counts() const;

 private:
  friend FlatLattice enumerate_flats(const Matroid& m, const Limits& limits);

  Matroid matroid_;
  std::vector<Flat> flats_;
  std::vector<std::vector<Index>> levels_;
  std::vector<std::vector<Index>> covers_;
  std::unordered_map<Mask, Index> index_;
};

/// Closure BFS: every rank-(k+1) flat is cl(F ∪ a) for a rank-k flat F.
/// Throws Errc::TooLarge beyond the atom or flat limits, Errc::NotSimple on
/// non-simple input.
FlatLattice enumerate_flats(const Matroid& m, const Limits& limits = {});

/// mu(0, X) for every flat, indexed like the lattice.
struct MobiusTable {
  std::vector<std::int64_t> values;
  std::int64_t operator[](FlatLattice::Index i) const { return values.at(i); }
};

MobiusTable mobius(const FlatLattice& l);

/// mu(bottom, Y) for Y in l.interval(bottom, top), aligned with that list.
std::vector<std::int64_t> interval_mobius(const FlatLattice& l, FlatLattice::Index bottom,
                                          FlatLattice::Index top);

IntPolynomial charpoly(const FlatLattice& l);
IntPolynomial charpoly(const Matroid& m, const Limits& limits = {});

/// Characteristic polynomial of [bottom, top] as a geometric lattice.
/// Throws Errc::NotComparable unless bottom <= top.
IntPolynomial interval_charpoly(const FlatLattice& l, FlatLattice::Index bottom, FlatLattice::Index top);
IntPolynomial interval_charpoly(const FlatLattice& l, const Flat& bottom, const Flat& top);

}  // namespace modjoin
