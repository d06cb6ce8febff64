#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "modjoin/lattice.hpp"

namespace modjoin {

enum class Criterion { RankEquation, CoatomTriangle, ShortCircuit };
std::string_view criterion_name(Criterion c) noexcept;

/// Verdict of one modularity criterion together with what it found.
struct ModularityWitness {
  bool modular = true;
  Criterion criterion = Criterion::RankEquation;
  /// RankEquation failure: a flat Y with r(X)+r(Y) != r(X∧Y)+r(X∨Y).
  std::optional<Subset> violating_flat;
  /// ShortCircuit failure: a circuit C and atom e in C\X with no short circuit.
  std::optional<Subset> circuit;
  std::optional<int> atom;
  /// CoatomTriangle failure: an outside pair with no third atom in X.
  std::optional<std::pair<int, int>> uncovered_pair;
  /// CoatomTriangle success: one triangle (e, e', e'') per outside pair.
  std::vector<std::array<int, 3>> triangles;
};

// Lattice-level primitives. `top` selects the restriction M|top; pass
// l.top() for M itself.

/// Rank-equation test of x against every flat below top. On failure the
/// offending flat index is written to *violator.
bool is_modular_in(const FlatLattice& l, FlatLattice::Index x, FlatLattice::Index top,
                   FlatLattice::Index* violator = nullptr);
/// All flats of M|top that are modular in M|top, in lattice order.
std::vector<FlatLattice::Index> modular_flats(const FlatLattice& l, FlatLattice::Index top);
/// Coatoms of [0, top] that are modular in M|top.
std::vector<FlatLattice::Index> modular_coatoms(const FlatLattice& l, FlatLattice::Index top);
/// M|top is round; on failure *cover receives two covering coatoms.
bool is_round_within(const FlatLattice& l, FlatLattice::Index top,
                     std::pair<FlatLattice::Index, FlatLattice::Index>* cover = nullptr);

/// Rank equation r(X)+r(Y) = r(X∩Y)+r(cl(X∪Y)) against every flat Y.
/// Throws Errc::NotAFlat.
ModularityWitness is_modular_flat(const FlatLattice& l, const Subset& x);
ModularityWitness is_modular_flat(const Matroid& m, const Subset& x, const Limits& limits = {});

/// Coatom criterion: every pair outside x spans a triangle with an atom of x.
/// Throws Errc::NotACoatom.
ModularityWitness is_modular_coatom_triangle(const Matroid& m, const Subset& x);

/// All circuits, by increasing cardinality then lexicographically.
std::vector<Subset> circuits(const Matroid& m, const Limits& limits = {});

/// Modular short-circuit axiom over every circuit. Throws Errc::EmptyFlat for
/// x = ∅ and Errc::NotAFlat for non-flats.
ModularityWitness short_circuit_check(const Matroid& m, const Subset& x, const Limits& limits = {});
ModularityWitness short_circuit_check(const Matroid& m, const Subset& x, const std::vector<Subset>& circuits);

struct RoundnessWitness {
  bool round = true;
  /// Two coatoms whose union is the ground set, when not round.
  std::optional<std::pair<Subset, Subset>> cover;
};

RoundnessWitness is_round(const FlatLattice& l);
RoundnessWitness is_round(const Matroid& m, const Limits& limits = {});

/// Depth-first search for a saturated chain of modular flats, backtracking
/// over modular coatoms in lattice order. Returns ∅ = X0 ⊂ ... ⊂ Xr = E.
std::optional<std::vector<Flat>> supersolvable_chain(const FlatLattice& l);
std::optional<std::vector<Flat>> supersolvable_chain(const Matroid& m, const Limits& limits = {});

/// f(a,b) for every pair a < b outside a modular coatom x: the unique atom of
/// x completing a circuit. Throws Errc::NotModularCoatom when x is not a
/// coatom, or a pair has no such atom or more than one.
std::map<std::pair<int, int>, int> coatom_pairing(const Matroid& m, const Subset& x);

}  // namespace modjoin
