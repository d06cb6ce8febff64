#pragma once

#include <optional>
#include <vector>

#include "modjoin/certificate.hpp"
#include "modjoin/lattice.hpp"

namespace modjoin {

/// E = E1 ∪ E2 with E1, E2 proper modular flats meeting in X.
struct JoinDecomposition {
  Subset e1;
  Subset e2;
  Subset x;
  bool x_round = false;
};

/// Modular joins of M|top, ordered by rank of X, then X, then (E1, E2) in
/// lattice order.
std::vector<JoinDecomposition> find_modular_joins(const FlatLattice& l, FlatLattice::Index top);
std::vector<JoinDecomposition> find_modular_joins(const FlatLattice& l);
std::vector<JoinDecomposition> find_modular_joins(const Matroid& m, const Limits& limits = {});

struct BrylawskiTerms {
  IntPolynomial whole;
  IntPolynomial meet;
  IntPolynomial first;
  IntPolynomial second;
};

/// χ(M)·χ(M|X) = χ(M|E1)·χ(M|E2). Throws Errc::IdentityViolation listing all
/// four polynomials.
BrylawskiTerms brylawski_identity_check(const FlatLattice& l, const JoinDecomposition& d);

/// Membership in the class generated from the empty matroid by modular
/// coatom extensions and modular joins over round flats. Memoized by flat;
/// coatoms are tried before joins, each in deterministic order.
std::optional<Certificate> me_certify(const FlatLattice& l);
std::optional<Certificate> me_certify(const Matroid& m, const Limits& limits = {});

struct LiftCheck {
  /// False when e is not a divisional atom of M|E1 outside X (nothing to lift).
  bool applicable = false;
  IntPolynomial contraction;          // χ(si(M/e))
  IntPolynomial first_contraction;    // χ(si(M1/e))
};

/// For e ∈ E1 \ X divisional in M|E1: e is divisional in M and
/// χ(si(M/e))·χ(M|X) = χ(si(M1/e))·χ(M2). Throws Errc::LiftViolation.
LiftCheck join_divisional_lift_check(const FlatLattice& l, const JoinDecomposition& d, int e);

}  // namespace modjoin
