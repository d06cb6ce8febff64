#pragma once

#include <optional>
#include <vector>

#include "modjoin/lattice.hpp"

namespace modjoin {

struct DivisionalVerdict {
  bool divisional = false;
  /// χ(M) / χ(si(M/e)) when exact; always t - a for some integer a.
  std::optional<IntPolynomial> quotient;
  IntPolynomial parent;
  IntPolynomial contraction;
};

/// Tests whether χ(si(M/e)) divides χ(M). e is a ground-set atom index.
DivisionalVerdict is_divisional_atom(const FlatLattice& l, int e);
DivisionalVerdict is_divisional_atom(const Matroid& m, int e, const Limits& limits = {});

/// ∅ = X0 ⊂ X1 ⊂ ... ⊂ Xr = E with r(Xi) = i, quotients[i] = χ(M/Xi) / χ(M/X(i+1)).
struct DivisionalFlag {
  std::vector<Flat> flats;
  std::vector<IntPolynomial> quotients;

  /// a_i with quotients[i] = t - a_i.
  std::vector<mpz_class> roots() const;
};

/// Backtracking search over divisional atoms of successive contractions,
/// memoizing dead contraction flats. Atoms are tried in lattice order.
std::optional<DivisionalFlag> divisional_flag(const FlatLattice& l);
std::optional<DivisionalFlag> divisional_flag(const Matroid& m, const Limits& limits = {});

/// Returns a - if quotient = t - a, else nullopt.
std::optional<mpz_class> linear_root(const IntPolynomial& quotient);

struct StanleyVerdict {
  bool divides = false;
  std::optional<IntPolynomial> quotient;
};

/// χ(M|X) divides χ(M) for modular X. Throws Errc::NotModular when x fails
/// the rank equation, Errc::NotAFlat for non-flats.
StanleyVerdict stanley_division_check(const FlatLattice& l, const Subset& x);
StanleyVerdict stanley_division_check(const Matroid& m, const Subset& x, const Limits& limits = {});

}  // namespace modjoin
