#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modjoin/lattice.hpp"

namespace modjoin {

/// Central arrangement: row i of `forms` is the defining form of hyperplane
/// i, scaled so its first nonzero coefficient is 1.
struct Arrangement {
  Field field;
  int dim = 0;
  FieldMatrix forms;
  std::vector<std::string> labels;

  std::size_t size() const { return static_cast<std::size_t>(forms.rows()); }
};

/// Canonicalizes every form. Throws Errc::InvalidInput on zero forms, wrong
/// lengths, or proportional pairs.
Arrangement make_arrangement(const Field& field, int dim, const std::vector<std::vector<FieldScalar>>& forms,
                             std::vector<std::string> labels = {});
Arrangement make_arrangement(const Field& field, int dim, const std::vector<std::vector<std::int64_t>>& forms,
                             std::vector<std::string> labels = {});

/// Linear matroid on the forms.
Matroid dependence_matroid(const Arrangement& a);

/// Restricts forms to the pivot coordinates of the form matrix, giving an
/// essential arrangement of dimension r with the same dependence matroid.
Arrangement essentialize(const Arrangement& a);

/// t^(ℓ-r) χ(M(A)).
IntPolynomial arrangement_charpoly(const Arrangement& a, const Limits& limits = {});

/// All hyperplanes of GF(p)^n, one per point of PG(n-1,p) in lexicographic
/// order. Throws Errc::TooLarge beyond limits.max_atoms.
Arrangement pg_arrangement(int n, std::uint32_t p, const Limits& limits = {});

/// Boolean arrangement x_1, ..., x_n over Q.
Arrangement boolean_arrangement(int n);
/// x_i - x_j for i < j over Q.
Arrangement braid_arrangement(int n);
/// x_i ± x_j for i < j, then x_i, over Q.
Arrangement type_b_arrangement(int n);
/// x_i ± x_j for i < j over Q.
Arrangement type_d_arrangement(int n);

/// 13 hyperplanes over Q in (z, x1, x2, y1, y2).
Arrangement example13_arrangement();
/// The 7-hyperplane half of example13 on (z, x1, x2).
Arrangement a1_half_arrangement();
/// 19 hyperplanes over GF(2) in (z1, z2, x1, x2, y1, y2).
Arrangement ziegler19_arrangement();
/// The 11-hyperplane half of ziegler19 on (z1, z2, x1, x2).
Arrangement ziegler11_arrangement();
/// 9 hyperplanes over GF(2) in (z, x1, x2, y1, y2).
Arrangement bowtie_lift9_arrangement();

/// Resolves "example-13", "a1-7", "ziegler-19", "ziegler-11", "bowtie-lift-9",
/// "braid-n", "bn-n", "dn-n", "boolean-n", "pg-n-p".
std::optional<Arrangement> named_arrangement(const std::string& name, const Limits& limits = {});
std::vector<std::string> arrangement_names();

struct Agreement {
  bool agree = true;
  bool exhaustive = true;
  std::size_t checked = 0;
  /// First disagreeing subset, in m1's atom indices.
  std::optional<Subset> witness;
};

struct AgreementOptions {
  /// Exhaustive when 2^n is at most this.
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 14;
  std::size_t samples = 10000;
  std::uint64_t seed = 0x5eed;
};

/// Compares r1(S) with r2(π(S)) where atom i of m1 corresponds to atom
/// perm[i] of m2 (identity when perm is empty). Throws Errc::SizeMismatch.
Agreement rank_agreement(const Matroid& m1, const Matroid& m2, const std::vector<int>& perm = {},
                         const AgreementOptions& options = {});

/// Permutation sending each form of `a` to the proportional form of `b`, or
/// nullopt when the arrangements differ as sets.
std::optional<std::vector<int>> match_forms(const Arrangement& a, const Arrangement& b);

}  // namespace modjoin
