#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "modjoin/lattice.hpp"

namespace modjoin {

enum class CertKind { Empty, ModularCoatom, ModularJoin, Flag, SupersolvableChain };
std::string_view cert_kind_name(CertKind k) noexcept;
/// Throws Errc::InvalidInput for unknown names.
CertKind cert_kind_from_name(std::string_view name);

/// A checkable claim about the restriction M|subject.
///   ModularCoatom:      flats = {X}, children = {certificate of X}
///   ModularJoin:        flats = {E1, E2, X}, children = {cert of E1, cert of E2}
///   Flag:               flats = X0 ⊂ ... ⊂ Xr, roots = a_i of each step
///   SupersolvableChain: flats = X0 ⊂ ... ⊂ Xr
struct Certificate {
  CertKind kind = CertKind::Empty;
  Subset subject;
  std::vector<Subset> flats;
  std::vector<mpz_class> roots;
  std::vector<Certificate> children;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct VerifyResult {
  bool ok = true;
  /// Position of the first failing node, e.g. "root/1/0".
  std::string path;
  std::string message;
};

/// Replays every node against the lattice of the input matroid. Flag nodes
/// re-run each exact division; tree nodes re-run the modularity, roundness
/// and covering checks.
VerifyResult verify_certificate(const FlatLattice& l, const Certificate& c);

/// Total node count.
std::size_t certificate_size(const Certificate& c);

}  // namespace modjoin
