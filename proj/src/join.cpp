#include "modjoin/join.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <unordered_map>

#include "modjoin/errors.hpp"
#include "modjoin/modularity.hpp"

namespace modjoin {

using Index = FlatLattice::Index;

std::vector<JoinDecomposition> find_modular_joins(const FlatLattice& l, Index top) {
  auto mods = modular_flats(l, top);
  mods.erase(std::remove(mods.begin(), mods.end(), top), mods.end());
  const Mask tm = l.mask(top);

  struct Entry {
    Index e1, e2, x;
  };
  std::vector<Entry> found;
  for (std::size_t i = 0; i < mods.size(); ++i) {
    for (std::size_t j = i + 1; j < mods.size(); ++j) {
      if ((l.mask(mods[i]) | l.mask(mods[j])) != tm) continue;
      auto x = l.find(l.mask(mods[i]) & l.mask(mods[j]));
      if (!x) throw Error(Errc::InternalInconsistency, "intersection of flats is not a flat");
      found.push_back({mods[i], mods[j], *x});
    }
  }
  // Lattice indices already order flats by rank, then lexicographically.
  std::stable_sort(found.begin(), found.end(), [](const Entry& a, const Entry& b) { return a.x < b.x; });

  std::vector<JoinDecomposition> out;
  for (const auto& f : found) {
    out.push_back({l.flat(f.e1).atoms, l.flat(f.e2).atoms, l.flat(f.x).atoms, is_round_within(l, f.x)});
  }
  return out;
}

std::vector<JoinDecomposition> find_modular_joins(const FlatLattice& l) { return find_modular_joins(l, l.top()); }

std::vector<JoinDecomposition> find_modular_joins(const Matroid& m, const Limits& limits) {
  return find_modular_joins(enumerate_flats(m, limits));
}

BrylawskiTerms brylawski_identity_check(const FlatLattice& l, const JoinDecomposition& d) {
  BrylawskiTerms t;
  t.whole = charpoly(l);
  t.meet = interval_charpoly(l, l.bottom(), l.index_of(d.x));
  t.first = interval_charpoly(l, l.bottom(), l.index_of(d.e1));
  t.second = interval_charpoly(l, l.bottom(), l.index_of(d.e2));
  if (t.whole * t.meet != t.first * t.second) {
    throw Error(Errc::IdentityViolation, "chi(M) = " + t.whole.to_string() + ", chi(M|X) = " + t.meet.to_string() +
                                             ", chi(M|E1) = " + t.first.to_string() +
                                             ", chi(M|E2) = " + t.second.to_string());
  }
  return t;
}

std::optional<Certificate> me_certify(const FlatLattice& l) {
  std::unordered_map<Index, std::shared_ptr<const Certificate>> memo;
  std::unordered_map<Index, bool> failed;

  std::function<std::shared_ptr<const Certificate>(Index)> solve = [&](Index t) -> std::shared_ptr<const Certificate> {
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    if (failed.count(t)) return nullptr;

    auto cert = std::make_shared<Certificate>();
    cert->subject = l.flat(t).atoms;
    if (l.rank_of(t) == 0) {
      cert->kind = CertKind::Empty;
      return memo[t] = cert;
    }
    for (Index c : modular_coatoms(l, t)) {
      if (auto child = solve(c)) {
        cert->kind = CertKind::ModularCoatom;
        cert->flats = {l.flat(c).atoms};
        cert->children = {*child};
        return memo[t] = cert;
      }
    }
    for (const auto& d : find_modular_joins(l, t)) {
      if (!d.x_round) continue;
      auto c1 = solve(l.index_of(d.e1));
      if (!c1) continue;
      auto c2 = solve(l.index_of(d.e2));
      if (!c2) continue;
      cert->kind = CertKind::ModularJoin;
      cert->flats = {d.e1, d.e2, d.x};
      cert->children = {*c1, *c2};
      return memo[t] = cert;
    }
    failed[t] = true;
    return nullptr;
  };

  auto root = solve(l.top());
  if (!root) return std::nullopt;
  return *root;
}

std::optional<Certificate> me_certify(const Matroid& m, const Limits& limits) {
  return me_certify(enumerate_flats(m, limits));
}

LiftCheck join_divisional_lift_check(const FlatLattice& l, const JoinDecomposition& d, int e) {
  LiftCheck r;
  const std::size_t n = l.matroid().size();
  if (e < 0 || static_cast<std::size_t>(e) >= n || !d.e1.contains(e) || d.x.contains(e)) return r;

  const Index a = l.index_of(Subset(n, bit(static_cast<std::size_t>(e))));
  const Index e1 = l.index_of(d.e1), e2 = l.index_of(d.e2), x = l.index_of(d.x);
  const auto chi_m1 = interval_charpoly(l, l.bottom(), e1);
  r.first_contraction = interval_charpoly(l, a, e1);
  if (!poly_exact_div(chi_m1, r.first_contraction)) return r;
  r.applicable = true;

  r.contraction = interval_charpoly(l, a, l.top());
  if (!poly_exact_div(charpoly(l), r.contraction)) {
    throw Error(Errc::LiftViolation, "atom " + std::to_string(e) + " is divisional in M|E1 but not in M");
  }
  const auto chi_x = interval_charpoly(l, l.bottom(), x);
  const auto chi_m2 = interval_charpoly(l, l.bottom(), e2);
  if (r.contraction * chi_x != r.first_contraction * chi_m2) {
    throw Error(Errc::LiftViolation, "contraction at atom " + std::to_string(e) + " breaks the join identity: " +
                                         r.contraction.to_string() + " vs " + r.first_contraction.to_string());
  }
  return r;
}

}  // namespace modjoin
