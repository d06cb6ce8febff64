#include "modjoin/lattice.hpp"

#include <algorithm>

#include "modjoin/errors.hpp"

namespace modjoin {

std::optional<FlatLattice::Index> FlatLattice::find(Mask m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FlatLattice::Index FlatLattice::index_of(const Subset& s) const {
  auto i = find(s.bits());
  if (!i) throw Error(Errc::NotAFlat, s.to_string() + " is not a flat");
  return *i;
}

std::vector<FlatLattice::Index> FlatLattice::interval(Index bottom, Index top) const {
  std::vector<Index> out;
  const Mask lo = mask(bottom), hi = mask(top);
  if (!is_subset(lo, hi)) return out;
  for (int k = rank_of(bottom); k <= rank_of(top); ++k) {
    for (Index i : level(k)) {
      if (is_subset(lo, mask(i)) && is_subset(mask(i), hi)) out.push_back(i);
    }
  }
  return out;
}

std::vector<FlatLattice::Index> FlatLattice::coatoms_below(Index top) const {
  std::vector<Index> out;
  if (rank_of(top) == 0) return out;
  for (Index i : level(rank_of(top) - 1)) {
    if (is_subset(mask(i), mask(top))) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FlatLattice::rank_counts() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels_) out.push_back(lv.size());
  return out;
}

FlatLattice enumerate_flats(const Matroid& m, const Limits& limits) {
  check_atom_limit(m, limits);
  if (!m.is_simple()) throw Error(Errc::NotSimple, "lattice enumeration needs a simple matroid");

  FlatLattice l;
  l.matroid_ = m;
  const Mask ground = m.ground_mask();

  std::vector<std::vector<Mask>> level_masks{{0}};
  while (level_masks.back().size() != 1 || level_masks.back().front() != ground) {
    std::vector<Mask> next;
    std::unordered_map<Mask, bool> seen;
    for (Mask f : level_masks.back()) {
      Mask skip = f;
      for (Mask rest = ground & ~skip; rest != 0; rest = ground & ~skip) {
        Mask a = rest & (~rest + 1);
        Mask c = m.closure_mask(f | a);
        skip |= c;
        if (seen.emplace(c, true).second) {
          next.push_back(c);
          if (next.size() > limits.max_flats) {
            throw Error(Errc::TooLarge, "flat count exceeds " + std::to_string(limits.max_flats));
          }
        }
      }
    }
    std::sort(next.begin(), next.end(), lex_less);
    level_masks.push_back(std::move(next));
  }

  std::size_t total = 0;
  for (const auto& lv : level_masks) total += lv.size();
  if (total > limits.max_flats) {
    throw Error(Errc::TooLarge, "flat count exceeds " + std::to_string(limits.max_flats));
  }

  for (std::size_t k = 0; k < level_masks.size(); ++k) {
    std::vector<FlatLattice::Index> ids;
    for (Mask f : level_masks[k]) {
      ids.push_back(l.flats_.size());
      l.index_.emplace(f, l.flats_.size());
      l.flats_.push_back(Flat{Subset(m.size(), f), static_cast<int>(k)});
    }
    l.levels_.push_back(std::move(ids));
  }

  l.covers_.resize(l.flats_.size());
  for (std::size_t k = 0; k + 1 < l.levels_.size(); ++k) {
    for (auto lo : l.levels_[k]) {
      for (auto hi : l.levels_[k + 1]) {
        if (is_subset(l.mask(lo), l.mask(hi))) l.covers_[lo].push_back(hi);
      }
    }
  }
  return l;
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::TooLarge, "Moebius value overflow");
  return out;
}

}  // namespace

std::vector<std::int64_t> interval_mobius(const FlatLattice& l, FlatLattice::Index bottom,
                                          FlatLattice::Index top) {
  const auto ids = l.interval(bottom, top);
  std::vector<std::int64_t> mu(ids.size(), 0);
  for (std::size_t y = 0; y < ids.size(); ++y) {
    if (y == 0) {
      mu[0] = 1;
      continue;
    }
    std::int64_t sum = 0;
    const Mask ym = l.mask(ids[y]);
    const int yr = l.rank_of(ids[y]);
    for (std::size_t z = 0; z < y && l.rank_of(ids[z]) < yr; ++z) {
      if (is_subset(l.mask(ids[z]), ym)) sum = checked_add(sum, mu[z]);
    }
    mu[y] = -sum;
  }
  return mu;
}

MobiusTable mobius(const FlatLattice& l) {
  auto values = interval_mobius(l, l.bottom(), l.top());
  // The full interval lists flats in index order.
  return MobiusTable{std::move(values)};
}

IntPolynomial interval_charpoly(const FlatLattice& l, FlatLattice::Index bottom, FlatLattice::Index top) {
  if (!l.leq(bottom, top)) throw Error(Errc::NotComparable, "bottom is not below top");
  const auto ids = l.interval(bottom, top);
  const auto mu = interval_mobius(l, bottom, top);
  const int top_rank = l.rank_of(top);
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(top_rank - l.rank_of(bottom) + 1));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    coeffs[static_cast<std::size_t>(top_rank - l.rank_of(ids[i]))] += static_cast<long>(mu[i]);
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial interval_charpoly(const FlatLattice& l, const Flat& bottom, const Flat& top) {
  return interval_charpoly(l, l.index_of(bottom.atoms), l.index_of(top.atoms));
}

IntPolynomial charpoly(const FlatLattice& l) { return interval_charpoly(l, l.bottom(), l.top()); }

IntPolynomial charpoly(const Matroid& m, const Limits& limits) { return charpoly(enumerate_flats(m, limits)); }

}  // namespace modjoin
