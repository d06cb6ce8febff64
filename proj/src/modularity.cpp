#include "modjoin/modularity.hpp"

#include <algorithm>
#include <functional>

#include "modjoin/errors.hpp"
#include "modjoin/parallel.hpp"

namespace modjoin {

std::string_view criterion_name(Criterion c) noexcept {
  switch (c) {
    case Criterion::RankEquation: return "rank-equation";
    case Criterion::CoatomTriangle: return "coatom-triangle";
    case Criterion::ShortCircuit: return "short-circuit";
  }
  return "unknown";
}

using Index = FlatLattice::Index;

bool is_modular_in(const FlatLattice& l, Index x, Index top, Index* violator) {
  const Matroid& m = l.matroid();
  const Mask xm = l.mask(x), tm = l.mask(top);
  const int rx = l.rank_of(x);
  for (Index y = 0; y < l.size(); ++y) {
    const Mask ym = l.mask(y);
    if (!is_subset(ym, tm) || is_subset(ym, xm) || is_subset(xm, ym)) continue;
    // x ∧ y is the intersection; rank of the union equals rank of the join.
    const int lhs = rx + l.rank_of(y);
    const int rhs = m.rank(xm & ym) + m.rank(xm | ym);
    if (lhs != rhs) {
      if (violator) *violator = y;
      return false;
    }
  }
  return true;
}

std::vector<Index> modular_flats(const FlatLattice& l, Index top) {
  const auto ids = l.interval(l.bottom(), top);
  std::vector<char> ok(ids.size(), 0);
  parallel_for(ids.size(), [&](std::size_t i) { ok[i] = is_modular_in(l, ids[i], top) ? 1 : 0; });
  std::vector<Index> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ok[i]) out.push_back(ids[i]);
  }
  return out;
}

std::vector<Index> modular_coatoms(const FlatLattice& l, Index top) {
  std::vector<Index> out;
  for (Index c : l.coatoms_below(top)) {
    if (is_modular_in(l, c, top)) out.push_back(c);
  }
  return out;
}

bool is_round_within(const FlatLattice& l, Index top, std::pair<Index, Index>* cover) {
  const auto cs = l.coatoms_below(top);
  const Mask tm = l.mask(top);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if ((l.mask(cs[i]) | l.mask(cs[j])) == tm) {
        if (cover) *cover = {cs[i], cs[j]};
        return false;
      }
    }
  }
  return true;
}

ModularityWitness is_modular_flat(const FlatLattice& l, const Subset& x) {
  const Index xi = l.index_of(x);
  ModularityWitness w;
  w.criterion = Criterion::RankEquation;
  Index bad = 0;
  w.modular = is_modular_in(l, xi, l.top(), &bad);
  if (!w.modular) w.violating_flat = l.flat(bad).atoms;
  return w;
}

ModularityWitness is_modular_flat(const Matroid& m, const Subset& x, const Limits& limits) {
  if (!m.is_flat(x.bits())) throw Error(Errc::NotAFlat, x.to_string() + " is not a flat");
  return is_modular_flat(enumerate_flats(m, limits), x);
}

namespace {

void require_coatom(const Matroid& m, const Subset& x, Errc code) {
  if (!m.is_flat(x.bits()) || m.rank(x) != m.full_rank() - 1) {
    throw Error(code, x.to_string() + " is not a coatom");
  }
}

}  // namespace

ModularityWitness is_modular_coatom_triangle(const Matroid& m, const Subset& x) {
  require_coatom(m, x, Errc::NotACoatom);
  ModularityWitness w;
  w.criterion = Criterion::CoatomTriangle;
  const auto outside = x.complement().indices();
  const auto inside = x.indices();
  for (std::size_t i = 0; i < outside.size(); ++i) {
    for (std::size_t j = i + 1; j < outside.size(); ++j) {
      const Mask pair = bit(outside[i]) | bit(outside[j]);
      auto hit = std::find_if(inside.begin(), inside.end(),
                              [&](int e) { return m.rank(pair | bit(e)) == 2; });
      if (hit == inside.end()) {
        w.modular = false;
        w.uncovered_pair = std::make_pair(outside[i], outside[j]);
        w.triangles.clear();
        return w;
      }
      w.triangles.push_back({outside[i], outside[j], *hit});
    }
  }
  return w;
}

std::vector<Subset> circuits(const Matroid& m, const Limits& limits) {
  check_atom_limit(m, limits);
  const std::size_t n = m.size();
  std::vector<Subset> out;
  // Walk k-subsets in lexicographic order with an index vector.
  for (std::size_t k = 1; k <= std::min<std::size_t>(n, static_cast<std::size_t>(m.full_rank()) + 1); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Mask s = 0;
      for (auto i : idx) s |= bit(i);
      if (m.rank(s) == static_cast<int>(k) - 1) {
        bool minimal = true;
        for (auto i : idx) {
          if (m.rank(s & ~bit(i)) != static_cast<int>(k) - 1) {
            minimal = false;
            break;
          }
        }
        if (minimal) out.emplace_back(n, s);
      }
      std::size_t p = k;
      while (p > 0 && idx[p - 1] == n - k + (p - 1)) --p;
      if (p == 0) break;
      ++idx[p - 1];
      for (std::size_t q = p; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  return out;
}

ModularityWitness short_circuit_check(const Matroid& m, const Subset& x, const std::vector<Subset>& cs) {
  if (x.empty()) throw Error(Errc::EmptyFlat, "short-circuit axiom needs a nonempty flat");
  if (!m.is_flat(x.bits())) throw Error(Errc::NotAFlat, x.to_string() + " is not a flat");
  ModularityWitness w;
  w.criterion = Criterion::ShortCircuit;
  const auto inside = x.indices();
  for (const Subset& c : cs) {
    const Mask rest = c.bits() & ~x.bits();
    for (int e : mask_to_indices(rest)) {
      // e lies on a circuit inside S iff e ∈ cl(S \ e).
      bool found = std::any_of(inside.begin(), inside.end(), [&](int a) {
        const Mask s = rest | bit(a);
        return m.rank(s & ~bit(e)) == m.rank(s);
      });
      if (!found) {
        w.modular = false;
        w.circuit = c;
        w.atom = e;
        return w;
      }
    }
  }
  return w;
}

ModularityWitness short_circuit_check(const Matroid& m, const Subset& x, const Limits& limits) {
  if (x.empty()) throw Error(Errc::EmptyFlat, "short-circuit axiom needs a nonempty flat");
  return short_circuit_check(m, x, circuits(m, limits));
}

RoundnessWitness is_round(const FlatLattice& l) {
  RoundnessWitness w;
  std::pair<Index, Index> cover;
  w.round = is_round_within(l, l.top(), &cover);
  if (!w.round) w.cover = std::make_pair(l.flat(cover.first).atoms, l.flat(cover.second).atoms);
  return w;
}

RoundnessWitness is_round(const Matroid& m, const Limits& limits) { return is_round(enumerate_flats(m, limits)); }

std::optional<std::vector<Flat>> supersolvable_chain(const FlatLattice& l) {
  std::unordered_map<Index, bool> dead;
  std::vector<Index> path;
  std::function<bool(Index)> dfs = [&](Index t) {
    if (l.rank_of(t) == 0) return true;
    if (dead.count(t)) return false;
    for (Index c : modular_coatoms(l, t)) {
      path.push_back(c);
      if (dfs(c)) return true;
      path.pop_back();
    }
    dead[t] = true;
    return false;
  };
  path.push_back(l.top());
  if (!dfs(l.top())) return std::nullopt;
  std::vector<Flat> chain;
  for (auto it = path.rbegin(); it != path.rend(); ++it) chain.push_back(l.flat(*it));
  return chain;
}

std::optional<std::vector<Flat>> supersolvable_chain(const Matroid& m, const Limits& limits) {
  return supersolvable_chain(enumerate_flats(m, limits));
}

std::map<std::pair<int, int>, int> coatom_pairing(const Matroid& m, const Subset& x) {
  require_coatom(m, x, Errc::NotModularCoatom);
  const auto outside = x.complement().indices();
  const auto inside = x.indices();
  std::map<std::pair<int, int>, int> f;
  for (std::size_t i = 0; i < outside.size(); ++i) {
    for (std::size_t j = i + 1; j < outside.size(); ++j) {
      const Mask pair = bit(outside[i]) | bit(outside[j]);
      int found = -1, hits = 0;
      for (int e : inside) {
        if (m.rank(pair | bit(e)) == 2) {
          found = e;
          ++hits;
        }
      }
      if (hits != 1) {
        throw Error(Errc::NotModularCoatom,
                    "pair (" + std::to_string(outside[i]) + "," + std::to_string(outside[j]) + ") has " +
                        std::to_string(hits) + " completions in the coatom");
      }
      f[{outside[i], outside[j]}] = found;
    }
  }
  return f;
}

}  // namespace modjoin
