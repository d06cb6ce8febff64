#include "modjoin/divisional.hpp"

#include <functional>
#include <unordered_set>

#include "modjoin/errors.hpp"
#include "modjoin/modularity.hpp"

namespace modjoin {

using Index = FlatLattice::Index;

std::optional<mpz_class> linear_root(const IntPolynomial& q) {
  if (q.degree() != 1 || q.leading() != 1) return std::nullopt;
  return mpz_class(-q.coeff(0));
}

std::vector<mpz_class> DivisionalFlag::roots() const {
  std::vector<mpz_class> out;
  for (const auto& q : quotients) {
    auto a = linear_root(q);
    if (!a) throw Error(Errc::InternalInconsistency, "flag quotient " + q.to_string() + " is not linear");
    out.push_back(*a);
  }
  return out;
}

DivisionalVerdict is_divisional_atom(const FlatLattice& l, int e) {
  const Matroid& m = l.matroid();
  if (e < 0 || static_cast<std::size_t>(e) >= m.size()) {
    throw Error(Errc::InvalidInput, "atom " + std::to_string(e) + " out of range");
  }
  DivisionalVerdict v;
  const Index a = l.index_of(Subset(m.size(), bit(static_cast<std::size_t>(e))));
  v.parent = charpoly(l);
  v.contraction = interval_charpoly(l, a, l.top());
  v.quotient = poly_exact_div(v.parent, v.contraction);
  v.divisional = v.quotient.has_value();
  if (v.divisional && !linear_root(*v.quotient)) {
    throw Error(Errc::InternalInconsistency, "divisional quotient " + v.quotient->to_string() + " is not t - a");
  }
  return v;
}

DivisionalVerdict is_divisional_atom(const Matroid& m, int e, const Limits& limits) {
  return is_divisional_atom(enumerate_flats(m, limits), e);
}

std::optional<DivisionalFlag> divisional_flag(const FlatLattice& l) {
  const Index top = l.top();
  std::vector<std::optional<IntPolynomial>> chi(l.size());
  auto upper = [&](Index x) -> const IntPolynomial& {
    if (!chi[x]) chi[x] = interval_charpoly(l, x, top);
    return *chi[x];
  };

  std::unordered_set<Index> dead;
  std::vector<Index> path{l.bottom()};
  std::vector<IntPolynomial> quotients;

  std::function<bool(Index)> dfs = [&](Index x) {
    const int corank = l.rank() - l.rank_of(x);
    if (corank == 0) return true;
    if (dead.count(x)) return false;
    for (Index y : l.covers(x)) {
      auto q = poly_exact_div(upper(x), upper(y));
      if (!q) continue;
      if (!linear_root(*q)) {
        throw Error(Errc::InternalInconsistency, "flag quotient " + q->to_string() + " is not t - a");
      }
      path.push_back(y);
      quotients.push_back(*q);
      if (dfs(y)) return true;
      path.pop_back();
      quotients.pop_back();
    }
    dead.insert(x);
    return false;
  };

  if (!dfs(l.bottom())) return std::nullopt;
  DivisionalFlag flag;
  for (Index i : path) flag.flats.push_back(l.flat(i));
  flag.quotients = std::move(quotients);
  return flag;
}

std::optional<DivisionalFlag> divisional_flag(const Matroid& m, const Limits& limits) {
  return divisional_flag(enumerate_flats(m, limits));
}

StanleyVerdict stanley_division_check(const FlatLattice& l, const Subset& x) {
  const Index xi = l.index_of(x);
  if (!is_modular_in(l, xi, l.top())) throw Error(Errc::NotModular, x.to_string() + " is not modular");
  StanleyVerdict v;
  v.quotient = poly_exact_div(charpoly(l), interval_charpoly(l, l.bottom(), xi));
  v.divides = v.quotient.has_value();
  return v;
}

StanleyVerdict stanley_division_check(const Matroid& m, const Subset& x, const Limits& limits) {
  return stanley_division_check(enumerate_flats(m, limits), x);
}

}  // namespace modjoin
