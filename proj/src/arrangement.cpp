#include "modjoin/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <regex>

#include "modjoin/errors.hpp"
#include "modjoin/parallel.hpp"

namespace modjoin {

namespace {

std::vector<FieldScalar> canonical_form(std::vector<FieldScalar> f, std::size_t index) {
  auto lead = std::find_if(f.begin(), f.end(), [](const FieldScalar& c) { return !c.is_zero(); });
  if (lead == f.end()) throw Error(Errc::InvalidInput, "form " + std::to_string(index) + " is zero");
  const FieldScalar s = *lead;
  for (auto& c : f) c = c / s;
  return f;
}

std::vector<std::vector<FieldScalar>> rows_of(const FieldMatrix& m) {
  std::vector<std::vector<FieldScalar>> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(m.at(i, j));
  }
  return out;
}

/// Parses sums such as "x1+x2-z" or "2*y1-z" over the given variable names.
std::vector<std::int64_t> parse_form(const std::string& expr, const std::vector<std::string>& vars) {
  std::vector<std::int64_t> out(vars.size(), 0);
  static const std::regex term(R"(([+-]?)(?:(\d+)\*)?([A-Za-z]\w*))");
  std::string rest;
  for (char c : expr) {
    if (c != ' ') rest.push_back(c);
  }
  auto begin = std::sregex_iterator(rest.begin(), rest.end(), term);
  std::size_t consumed = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    const auto& mt = *it;
    if (static_cast<std::size_t>(mt.position()) != consumed) break;
    consumed += static_cast<std::size_t>(mt.length());
    std::int64_t coef = mt[2].matched ? std::stoll(mt[2].str()) : 1;
    if (mt[1].str() == "-") coef = -coef;
    auto v = std::find(vars.begin(), vars.end(), mt[3].str());
    if (v == vars.end()) throw Error(Errc::InvalidInput, "unknown variable in '" + expr + "'");
    out[static_cast<std::size_t>(v - vars.begin())] += coef;
  }
  if (consumed != rest.size()) throw Error(Errc::InvalidInput, "cannot parse form '" + expr + "'");
  return out;
}

Arrangement from_expressions(const Field& field, const std::vector<std::string>& vars,
                             const std::vector<std::string>& exprs) {
  std::vector<std::vector<std::int64_t>> forms;
  for (const auto& e : exprs) forms.push_back(parse_form(e, vars));
  return make_arrangement(field, static_cast<int>(vars.size()), forms, exprs);
}

std::vector<std::string> numbered(const std::string& stem, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

std::string x(int i) { return "x" + std::to_string(i + 1); }

}  // namespace

Arrangement make_arrangement(const Field& field, int dim, const std::vector<std::vector<FieldScalar>>& forms,
                             std::vector<std::string> labels) {
  if (dim < 0) throw Error(Errc::InvalidInput, "negative dimension");
  if (!labels.empty() && labels.size() != forms.size()) {
    throw Error(Errc::InvalidInput, "label count differs from form count");
  }
  Arrangement a;
  a.field = field;
  a.dim = dim;
  a.forms = FieldMatrix(field, static_cast<Eigen::Index>(forms.size()), dim);
  std::vector<std::vector<FieldScalar>> canon;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].size() != static_cast<std::size_t>(dim)) {
      throw Error(Errc::InvalidInput, "form " + std::to_string(i) + " has the wrong length");
    }
    for (const auto& c : forms[i]) {
      if (!(c.field() == field)) throw Error(Errc::InvalidInput, "form " + std::to_string(i) + " is over another field");
    }
    canon.push_back(canonical_form(forms[i], i));
    for (std::size_t j = 0; j < i; ++j) {
      if (canon[j] == canon[i]) {
        throw Error(Errc::InvalidInput, "forms " + std::to_string(j) + " and " + std::to_string(i) + " are proportional");
      }
    }
    for (int k = 0; k < dim; ++k) a.forms.set(static_cast<Eigen::Index>(i), k, canon[i][static_cast<std::size_t>(k)]);
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < forms.size(); ++i) labels.push_back("H" + std::to_string(i));
  }
  a.labels = std::move(labels);
  return a;
}

Arrangement make_arrangement(const Field& field, int dim, const std::vector<std::vector<std::int64_t>>& forms,
                             std::vector<std::string> labels) {
  std::vector<std::vector<FieldScalar>> scalars;
  for (const auto& f : forms) {
    std::vector<FieldScalar> row;
    for (auto c : f) row.emplace_back(c, field);
    scalars.push_back(std::move(row));
  }
  return make_arrangement(field, dim, scalars, std::move(labels));
}

Matroid dependence_matroid(const Arrangement& a) { return linear_matroid(a.forms.transpose(), a.labels); }

Arrangement essentialize(const Arrangement& a) {
  const auto pivots = a.forms.pivot_columns();
  const auto reduced = a.forms.select_columns(pivots);
  return make_arrangement(a.field, static_cast<int>(pivots.size()), rows_of(reduced), a.labels);
}

IntPolynomial arrangement_charpoly(const Arrangement& a, const Limits& limits) {
  const Matroid m = dependence_matroid(a);
  const auto shift = static_cast<std::size_t>(a.dim - m.full_rank());
  return charpoly(m, limits) * IntPolynomial::monomial(1, shift);
}

Arrangement pg_arrangement(int n, std::uint32_t p, const Limits& limits) {
  const Field field = Field::gf(p);
  if (n < 1) throw Error(Errc::InvalidInput, "projective geometry needs n >= 1");
  // (p^n - 1)/(p - 1) points, checked before enumeration.
  std::uint64_t points = 0, power = 1;
  for (int i = 0; i < n; ++i) {
    points += power;
    power *= p;
    if (points > limits.max_atoms) {
      throw Error(Errc::TooLarge, "PG(" + std::to_string(n - 1) + "," + std::to_string(p) + ") exceeds the atom limit");
    }
  }
  std::vector<std::vector<std::int64_t>> forms;
  std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
  for (std::uint64_t code = 0; code < power; ++code) {
    std::uint64_t c = code;
    for (int i = n - 1; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(c % p);
      c /= p;
    }
    auto lead = std::find_if(v.begin(), v.end(), [](std::int64_t e) { return e != 0; });
    if (lead != v.end() && *lead == 1) forms.push_back(v);
  }
  std::vector<std::string> labels;
  for (const auto& f : forms) {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    labels.push_back("(" + s + ")");
  }
  return make_arrangement(field, n, forms, labels);
}

Arrangement boolean_arrangement(int n) {
  const auto vars = numbered("x", n);
  return from_expressions(Field::rational(), vars, vars);
}

Arrangement braid_arrangement(int n) {
  std::vector<std::string> exprs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) exprs.push_back(x(i) + "-" + x(j));
  }
  return from_expressions(Field::rational(), numbered("x", n), exprs);
}

Arrangement type_d_arrangement(int n) {
  std::vector<std::string> exprs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      exprs.push_back(x(i) + "-" + x(j));
      exprs.push_back(x(i) + "+" + x(j));
    }
  }
  return from_expressions(Field::rational(), numbered("x", n), exprs);
}

Arrangement type_b_arrangement(int n) {
  auto exprs = type_d_arrangement(n).labels;
  for (int i = 0; i < n; ++i) exprs.push_back(x(i));
  return from_expressions(Field::rational(), numbered("x", n), exprs);
}

Arrangement a1_half_arrangement() {
  return from_expressions(Field::rational(), {"z", "x1", "x2"}, {"z", "x1", "x2", "x1-z", "x2-z", "x1-x2", "x1+x2"});
}

Arrangement example13_arrangement() {
  return from_expressions(Field::rational(), {"z", "x1", "x2", "y1", "y2"},
                          {"z", "x1", "x2", "x1-z", "x2-z", "x1-x2", "x1+x2", "y1", "y2", "y1-z", "y2-z", "y1-y2",
                           "y1+y2"});
}

Arrangement ziegler11_arrangement() {
  return from_expressions(Field::gf(2), {"z1", "z2", "x1", "x2"},
                          {"z1", "z2", "z1+z2", "x1", "x2", "x1+x2", "x1+z1", "x2+z1", "x1+x2+z1", "x1+z1+z2",
                           "x2+z1+z2"});
}

Arrangement ziegler19_arrangement() {
  return from_expressions(Field::gf(2), {"z1", "z2", "x1", "x2", "y1", "y2"},
                          {"z1", "z2", "z1+z2", "x1", "x2", "x1+x2", "x1+z1", "x2+z1", "x1+x2+z1", "x1+z1+z2",
                           "x2+z1+z2", "y1", "y2", "y1+y2", "y1+z1", "y2+z1", "y1+y2+z1", "y1+z1+z2", "y2+z1+z2"});
}

Arrangement bowtie_lift9_arrangement() {
  return from_expressions(Field::gf(2), {"z", "x1", "x2", "y1", "y2"},
                          {"z", "x1+z", "x2+z", "x1+x2", "x1+x2+z", "y1+z", "y2+z", "y1+y2", "y1+y2+z"});
}

std::vector<std::string> arrangement_names() {
  return {"example-13", "a1-7", "ziegler-19", "ziegler-11", "bowtie-lift-9", "braid-n", "bn-n", "dn-n",
          "boolean-n", "pg-n-p"};
}

std::optional<Arrangement> named_arrangement(const std::string& name, const Limits& limits) {
  if (name == "example-13") return example13_arrangement();
  if (name == "a1-7") return a1_half_arrangement();
  if (name == "ziegler-19") return ziegler19_arrangement();
  if (name == "ziegler-11") return ziegler11_arrangement();
  if (name == "bowtie-lift-9") return bowtie_lift9_arrangement();

  static const std::regex family(R"((braid|bn|dn|boolean)-(\d{1,2}))");
  static const std::regex pg(R"(pg-(\d{1,2})-(\d{1,5}))");
  std::smatch mt;
  if (std::regex_match(name, mt, family)) {
    const int n = std::stoi(mt[2].str());
    const std::string kind = mt[1].str();
    // Keep the atom count inside the guardrail before building anything.
    const std::size_t atoms = kind == "braid"     ? static_cast<std::size_t>(n * (n - 1) / 2)
                              : kind == "dn"      ? static_cast<std::size_t>(n * (n - 1))
                              : kind == "bn"      ? static_cast<std::size_t>(n * n)
                                                  : static_cast<std::size_t>(n);
    if (atoms > limits.max_atoms) throw Error(Errc::TooLarge, name + " exceeds the atom limit");
    if (kind == "braid") return braid_arrangement(n);
    if (kind == "bn") return type_b_arrangement(n);
    if (kind == "dn") return type_d_arrangement(n);
    return boolean_arrangement(n);
  }
  if (std::regex_match(name, mt, pg)) {
    return pg_arrangement(std::stoi(mt[1].str()), static_cast<std::uint32_t>(std::stoul(mt[2].str())), limits);
  }
  return std::nullopt;
}

Agreement rank_agreement(const Matroid& m1, const Matroid& m2, const std::vector<int>& perm,
                         const AgreementOptions& options) {
  const std::size_t n = m1.size();
  if (m2.size() != n) throw Error(Errc::SizeMismatch, "ground sets differ in size");
  std::vector<int> p = perm;
  if (p.empty()) {
    p.resize(n);
    std::iota(p.begin(), p.end(), 0);
  }
  if (p.size() != n) throw Error(Errc::SizeMismatch, "permutation length differs from ground set size");
  {
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
      if (sorted[i] != static_cast<int>(i)) throw Error(Errc::InvalidInput, "not a permutation");
    }
  }
  auto image = [&](Mask s) {
    Mask t = 0;
    for (int i : mask_to_indices(s)) t |= bit(static_cast<std::size_t>(p[static_cast<std::size_t>(i)]));
    return t;
  };

  std::vector<Mask> subsets;
  Agreement out;
  const bool exhaustive = n < 64 && (std::uint64_t{1} << n) <= options.exhaustive_limit;
  out.exhaustive = exhaustive;
  if (exhaustive) {
    subsets.resize(std::size_t{1} << n);
    std::iota(subsets.begin(), subsets.end(), Mask{0});
  } else {
    std::mt19937_64 rng(options.seed);
    const Mask full = full_mask(n);
    subsets.reserve(options.samples);
    for (std::size_t i = 0; i < options.samples; ++i) subsets.push_back(rng() & full);
  }

  // Each chunk records its first disagreement; the lowest position wins.
  const std::size_t chunks = std::max<std::size_t>(1, thread_count());
  const std::size_t per = (subsets.size() + chunks - 1) / chunks;
  std::vector<std::size_t> first_bad(chunks, subsets.size());
  parallel_for(chunks, [&](std::size_t c) {
    const std::size_t lo = c * per, hi = std::min(subsets.size(), lo + per);
    for (std::size_t i = lo; i < hi; ++i) {
      if (m1.rank(subsets[i]) != m2.rank(image(subsets[i]))) {
        first_bad[c] = i;
        return;
      }
    }
  });
  out.checked = subsets.size();
  const std::size_t bad = *std::min_element(first_bad.begin(), first_bad.end());
  if (bad < subsets.size()) {
    out.agree = false;
    out.witness = Subset(n, subsets[bad]);
  }
  return out;
}

std::optional<std::vector<int>> match_forms(const Arrangement& a, const Arrangement& b) {
  if (!(a.field == b.field) || a.dim != b.dim || a.size() != b.size()) return std::nullopt;
  std::vector<int> perm(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      bool same = true;
      for (int k = 0; k < a.dim && same; ++k) {
        same = a.forms.at(static_cast<Eigen::Index>(i), k) == b.forms.at(static_cast<Eigen::Index>(j), k);
      }
      if (same) {
        perm[i] = static_cast<int>(j);
        used[j] = true;
        break;
      }
    }
    if (perm[i] < 0) return std::nullopt;
  }
  return perm;
}

}  // namespace modjoin
