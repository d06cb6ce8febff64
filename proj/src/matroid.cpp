#include "modjoin/matroid.hpp"

#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include "modjoin/errors.hpp"
#include "modjoin/graph.hpp"

namespace modjoin {

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::Linear: return "linear";
    case Backend::Graphic: return "graphic";
    case Backend::Frame: return "frame";
    case Backend::Lift: return "lift";
    case Backend::Explicit: return "explicit";
  }
  return "unknown";
}

struct Matroid::State {
  std::size_t n = 0;
  RankOracle oracle;
  Backend backend = Backend::Explicit;
  std::vector<std::string> labels;
  int full_rank = 0;

  mutable std::shared_mutex mutex;
  mutable std::unordered_map<Mask, int> memo;

  int rank(Mask s) const {
    {
      std::shared_lock lock(mutex);
      auto it = memo.find(s);
      if (it != memo.end()) return it->second;
    }
    int r = oracle(s);
    std::unique_lock lock(mutex);
    memo.emplace(s, r);
    return r;
  }
};

Matroid::Matroid() : Matroid(0, [](Mask) { return 0; }, Backend::Explicit) {}

Matroid::Matroid(std::size_t n, RankOracle oracle, Backend backend, std::vector<std::string> labels)
    : state_(std::make_shared<State>()) {
  if (n > kMaxGroundSet) throw Error(Errc::TooLarge, "ground sets above 64 atoms are not supported");
  if (!labels.empty() && labels.size() != n) {
    throw Error(Errc::InvalidInput, "label count does not match ground-set size");
  }
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (labels[i] == labels[j]) throw Error(Errc::InvalidInput, "duplicate atom label '" + labels[i] + "'");
    }
  }
  state_->n = n;
  state_->oracle = std::move(oracle);
  state_->backend = backend;
  state_->labels = std::move(labels);
  state_->full_rank = state_->rank(full_mask(n));
}

std::size_t Matroid::size() const noexcept { return state_->n; }
Backend Matroid::backend() const noexcept { return state_->backend; }
const std::vector<std::string>& Matroid::labels() const noexcept { return state_->labels; }
std::string Matroid::label(std::size_t atom) const { return state_->labels.at(atom); }
int Matroid::full_rank() const noexcept { return state_->full_rank; }

int Matroid::rank(Mask s) const {
  if (!is_subset(s, ground_mask())) throw Error(Errc::InvalidInput, "subset outside ground set");
  return state_->rank(s);
}

Mask Matroid::closure_mask(Mask s) const {
  const int r = rank(s);
  Mask out = s;
  for (Mask rest = ground_mask() & ~s; rest != 0; rest &= rest - 1) {
    Mask a = rest & (~rest + 1);
    if (rank(s | a) == r) out |= a;
  }
  return out;
}

Flat Matroid::closure(const Subset& s) const {
  Mask c = closure_mask(s.bits());
  return Flat{Subset(size(), c), rank(c)};
}

std::vector<int> Matroid::loops() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (rank(bit(i)) == 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<std::pair<int, int>> Matroid::parallel_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (rank(bit(i)) == 0) continue;
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (rank(bit(j)) != 0 && rank(bit(i) | bit(j)) == 1) {
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return out;
}

bool Matroid::is_simple() const { return loops().empty() && parallel_pairs().empty(); }

void check_atom_limit(const Matroid& m, const Limits& limits) {
  if (m.size() > limits.max_atoms) {
    throw Error(Errc::TooLarge, std::to_string(m.size()) + " atoms exceeds the limit of " +
                                    std::to_string(limits.max_atoms));
  }
}

Matroid linear_matroid(const FieldMatrix& m, std::vector<std::string> labels) {
  const auto n = static_cast<std::size_t>(m.cols());
  if (n > kMaxGroundSet) throw Error(Errc::TooLarge, "more than 64 columns");
  std::string offending;
  auto note = [&](const std::string& s) {
    if (!offending.empty()) offending += ", ";
    offending += s;
  };
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (m.column_is_zero(j)) note("zero column " + std::to_string(j));
  }
  for (Eigen::Index a = 0; a < m.cols(); ++a) {
    if (m.column_is_zero(a)) continue;
    for (Eigen::Index b = a + 1; b < m.cols(); ++b) {
      if (!m.column_is_zero(b) && m.columns_proportional(a, b)) {
        note("columns " + std::to_string(a) + " and " + std::to_string(b) + " are parallel");
      }
    }
  }
  if (!offending.empty()) throw Error(Errc::NotSimple, offending);
  auto rep = std::make_shared<const FieldMatrix>(m);
  return Matroid(
      n, [rep](Mask s) { return static_cast<int>(rep->column_rank(s)); }, Backend::Linear, std::move(labels));
}

Matroid graphic_matroid(const SimpleGraph& g) {
  g.validate();
  auto edges = std::make_shared<const std::vector<std::pair<int, int>>>(g.edges);
  const int vertices = g.vertices;
  std::vector<std::string> labels;
  for (const auto& [u, v] : g.edges) labels.push_back("{" + std::to_string(u) + "," + std::to_string(v) + "}");
  auto oracle = [edges, vertices](Mask s) {
    std::vector<int> parent(static_cast<std::size_t>(vertices));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    int r = 0;
    for (int e : mask_to_indices(s)) {
      auto [u, v] = (*edges)[static_cast<std::size_t>(e)];
      int a = find(u), b = find(v);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        ++r;
      }
    }
    return r;
  };
  return Matroid(g.edges.size(), oracle, Backend::Graphic, std::move(labels));
}

Matroid uniform_matroid(int k, std::size_t n) {
  if (k < 0) throw Error(Errc::InvalidInput, "negative rank");
  return Matroid(
      n, [k](Mask s) { return std::min(popcount(s), k); }, Backend::Explicit);
}

namespace {

void require_flat(const Matroid& m, const Subset& x) {
  if (x.ground_size() != m.size()) throw Error(Errc::InvalidInput, "subset over a different ground set");
  if (!m.is_flat(x.bits())) throw Error(Errc::NotAFlat, x.to_string() + " is not closed");
}

}  // namespace

Matroid restrict(const Matroid& m, const Subset& x) {
  require_flat(m, x);
  std::vector<int> atoms = x.indices();
  std::vector<std::string> labels;
  for (int a : atoms) labels.push_back(m.label(static_cast<std::size_t>(a)));
  auto oracle = [m, atoms](Mask s) {
    Mask lifted = 0;
    for (int i : mask_to_indices(s)) lifted |= bit(static_cast<std::size_t>(atoms[static_cast<std::size_t>(i)]));
    return m.rank(lifted);
  };
  return Matroid(atoms.size(), oracle, m.backend(), std::move(labels));
}

Contraction contract_simplify(const Matroid& m, const Subset& x) {
  require_flat(m, x);
  const Mask base = x.bits();
  const int base_rank = m.rank(base);
  Contraction out;
  out.atom_map.assign(m.size(), -1);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m.size(); ++a) {
    if ((base >> a) & 1U) continue;
    if (out.atom_map[a] >= 0) continue;
    Mask cover = m.closure_mask(base | bit(a));
    const int id = static_cast<int>(out.atom_flats.size());
    out.atom_flats.push_back(cover);
    std::string label;
    for (int b : mask_to_indices(cover & ~base)) {
      out.atom_map[static_cast<std::size_t>(b)] = id;
      if (!label.empty()) label += "|";
      label += m.label(static_cast<std::size_t>(b));
    }
    labels.push_back(std::move(label));
  }
  auto flats = out.atom_flats;
  auto oracle = [m, flats, base, base_rank](Mask s) {
    Mask lifted = base;
    for (int i : mask_to_indices(s)) lifted |= flats[static_cast<std::size_t>(i)];
    return m.rank(lifted) - base_rank;
  };
  out.matroid = Matroid(flats.size(), oracle, m.backend(), std::move(labels));
  return out;
}

}  // namespace modjoin
