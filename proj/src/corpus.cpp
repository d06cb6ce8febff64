#include "modjoin/corpus.hpp"

#include <regex>

#include "modjoin/errors.hpp"
#include "modjoin/graph.hpp"

namespace modjoin {

FiniteGroup group_from_token(const std::string& token) {
  if (token == "trivial") return FiniteGroup::trivial();
  if (token == "sign") return FiniteGroup::sign();
  static const std::regex zn(R"(z(\d{1,2}))");
  std::smatch mt;
  if (std::regex_match(token, mt, zn)) return FiniteGroup::zmod(std::stoi(mt[1].str()));
  throw Error(Errc::InvalidInput, "unknown group '" + token + "'");
}

namespace {

void guard_atoms(std::size_t atoms, const Limits& limits, const std::string& name) {
  if (atoms > limits.max_atoms) throw Error(Errc::TooLarge, name + " exceeds the atom limit");
}

NamedInput from_frame(const std::string& name, const GainGraph& g, const Limits& limits) {
  guard_atoms(g.atom_count(), limits, name);
  return {name, frame_matroid(g), std::nullopt, g};
}

NamedInput from_lift(const std::string& name, const GainGraph& g, const Limits& limits) {
  guard_atoms(g.edges().size() + 1, limits, name);
  return {name, lift_matroid(g), std::nullopt, g};
}

}  // namespace

std::optional<NamedInput> named_input(const std::string& name, const Limits& limits) {
  if (auto a = named_arrangement(name, limits)) {
    guard_atoms(a->size(), limits, name);
    return NamedInput{name, dependence_matroid(*a), *a, std::nullopt};
  }
  if (name == "bowtie-frame") return from_frame(name, bowtie(true), limits);
  if (name == "bowtie-lift") return from_lift(name, bowtie(false), limits);

  std::smatch mt;
  static const std::regex fish_re(R"(fish-(\w+))");
  static const std::regex gain_re(R"((frame-kn|dowling|lift-kn)-(\d{1,2})-(\w+))");
  static const std::regex kn_re(R"(graphic-kn-(\d{1,2}))");
  static const std::regex cycle_re(R"(graphic-cycle-(\d{1,2}))");
  static const std::regex uniform_re(R"(uniform-(\d{1,2})-(\d{1,2}))");
  if (std::regex_match(name, mt, fish_re)) return from_frame(name, fish(group_from_token(mt[1].str())), limits);
  if (std::regex_match(name, mt, gain_re)) {
    const std::string kind = mt[1].str();
    const int n = std::stoi(mt[2].str());
    const FiniteGroup group = group_from_token(mt[3].str());
    const std::size_t edges = static_cast<std::size_t>(n * (n - 1) / 2) * static_cast<std::size_t>(group.order());
    guard_atoms(edges + static_cast<std::size_t>(kind == "dowling" ? n : 0), limits, name);
    if (kind == "lift-kn") return from_lift(name, complete_gain_graph(n, group, false), limits);
    return from_frame(name, complete_gain_graph(n, group, kind == "dowling"), limits);
  }
  if (std::regex_match(name, mt, kn_re)) {
    const int n = std::stoi(mt[1].str());
    guard_atoms(static_cast<std::size_t>(n * (n - 1) / 2), limits, name);
    return NamedInput{name, graphic_matroid(complete_graph(n)), std::nullopt, std::nullopt};
  }
  if (std::regex_match(name, mt, cycle_re)) {
    const int n = std::stoi(mt[1].str());
    guard_atoms(static_cast<std::size_t>(n), limits, name);
    return NamedInput{name, graphic_matroid(cycle_graph(n)), std::nullopt, std::nullopt};
  }
  if (std::regex_match(name, mt, uniform_re)) {
    const int k = std::stoi(mt[1].str()), n = std::stoi(mt[2].str());
    guard_atoms(static_cast<std::size_t>(n), limits, name);
    return NamedInput{name, uniform_matroid(k, static_cast<std::size_t>(n)), std::nullopt, std::nullopt};
  }
  return std::nullopt;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      // name, rank, atoms, supersolvable, modularly extended, divisional, round
      {"example-13", 5, 13, false, true, true, std::nullopt},
      {"a1-7", 3, 7, true, true, true, std::nullopt},
      {"ziegler-19", 6, 19, false, true, true, std::nullopt},
      {"ziegler-11", 4, 11, true, true, true, std::nullopt},
      {"bowtie-lift-9", 5, 9, false, true, true, std::nullopt},
      {"bowtie-frame", 5, 13, false, true, true, std::nullopt},
      {"bowtie-lift", 5, 9, false, true, true, std::nullopt},
      {"pg-2-2", 2, 3, true, true, true, true},
      {"pg-3-2", 3, 7, true, true, true, true},
      {"pg-2-3", 2, 4, true, true, true, true},
      {"pg-3-3", 3, 13, true, true, true, true},
      {"dn-4", 4, 12, std::nullopt, false, true, true},
      {"frame-kn-4-sign", 4, 12, std::nullopt, false, true, true},
      {"braid-4", 3, 6, true, true, true, std::nullopt},
      {"braid-5", 4, 10, true, true, true, std::nullopt},
      {"bn-3", 3, 9, true, true, true, std::nullopt},
      {"boolean-3", 3, 3, true, true, true, std::nullopt},
      {"dowling-3-z3", 3, 12, true, true, true, true},
      {"dowling-3-sign", 3, 9, true, true, true, true},
      {"frame-kn-3-sign", 3, 6, std::nullopt, std::nullopt, std::nullopt, std::nullopt},
      {"frame-kn-3-z3", 3, 9, std::nullopt, std::nullopt, std::nullopt, std::nullopt},
      {"frame-kn-2-sign", 2, 2, std::nullopt, std::nullopt, std::nullopt, false},
      {"lift-kn-3-z3", 3, 10, true, true, true, std::nullopt},
      {"lift-kn-3-sign", 3, 7, true, true, true, std::nullopt},
      {"fish-sign", 3, 4, std::nullopt, std::nullopt, std::nullopt, std::nullopt},
      {"graphic-kn-4", 3, 6, true, true, true, true},
      {"graphic-kn-5", 4, 10, true, true, true, true},
      {"graphic-cycle-4", 3, 4, false, false, false, false},
      {"graphic-cycle-5", 4, 5, false, false, false, false},
      {"uniform-2-3", 2, 3, true, true, true, true},
      {"uniform-3-4", 3, 4, std::nullopt, std::nullopt, std::nullopt, false},
      {"uniform-3-3", 3, 3, true, true, true, std::nullopt},
  };
  return entries;
}

}  // namespace modjoin
