#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "modjoin/arrangement.hpp"
#include "modjoin/gaingraph.hpp"

namespace modjoin {

/// A named input together with where it came from.
struct NamedInput {
  std::string name;
  Matroid matroid;
  std::optional<Arrangement> arrangement;
  std::optional<GainGraph> gain_graph;
};

/// Named matroids: every arrangement name, plus
///   bowtie-frame, bowtie-lift, fish-<group>,
///   frame-kn-<n>-<group>, dowling-<n>-<group>, lift-kn-<n>-<group>,
///   graphic-kn-<n>, graphic-cycle-<n>, uniform-<k>-<n>
/// where <group> is trivial, sign or z<n>.
std::optional<NamedInput> named_input(const std::string& name, const Limits& limits = {});

/// Corpus member with the facts stated about it, where stated.
struct CorpusEntry {
  std::string name;
  std::optional<int> rank;
  std::optional<std::size_t> atoms;
  std::optional<bool> supersolvable;
  std::optional<bool> modularly_extended;
  std::optional<bool> divisional;
  std::optional<bool> round;
};

/// Every corpus member, in a fixed order.
const std::vector<CorpusEntry>& corpus();

FiniteGroup group_from_token(const std::string& token);

}  // namespace modjoin
