#pragma once

#include <string>

#include <json.hpp>

#include "modjoin/certificate.hpp"
#include "modjoin/corpus.hpp"
#include "modjoin/divisional.hpp"
#include "modjoin/join.hpp"
#include "modjoin/modularity.hpp"

namespace modjoin {

using json = nlohmann::ordered_json;

/// Coefficients as decimal strings, constant term first.
json poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const json& j);

json field_to_json(const Field& f);
Field field_from_json(const json& j);

json subset_to_json(const Subset& s);
/// Throws Errc::InvalidInput on out-of-range or repeated indices.
Subset subset_from_json(const json& j, std::size_t ground);

json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const json& j);

json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);
json gain_graph_to_json(const GainGraph& g);
GainGraph gain_graph_from_json(const json& j);

json lattice_to_json(const FlatLattice& l);
json witness_to_json(const ModularityWitness& w);
json flag_to_json(const DivisionalFlag& f);
json join_to_json(const JoinDecomposition& d);

json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j, std::size_t ground);
Certificate flag_certificate(const DivisionalFlag& f);
Certificate chain_certificate(const std::vector<Flat>& chain);

/// Builds the matroid described by a JSON document. Recognized shapes:
///   arrangement  {"field", "dim", "forms", "labels"?}
///   matrix       {"field", "rows", "labels"?}        (atoms are columns)
///   graph        {"vertices", "edges": [[u,v],...]}
///   gain graph   {"vertices", "group", "edges": [[u,v,"g"],...], "loops"?, "matroid"?: "frame"|"lift"}
///   uniform      {"uniform": [k, n]}
/// An explicit "type" key selects the shape. Throws Errc::InvalidInput.
NamedInput input_from_json(const json& j, const Limits& limits = {});

/// A path to a JSON file, or a named input. Throws Errc::InvalidInput.
NamedInput load_input(const std::string& source, const Limits& limits = {});

}  // namespace modjoin
