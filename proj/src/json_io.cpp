#include "modjoin/json_io.hpp"

#include <fstream>
#include <sstream>

#include "modjoin/errors.hpp"
#include "modjoin/graph.hpp"

namespace modjoin {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::InvalidInput, what); }

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

int need_int(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer()) bad(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

json scalar_to_json(const FieldScalar& s) {
  if (!s.is_rational()) return s.residue_value().value;
  const mpq_class& q = s.rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return s.to_string();
}

FieldScalar scalar_from_json(const json& j, const Field& f) {
  if (j.is_number_integer()) return FieldScalar(j.get<std::int64_t>(), f);
  if (j.is_string()) return FieldScalar::parse(j.get<std::string>(), f);
  bad("matrix entries must be integers or \"p/q\" strings");
}

std::vector<std::string> labels_from_json(const json& j) {
  std::vector<std::string> out;
  if (!j.contains("labels")) return out;
  for (const auto& l : j.at("labels")) {
    if (!l.is_string()) bad("labels must be strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

std::vector<std::vector<FieldScalar>> scalar_rows(const json& rows, const Field& f) {
  if (!rows.is_array()) bad("expected an array of rows");
  std::vector<std::vector<FieldScalar>> out;
  for (const auto& r : rows) {
    if (!r.is_array()) bad("each row must be an array");
    std::vector<FieldScalar> row;
    for (const auto& e : r) row.push_back(scalar_from_json(e, f));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

json poly_to_json(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

IntPolynomial poly_from_json(const json& j) {
  if (!j.is_array()) bad("polynomial must be an array of decimal strings");
  std::vector<mpz_class> coeffs;
  for (const auto& c : j) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long>());
    } else if (c.is_string()) {
      mpz_class v;
      if (v.set_str(c.get<std::string>(), 10) != 0) bad("bad coefficient '" + c.get<std::string>() + "'");
      coeffs.push_back(v);
    } else {
      bad("polynomial coefficients must be strings");
    }
  }
  return IntPolynomial(std::move(coeffs));
}

json field_to_json(const Field& f) {
  if (f.is_rational()) return {{"kind", "rational"}};
  return {{"kind", "gf"}, {"p", f.p}};
}

Field field_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "Q" || s == "rational") return Field::rational();
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') return Field::gf(std::stoull(s.substr(3, s.size() - 4)));
    bad("unknown field '" + s + "'");
  }
  const auto kind = need(j, "kind").get<std::string>();
  if (kind == "rational") return Field::rational();
  if (kind == "gf") {
    const json& p = need(j, "p");
    if (!p.is_number_unsigned()) bad("field prime must be a positive integer");
    return Field::gf(p.get<std::uint64_t>());
  }
  bad("unknown field kind '" + kind + "'");
}

json subset_to_json(const Subset& s) { return s.indices(); }

Subset subset_from_json(const json& j, std::size_t ground) {
  if (!j.is_array()) bad("atom sets must be arrays of indices");
  Mask m = 0;
  for (const auto& e : j) {
    if (!e.is_number_integer()) bad("atom indices must be integers");
    const auto i = e.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= ground) bad("atom index " + std::to_string(i) + " out of range");
    if (m & bit(static_cast<std::size_t>(i))) bad("atom index " + std::to_string(i) + " repeated");
    m |= bit(static_cast<std::size_t>(i));
  }
  return Subset(ground, m);
}

json arrangement_to_json(const Arrangement& a) {
  json forms = json::array();
  for (Eigen::Index i = 0; i < a.forms.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < a.forms.cols(); ++k) row.push_back(scalar_to_json(a.forms.at(i, k)));
    forms.push_back(row);
  }
  return {{"type", "arrangement"}, {"field", field_to_json(a.field)}, {"dim", a.dim}, {"forms", forms},
          {"labels", a.labels}};
}

Arrangement arrangement_from_json(const json& j) {
  const Field f = field_from_json(need(j, "field"));
  const int dim = need_int(j, "dim");
  return make_arrangement(f, dim, scalar_rows(need(j, "forms"), f), labels_from_json(j));
}

json group_to_json(const FiniteGroup& g) {
  switch (g.kind()) {
    case FiniteGroup::Kind::Trivial: return {{"kind", "trivial"}};
    case FiniteGroup::Kind::Sign: return {{"kind", "sign"}};
    case FiniteGroup::Kind::ZMod: return {{"kind", "zmod"}, {"p", g.order()}};
    case FiniteGroup::Kind::Table: break;
  }
  json out = {{"kind", "table"}, {"elements", g.names()}, {"table", g.table()}};
  auto emb = [](const GroupEmbedding& e) {
    json values = json::array();
    for (const auto& v : e.image) values.push_back(scalar_to_json(v));
    return json{{"field", field_to_json(e.field)}, {"values", values}};
  };
  if (g.multiplicative()) out["multiplicative"] = emb(*g.multiplicative());
  if (g.additive()) out["additive"] = emb(*g.additive());
  return out;
}

FiniteGroup group_from_json(const json& j) {
  if (j.is_string()) return group_from_token(j.get<std::string>());
  const auto kind = need(j, "kind").get<std::string>();
  if (kind == "trivial") return FiniteGroup::trivial();
  if (kind == "sign") return FiniteGroup::sign();
  if (kind == "zmod") return FiniteGroup::zmod(need_int(j, "p"));
  if (kind != "table") bad("unknown group kind '" + kind + "'");
  std::vector<std::string> names;
  for (const auto& n : need(j, "elements")) names.push_back(n.get<std::string>());
  std::vector<std::vector<int>> table;
  for (const auto& row : need(j, "table")) table.push_back(row.get<std::vector<int>>());
  auto emb = [&](const char* key) -> std::optional<GroupEmbedding> {
    if (!j.contains(key)) return std::nullopt;
    const json& e = j.at(key);
    GroupEmbedding out{field_from_json(need(e, "field")), {}};
    for (const auto& v : need(e, "values")) out.image.push_back(scalar_from_json(v, out.field));
    return out;
  };
  return FiniteGroup::table(std::move(names), std::move(table), emb("multiplicative"), emb("additive"));
}

json gain_graph_to_json(const GainGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, g.group().name(e.g)});
  return {{"type", "gain-graph"}, {"vertices", g.vertices()}, {"group", group_to_json(g.group())},
          {"edges", edges}, {"loops", g.loops()}};
}

GainGraph gain_graph_from_json(const json& j) {
  const FiniteGroup group = group_from_json(need(j, "group"));
  std::vector<GainEdge> edges;
  for (const auto& e : need(j, "edges")) {
    if (!e.is_array() || e.size() != 3) bad("gain edges are [u, v, \"g\"] triples");
    const int g = e[2].is_string() ? group.element(e[2].get<std::string>()) : group.element(e[2].dump());
    edges.push_back({e[0].get<int>(), e[1].get<int>(), g});
  }
  std::vector<int> loops;
  if (j.contains("loops")) loops = j.at("loops").get<std::vector<int>>();
  return GainGraph(need_int(j, "vertices"), group, edges, loops);
}

json lattice_to_json(const FlatLattice& l) {
  json flats = json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    flats.push_back({{"rank", l.rank_of(i)}, {"atoms", subset_to_json(l.flat(i).atoms)}});
  }
  return {{"rank", l.rank()}, {"size", l.size()}, {"rank_counts", l.rank_counts()}, {"flats", flats}};
}

json witness_to_json(const ModularityWitness& w) {
  json out = {{"criterion", criterion_name(w.criterion)}, {"modular", w.modular}};
  if (w.violating_flat) out["violating_flat"] = subset_to_json(*w.violating_flat);
  if (w.circuit) out["circuit"] = subset_to_json(*w.circuit);
  if (w.atom) out["atom"] = *w.atom;
  if (w.uncovered_pair) out["uncovered_pair"] = {w.uncovered_pair->first, w.uncovered_pair->second};
  if (!w.triangles.empty()) out["triangles"] = w.triangles;
  return out;
}

json flag_to_json(const DivisionalFlag& f) {
  json flats = json::array(), quotients = json::array(), roots = json::array();
  for (const auto& x : f.flats) flats.push_back(subset_to_json(x.atoms));
  for (const auto& q : f.quotients) quotients.push_back(poly_to_json(q));
  for (const auto& a : f.roots()) roots.push_back(a.get_str());
  return {{"flats", flats}, {"roots", roots}, {"quotients", quotients}};
}

json join_to_json(const JoinDecomposition& d) {
  return {{"E1", subset_to_json(d.e1)}, {"E2", subset_to_json(d.e2)}, {"X", subset_to_json(d.x)},
          {"X_round", d.x_round}};
}

json certificate_to_json(const Certificate& c) {
  json out = {{"kind", cert_kind_name(c.kind)}, {"subject", subset_to_json(c.subject)}};
  if (!c.flats.empty()) {
    json flats = json::array();
    for (const auto& f : c.flats) flats.push_back(subset_to_json(f));
    out["flats"] = flats;
  }
  if (!c.roots.empty()) {
    json roots = json::array();
    for (const auto& r : c.roots) roots.push_back(r.get_str());
    out["roots"] = roots;
  }
  if (!c.children.empty()) {
    json children = json::array();
    for (const auto& ch : c.children) children.push_back(certificate_to_json(ch));
    out["children"] = children;
  }
  return out;
}

Certificate certificate_from_json(const json& j, std::size_t ground) {
  if (!j.is_object()) bad("certificate nodes must be objects");
  Certificate c;
  c.kind = cert_kind_from_name(need(j, "kind").get<std::string>());
  c.subject = subset_from_json(need(j, "subject"), ground);
  if (j.contains("flats")) {
    for (const auto& f : j.at("flats")) c.flats.push_back(subset_from_json(f, ground));
  }
  if (j.contains("roots")) {
    for (const auto& r : j.at("roots")) {
      mpz_class v;
      const std::string s = r.is_string() ? r.get<std::string>() : r.dump();
      if (v.set_str(s, 10) != 0) bad("bad root '" + s + "'");
      c.roots.push_back(v);
    }
  }
  if (j.contains("children")) {
    for (const auto& ch : j.at("children")) c.children.push_back(certificate_from_json(ch, ground));
  }
  return c;
}

Certificate flag_certificate(const DivisionalFlag& f) {
  Certificate c;
  c.kind = CertKind::Flag;
  c.subject = f.flats.back().atoms;
  for (const auto& x : f.flats) c.flats.push_back(x.atoms);
  c.roots = f.roots();
  return c;
}

Certificate chain_certificate(const std::vector<Flat>& chain) {
  Certificate c;
  c.kind = CertKind::SupersolvableChain;
  c.subject = chain.back().atoms;
  for (const auto& x : chain) c.flats.push_back(x.atoms);
  return c;
}

NamedInput input_from_json(const json& j, const Limits& limits) {
  if (!j.is_object()) bad("input must be a JSON object");
  std::string type = j.value("type", "");
  if (type.empty()) {
    if (j.contains("forms")) type = "arrangement";
    else if (j.contains("rows")) type = "matrix";
    else if (j.contains("group")) type = "gain-graph";
    else if (j.contains("uniform")) type = "uniform";
    else if (j.contains("edges")) type = "graph";
    else bad("cannot tell what kind of input this is");
  }
  const std::string name = j.value("name", type);

  auto guard = [&](std::size_t atoms) {
    if (atoms > limits.max_atoms) throw Error(Errc::TooLarge, name + " exceeds the atom limit");
  };

  if (type == "arrangement") {
    Arrangement a = arrangement_from_json(j);
    guard(a.size());
    return {name, dependence_matroid(a), a, std::nullopt};
  }
  if (type == "matrix") {
    const Field f = field_from_json(need(j, "field"));
    const auto rows = scalar_rows(need(j, "rows"), f);
    const Eigen::Index cols = rows.empty() ? 0 : static_cast<Eigen::Index>(rows[0].size());
    guard(static_cast<std::size_t>(cols));
    FieldMatrix m(f, static_cast<Eigen::Index>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<Eigen::Index>(rows[i].size()) != cols) bad("matrix rows differ in length");
      for (Eigen::Index k = 0; k < cols; ++k) m.set(static_cast<Eigen::Index>(i), k, rows[i][static_cast<std::size_t>(k)]);
    }
    return {name, linear_matroid(m, labels_from_json(j)), std::nullopt, std::nullopt};
  }
  if (type == "graph") {
    SimpleGraph g{need_int(j, "vertices"), {}};
    for (const auto& e : need(j, "edges")) {
      if (!e.is_array() || e.size() != 2) bad("graph edges are [u, v] pairs");
      g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    g.validate();
    guard(g.edges.size());
    return {name, graphic_matroid(g), std::nullopt, std::nullopt};
  }
  if (type == "gain-graph") {
    GainGraph g = gain_graph_from_json(j);
    const std::string kind = j.value("matroid", "frame");
    if (kind == "frame") {
      guard(g.atom_count());
      return {name, frame_matroid(g), std::nullopt, g};
    }
    if (kind == "lift") {
      guard(g.edges().size() + 1);
      return {name, lift_matroid(g), std::nullopt, g};
    }
    bad("gain-graph matroid must be \"frame\" or \"lift\"");
  }
  if (type == "uniform") {
    const json& u = need(j, "uniform");
    if (!u.is_array() || u.size() != 2) bad("uniform takes [k, n]");
    const int k = u[0].get<int>(), n = u[1].get<int>();
    if (k < 0 || n < 0) bad("uniform parameters must be nonnegative");
    guard(static_cast<std::size_t>(n));
    return {name, uniform_matroid(k, static_cast<std::size_t>(n)), std::nullopt, std::nullopt};
  }
  bad("unknown input type '" + type + "'");
}

NamedInput load_input(const std::string& source, const Limits& limits) {
  std::ifstream in(source);
  if (in) {
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      bad("cannot parse " + source + ": " + e.what());
    }
    try {
      auto out = input_from_json(j, limits);
      if (!j.contains("name")) out.name = source;
      return out;
    } catch (const json::exception& e) {
      bad(std::string("malformed input: ") + e.what());
    }
  }
  if (auto named = named_input(source, limits)) return *named;
  bad("'" + source + "' is neither a readable file nor a known name");
}

}  // namespace modjoin
