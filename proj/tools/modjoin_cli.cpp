// modjoin: batch front end over the modjoin library. Reports are JSON on
// standard output (or --output); diagnostics go to standard error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "modjoin/errors.hpp"
#include "modjoin/json_io.hpp"
#include "modjoin/version.hpp"

using namespace modjoin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitGuardrail = 3;
constexpr int kExitVerify = 4;

struct Options {
  std::string input;
  std::string output;
  std::string certificate;
  std::string realize_kind = "auto";
  std::size_t max_atoms = Limits{}.max_atoms;
  std::size_t max_flats = Limits{}.max_flats;
  bool timing = false;
  bool list_flats = false;

  Limits limits() const { return {max_atoms, max_flats}; }
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::TooLarge: return kExitGuardrail;
    case Errc::InvalidInput:
    case Errc::NotPrime:
    case Errc::NotSimple:
    case Errc::NotAFlat:
    case Errc::HasLoops:
    case Errc::NotSimpleFrame:
    case Errc::NoMultiplicativeEmbedding:
    case Errc::NoAdditiveEmbedding:
    case Errc::SizeMismatch: return kExitInvalid;
    default: return kExitFailed;
  }
}

json input_descriptor(const NamedInput& in) {
  json d = {{"name", in.name}, {"atoms", in.matroid.size()}, {"rank", in.matroid.full_rank()},
            {"labels", in.matroid.labels()}};
  if (in.arrangement) d["arrangement"] = arrangement_to_json(*in.arrangement);
  if (in.gain_graph) d["gain_graph"] = gain_graph_to_json(*in.gain_graph);
  return d;
}

json chain_to_json(const std::vector<Flat>& chain) {
  json out = json::array();
  for (const auto& f : chain) out.push_back(subset_to_json(f.atoms));
  return out;
}

json run_analysis(const std::string& cmd, const NamedInput& in, const Options& opt) {
  if (cmd == "realize") {
    if (!in.gain_graph) throw Error(Errc::InvalidInput, "realize needs a gain-graph input");
    const GainGraph& g = *in.gain_graph;
    std::string kind = opt.realize_kind;
    if (kind == "auto") kind = (g.loops().empty() && in.matroid.size() == g.edges().size() + 1) ? "lift" : "frame";
    const Arrangement a = kind == "lift" ? realize_lift_arrangement(g) : realize_frame_arrangement(g);
    const Matroid ma = dependence_matroid(a);
    const Matroid mg = kind == "lift" ? lift_matroid(g) : frame_matroid(g);
    const Agreement ag = rank_agreement(mg, ma);
    json agreement = {{"agree", ag.agree}, {"exhaustive", ag.exhaustive}, {"checked", ag.checked}};
    if (ag.witness) agreement["witness"] = subset_to_json(*ag.witness);
    return {{"matroid", kind}, {"arrangement", arrangement_to_json(a)}, {"rank_agreement", agreement}};
  }

  const FlatLattice l = enumerate_flats(in.matroid, opt.limits());
  if (cmd == "charpoly") {
    const IntPolynomial p = charpoly(l);
    return {{"charpoly", poly_to_json(p)}, {"degree", p.degree()}, {"text", p.to_string()}};
  }
  if (cmd == "flats") {
    json out = {{"flat_count", l.size()}, {"rank_counts", l.rank_counts()}};
    if (opt.list_flats) out["flats"] = lattice_to_json(l)["flats"];
    return out;
  }
  if (cmd == "modular-flats") {
    json flats = json::array();
    for (auto i : modular_flats(l, l.top())) flats.push_back(subset_to_json(l.flat(i).atoms));
    return {{"count", flats.size()}, {"modular_flats", flats}};
  }
  if (cmd == "round") {
    const RoundnessWitness w = is_round(l);
    json out = {{"round", w.round}};
    if (w.cover) out["cover"] = {subset_to_json(w.cover->first), subset_to_json(w.cover->second)};
    return out;
  }
  if (cmd == "supersolvable") {
    const auto chain = supersolvable_chain(l);
    json out = {{"supersolvable", chain.has_value()}};
    if (chain) {
      out["chain"] = chain_to_json(*chain);
      out["certificate"] = certificate_to_json(chain_certificate(*chain));
    }
    return out;
  }
  if (cmd == "divflag") {
    const auto flag = divisional_flag(l);
    json out = {{"divisional", flag.has_value()}};
    if (flag) {
      out["flag"] = flag_to_json(*flag);
      out["certificate"] = certificate_to_json(flag_certificate(*flag));
    }
    return out;
  }
  if (cmd == "me-cert") {
    const auto cert = me_certify(l);
    json out = {{"modularly_extended", cert.has_value()}};
    if (cert) {
      out["nodes"] = certificate_size(*cert);
      out["certificate"] = certificate_to_json(*cert);
    }
    return out;
  }
  if (cmd == "joins") {
    json joins = json::array();
    for (const auto& d : find_modular_joins(l)) joins.push_back(join_to_json(d));
    return {{"count", joins.size()}, {"joins", joins}};
  }
  throw Error(Errc::InvalidInput, "unknown subcommand '" + cmd + "'");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, "cannot parse " + path + ": " + e.what());
  }
}

// Accepts a bare certificate or a report carrying one.
const json& certificate_node(const json& j) {
  if (j.is_object() && j.contains("kind")) return j;
  if (j.is_object() && j.contains("result") && j["result"].contains("certificate")) return j["result"]["certificate"];
  if (j.is_object() && j.contains("certificate")) return j["certificate"];
  throw Error(Errc::InvalidInput, "no certificate found");
}

json corpus_self_test(const Options& opt, bool& all_ok) {
  json entries = json::array();
  all_ok = true;
  for (const auto& e : corpus()) {
    json row = {{"name", e.name}};
    bool ok = true;
    try {
      const auto in = named_input(e.name, opt.limits());
      if (!in) throw Error(Errc::InvalidInput, "unknown corpus member");
      const FlatLattice l = enumerate_flats(in->matroid, opt.limits());
      const auto chain = supersolvable_chain(l);
      const auto flag = divisional_flag(l);
      const auto cert = me_certify(l);
      const bool round = is_round(l).round;
      auto check = [&](const char* key, const auto& stated, const auto& got) {
        row[key] = got;
        if (stated && *stated != got) {
          ok = false;
          row["mismatch"].push_back(key);
        }
      };
      check("rank", e.rank, l.rank());
      check("atoms", e.atoms, in->matroid.size());
      check("supersolvable", e.supersolvable, chain.has_value());
      check("modularly_extended", e.modularly_extended, cert.has_value());
      check("divisional", e.divisional, flag.has_value());
      check("round", e.round, round);

      bool replay = true;
      if (chain) replay = replay && verify_certificate(l, chain_certificate(*chain)).ok;
      if (flag) replay = replay && verify_certificate(l, flag_certificate(*flag)).ok;
      if (cert) {
        const Certificate back = certificate_from_json(certificate_to_json(*cert), in->matroid.size());
        replay = replay && back == *cert && verify_certificate(l, back).ok;
      }
      row["certificates_verify"] = replay;
      ok = ok && replay;
    } catch (const Error& err) {
      row["error"] = err.what();
      ok = false;
    }
    row["ok"] = ok;
    all_ok = all_ok && ok;
    entries.push_back(row);
  }
  return entries;
}

void emit(const json& report, const Options& opt) {
  const std::string text = report.dump(2) + "\n";
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw Error(Errc::InvalidInput, "cannot write " + opt.output);
  out << text;
}

int dispatch(const std::string& cmd, const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  json report = {{"tool", "modjoin"}, {"version", kVersion}, {"command", cmd}};
  int status = kExitOk;

  if (cmd == "corpus") {
    bool all_ok = true;
    report["result"] = {{"entries", corpus_self_test(opt, all_ok)}};
    report["result"]["ok"] = all_ok;
    if (!all_ok) {
      std::cerr << "corpus self-test found mismatches\n";
      status = kExitFailed;
    }
  } else {
    const NamedInput in = load_input(opt.input, opt.limits());
    report["input"] = input_descriptor(in);
    if (cmd == "verify") {
      const json doc = read_json_file(opt.certificate);
      Certificate cert;
      try {
        cert = certificate_from_json(certificate_node(doc), in.matroid.size());
      } catch (const json::exception& e) {
        throw Error(Errc::InvalidInput, std::string("malformed certificate: ") + e.what());
      }
      const FlatLattice l = enumerate_flats(in.matroid, opt.limits());
      const VerifyResult v = verify_certificate(l, cert);
      json result = {{"verified", v.ok}, {"nodes", certificate_size(cert)}};
      if (!v.ok) {
        result["path"] = v.path;
        result["message"] = v.message;
        std::cerr << "verification failed at " << v.path << ": " << v.message << "\n";
        status = kExitVerify;
      }
      report["result"] = result;
    } else {
      report["result"] = run_analysis(cmd, in, opt);
    }
  }

  if (opt.timing) {
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    report["timing_ms"] = elapsed.count();
  }
  emit(report, opt);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular flats, modular joins and divisional flags of simple matroids"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input,-i", opt.input, "JSON file or named input");
    if (needs_input) in->required();
    sub->add_option("--output,-o", opt.output, "write the report here instead of standard output");
    sub->add_option("--max-atoms", opt.max_atoms, "guardrail on the number of atoms")->capture_default_str();
    sub->add_option("--max-flats", opt.max_flats, "guardrail on the number of flats")->capture_default_str();
    sub->add_flag("--timing", opt.timing, "include wall-clock time in the report");
  };

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"charpoly", "characteristic polynomial"},
      {"flats", "flat counts per rank"},
      {"modular-flats", "all modular flats"},
      {"round", "roundness with a covering pair when not round"},
      {"supersolvable", "saturated chain of modular flats"},
      {"divflag", "divisional flag"},
      {"me-cert", "modularly extended certificate"},
      {"joins", "modular join decompositions"},
      {"realize", "arrangement realizing a gain-graph matroid"},
      {"verify", "replay a certificate against the input"},
      {"corpus", "regenerate the named examples and check their stated facts"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, name != "corpus");
    if (name == "flats") sub->add_flag("--list", opt.list_flats, "list every flat");
    if (name == "realize") {
      sub->add_option("--matroid", opt.realize_kind, "frame, lift or auto")
          ->check(CLI::IsMember({"auto", "frame", "lift"}))
          ->capture_default_str();
    }
    if (name == "verify") sub->add_option("--verify,--certificate", opt.certificate, "certificate JSON")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return kExitInvalid;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, opt);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    std::cerr << "InvalidInput: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitFailed;
  }
}
