#include "cleangraph/cli/app.hpp"

#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "cleangraph/clean_graph.hpp"
#include "cleangraph/cli/export.hpp"
#include "cleangraph/cli/parse.hpp"
#include "cleangraph/iso.hpp"
#include "cleangraph/theorems.hpp"

namespace cleangraph::cli {

namespace {

const std::vector<std::string> kGraphKinds = {"cl", "cl1", "cl2", "idem",
                                              "shuriken"};

struct GraphRequest {
  std::string ring;
  std::string kind = "cl2";
  std::optional<std::size_t> t;
  std::optional<std::size_t> n;
};

Graph build_graph(const GraphRequest& req, const Caps& caps) {
  const RingSpec spec = parse_ring_spec(req.ring);
  const RingTables tables = analyze(build_ring(spec), caps);
  if (req.kind == "cl") return clean_graph(tables, caps).graph;
  if (req.kind == "cl1") return cl1(tables, caps).graph;
  if (req.kind == "cl2") return cl2(tables, caps).graph;
  if (req.kind == "idem") return idempotent_graph(tables);
  const std::size_t t = req.t.value_or(tables.unit.involution_count);
  const std::size_t n = req.n.value_or(tables.unit.size());
  const Graph base = idempotent_graph(tables);
  if (n * (base.order() + 1) > caps.max_vertices) {
    throw budget_exceeded("shuriken would have " +
                          std::to_string(n * (base.order() + 1)) +
                          " vertices, over the vertex cap");
  }
  return shuriken({t, n, base}).graph;
}

void write_stats(const Graph& g, std::ostream& out) {
  const Fingerprint fp = fingerprint(g);
  out << "vertices: " << g.order() << "\n"
      << "edges: " << g.size() << "\n"
      << "components: " << fp.components.size() << "\n"
      << "degrees:";
  for (std::size_t d : fp.degrees) out << ' ' << d;
  out << "\n";
}

int cmd_build(const GraphRequest& req, const std::string& format,
              const Caps& caps, std::ostream& out) {
  const Graph g = build_graph(req, caps);
  if (format == "dot") {
    out << export_dot(g);
  } else if (format == "graph6") {
    out << export_graph6(g) << "\n";
  } else {
    write_stats(g, out);
  }
  return kExitOk;
}

int cmd_iso(const GraphRequest& a, const GraphRequest& b, std::uint64_t budget,
            const Caps& caps, std::ostream& out) {
  const Graph ga = build_graph(a, caps);
  const Graph gb = build_graph(b, caps);
  IsoResult r;
  try {
    r = is_isomorphic(ga, gb, budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInconclusive) throw;
    out << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  }
  if (!r.isomorphic()) {
    out << "not isomorphic";
    if (r.screened_by) out << " (" << *r.screened_by << " differ)";
    out << "\n";
    return kExitNo;
  }
  out << "isomorphic (" << r.search_nodes << " search nodes)\n";
  for (Vertex v = 0; v < ga.order(); ++v) {
    out << "  " << ga.label(v) << " -> " << gb.label((*r.witness)[v]) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const SuiteOptions& options, const std::string& json_path,
               const Caps& caps, std::ostream& out) {
  Workspace ws(caps);
  const std::vector<VerificationReport> reports = run_suite(ws, options);
  bool all_pass = true;
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : reports) {
    all_pass = all_pass && r.passed();
    out << (r.passed() ? "PASS " : "FAIL ") << r.claim_id << ": "
        << r.instances.size() << " instances, "
        << r.count(InstanceVerdict::kFail) << " fail, "
        << r.count(InstanceVerdict::kInconclusive) << " inconclusive, "
        << r.count(InstanceVerdict::kFinding) << " findings ("
        << static_cast<long long>(r.wall_millis) << " ms)\n";
    doc.push_back(to_json(r));
  }
  if (!json_path.empty()) {
    if (json_path == "-") {
      out << doc.dump(2) << "\n";
    } else {
      std::ofstream file(json_path);
      if (!file) throw domain_error("cannot write " + json_path);
      file << doc.dump(2) << "\n";
    }
  }
  return all_pass ? kExitOk : kExitNo;
}

int cmd_info(const std::string& ring, const Caps& caps, std::ostream& out) {
  const RingTables t = analyze(build_ring(parse_ring_spec(ring)), caps);
  out << "ring: " << t.ring.name() << "\n"
      << "|R|: " << t.ring.order() << "\n"
      << "|Id|: " << t.idem.all.size() << "\n"
      << "|U|: " << t.unit.size() << "\n"
      << "|U'|: " << t.unit.involution_count << "\n"
      << "O_e:\n";
  for (std::size_t i = 0; i < t.idem.all.size(); ++i) {
    out << "  " << t.ring.format(t.idem.all[i]) << ": " << t.idem.ortho[i]
        << "\n";
  }
  return kExitOk;
}

void add_graph_options(CLI::App* cmd, GraphRequest& req,
                       const std::string& suffix) {
  cmd->add_option("--ring" + suffix, req.ring, "Ring spec, e.g. \"Z3 x Z4\"")
      ->required();
  cmd->add_option("--graph" + suffix, req.kind, "Graph to build")
      ->check(CLI::IsMember(kGraphKinds));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Clean graphs of finite rings"};
  app.require_subcommand(1);
  Caps caps = Caps::from_env();

  GraphRequest build_req;
  std::string format = "stats";
  auto* build = app.add_subcommand("build", "Build a graph and export it");
  add_graph_options(build, build_req, "");
  build->add_option("--t", build_req.t, "Shuriken: complete copies");
  build->add_option("--n", build_req.n, "Shuriken: number of copies");
  build->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"dot", "graph6", "stats"}));

  GraphRequest iso_a, iso_b;
  std::uint64_t budget = caps.search_budget;
  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two graphs");
  add_graph_options(iso, iso_a, "-a");
  add_graph_options(iso, iso_b, "-b");
  iso->add_option("--budget", budget, "Search-node budget");

  SuiteOptions suite;
  std::string claim, json_path;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--claim", claim, "Run a single claim")
      ->check(CLI::IsMember(claim_ids()));
  verify->add_option("--bound", suite.prime_power_bound,
                     "Prime-power bound for the prime-power sweep");
  verify->add_option("--json", json_path, "Write reports as JSON (- = stdout)");

  std::string info_ring;
  auto* info = app.add_subcommand("info", "Idempotent and unit counts");
  info->add_option("--ring", info_ring, "Ring spec")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(build_req, format, caps, out);
    if (iso->parsed()) return cmd_iso(iso_a, iso_b, budget, caps, out);
    if (verify->parsed()) {
      if (!claim.empty()) suite.claim = claim;
      return cmd_verify(suite, json_path, caps, out);
    }
    return cmd_info(info_ring, caps, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kInvalidSpec: return kExitSpec;
      case ErrorKind::kBudget: return kExitBudget;
      case ErrorKind::kInconclusive: return kExitInconclusive;
      case ErrorKind::kDomain:
      case ErrorKind::kOutOfScope: return kExitDomain;
    }
    return kExitDomain;
  }
}

}  // namespace cleangraph::cli
