// domcycle command-line front end. Results go to stdout as JSON (or graph
// text for `construct`); errors go to stderr with exit code 1.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domcycle/campaign.hpp"
#include "domcycle/connectivity.hpp"
#include "domcycle/constructions.hpp"
#include "domcycle/corpus.hpp"
#include "domcycle/errors.hpp"
#include "domcycle/graph_io.hpp"
#include "domcycle/reductions.hpp"
#include "domcycle/search.hpp"
#include "domcycle/transitions.hpp"

using namespace domcycle;
using json = nlohmann::json;

namespace {

json certificate_json(const std::optional<CutCertificate>& cert) {
  if (!cert) return nullptr;
  return json{{"members", cert->members}, {"side_a", cert->side_a}, {"side_b", cert->side_b}};
}

TransitionSystem load_system(const Multigraph& h, const std::string& path) {
  return transition_system_from_codes(h, read_pairing_codes(read_file(path)));
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

void emit_graph(const Multigraph& g, const std::string& out) {
  if (out.empty()) {
    std::cout << write_mg(g);
  } else {
    write_file(out, write_mg(g));
  }
}

json contraction_json(const ContractionMap& cm) {
  return json{{"vertex_map", cm.vertex_map},
              {"edge_provenance", cm.edge_provenance},
              {"fibers", cm.fibers},
              {"contracted_edges", cm.contracted_edges}};
}

json search_json(const SearchOutcome& out, const std::string& emit) {
  json j{{"found", out.found}, {"nodes_expanded", out.nodes_expanded}};
  if (out.witness) {
    j["length"] = out.witness->length();
    j["witness"] = trail_json(*out.witness);
    if (!emit.empty()) write_file(emit, write_trail(*out.witness));
  }
  return j;
}

json trace_json(const PipelineTrace& trace) {
  json stages = json::array();
  for (const PipelineStage& s : trace.stages) {
    json stage{{"name", s.name}, {"vertices", s.vertices}, {"edges", s.edges}, {"note", s.note}};
    if (s.witness) stage["witness"] = trail_json(*s.witness);
    stages.push_back(std::move(stage));
  }
  json j{{"ok", trace.ok}, {"stages", std::move(stages)}, {"four_valent_counts", trace.four_valent_counts}};
  if (!trace.failure.empty()) j["failure"] = trace.failure;
  if (trace.result) j["result"] = trail_json(*trace.result);
  return j;
}

/// "60s", "2m", "500ms" or a bare number of seconds.
std::chrono::duration<double> parse_budget(const std::string& text) {
  std::size_t used = 0;
  const double value = std::stod(text, &used);
  const std::string unit = text.substr(used);
  if (unit.empty() || unit == "s") return std::chrono::duration<double>(value);
  if (unit == "ms") return std::chrono::duration<double>(value / 1000.0);
  if (unit == "m") return std::chrono::duration<double>(value * 60.0);
  if (unit == "h") return std::chrono::duration<double>(value * 3600.0);
  throw GraphError(ErrorCode::MalformedInput, "budget unit must be ms, s, m or h: " + text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dominating cycles, T-trails and the constructions relating them"};
  app.require_subcommand(1);
  int exit_status = 0;

  std::string graph_path, ts_path, trail_path, matching_path, out_path, emit_path, map_path;

  // ---- check ----
  auto* check = app.add_subcommand("check", "Connectivity and T-trail checks");
  check->require_subcommand(1);
  std::string kind = "vertex";
  auto* check_conn = check->add_subcommand("connectivity", "Vertex or edge connectivity with a cut certificate");
  check_conn->add_option("graph", graph_path, "graph6 string, graph6 file or .mg file")->required();
  check_conn->add_option("--kind", kind, "vertex or edge")->check(CLI::IsMember({"vertex", "edge"}));
  check_conn->callback([&] {
    const Multigraph g = load_graph(graph_path);
    const ConnectivityResult r = kind == "vertex" ? vertex_connectivity(g) : edge_connectivity(g);
    print(json{{"kind", kind}, {"value", r.value}, {"certificate", certificate_json(r.certificate)}});
  });

  std::optional<int> k;
  auto* check_cyclic = check->add_subcommand("cyclic", "Cyclic edge connectivity");
  check_cyclic->add_option("graph", graph_path)->required();
  check_cyclic->add_option("--k", k, "also report whether the graph is cyclically k-edge connected");
  check_cyclic->callback([&] {
    const Multigraph g = load_graph(graph_path);
    json j{{"kind", "cyclic_edge"}};
    if (has_two_disjoint_cycles(g)) {
      const ConnectivityResult r = cyclic_edge_connectivity(g);
      j["value"] = r.value;
      j["certificate"] = certificate_json(r.certificate);
      if (k) j["cyclically_k_connected"] = r.value >= *k;
    } else {
      // no cyclic cut exists, so every k holds vacuously
      j["value"] = nullptr;
      j["certificate"] = nullptr;
      if (k) j["cyclically_k_connected"] = true;
    }
    if (k) j["k"] = *k;
    print(j);
  });

  auto* check_tt = check->add_subcommand("t-trail", "Validate a T-trail");
  check_tt->add_option("graph", graph_path)->required();
  check_tt->add_option("ts", ts_path, ".ts pairing codes")->required();
  check_tt->add_option("trail", trail_path, ".trail file")->required();
  check_tt->callback([&] {
    const Multigraph h = load_graph(graph_path);
    const TransitionSystem t = load_system(h, ts_path);
    require_valid_transition_system(h, t);
    const ClosedTrail c = read_trail(read_file(trail_path));
    const TTrailCheck r = is_t_trail(h, t, c);
    json j{{"valid", r.ok}, {"reason", r.reason}, {"four_valent", r.ok ? json(four_valent_vertices(h, c)) : json()}};
    j["vertex"] = r.vertex ? json(*r.vertex) : json();
    print(j);
    if (!r.ok) exit_status = 2;
  });

  // ---- construct ----
  auto* construct = app.add_subcommand("construct", "Graph constructions; the result is printed as .mg text");
  construct->require_subcommand(1);
  auto* lg_cmd = construct->add_subcommand("line-graph", "L(G); with --emit-ts the canonical system of a cubic G");
  lg_cmd->add_option("graph", graph_path)->required();
  lg_cmd->add_option("--emit-ts", emit_path, "write the canonical transition system");
  lg_cmd->add_option("--out", out_path, "write the graph here instead of stdout");
  lg_cmd->callback([&] {
    const LineGraphResult r = line_graph(load_graph(graph_path));
    if (!emit_path.empty()) {
      if (!r.canonical_t) throw GraphError(ErrorCode::PreconditionViolated, "canonical system needs a cubic graph");
      write_file(emit_path, write_pairing_codes(pairing_codes(r.lg, *r.canonical_t)));
    }
    emit_graph(r.lg, out_path);
  });

  auto* split_cmd = construct->add_subcommand("split", "G(H,T) with its matching M_T");
  split_cmd->add_option("graph", graph_path)->required();
  split_cmd->add_option("ts", ts_path)->required();
  split_cmd->add_option("--out", out_path);
  split_cmd->add_option("--emit-matching", emit_path, "write the edge ids of M_T");
  split_cmd->callback([&] {
    const Multigraph h = load_graph(graph_path);
    const SplitResult r = split(h, load_system(h, ts_path));
    if (!emit_path.empty()) write_file(emit_path, write_edge_ids(r.matching.edges));
    emit_graph(r.g, out_path);
  });

  auto* cm_cmd = construct->add_subcommand("contract-matching", "G/M");
  cm_cmd->add_option("graph", graph_path)->required();
  cm_cmd->add_option("matching", matching_path, "one edge id per line")->required();
  cm_cmd->add_option("--out", out_path);
  cm_cmd->add_option("--map", map_path, "write vertex and edge provenance as JSON");
  cm_cmd->callback([&] {
    const Multigraph g = load_graph(graph_path);
    const ContractionMap cm = contract_matching(g, make_matching(g, read_edge_ids(read_file(matching_path))));
    if (!map_path.empty()) write_file(map_path, contraction_json(cm).dump(2) + "\n");
    emit_graph(cm.image_graph, out_path);
  });

  auto* ct_cmd = construct->add_subcommand("contract-triangles", "H': every triangle shrunk to a vertex");
  ct_cmd->add_option("graph", graph_path)->required();
  ct_cmd->add_option("--out", out_path);
  ct_cmd->add_option("--map", map_path, "write vertex and edge provenance as JSON");
  ct_cmd->callback([&] {
    const ContractionMap cm = contract_triangles(load_graph(graph_path));
    if (!map_path.empty()) write_file(map_path, contraction_json(cm).dump(2) + "\n");
    emit_graph(cm.image_graph, out_path);
  });

  // ---- search ----
  auto* search = app.add_subcommand("search", "Exact searches");
  search->require_subcommand(1);
  bool shortest = false;
  auto add_emit = [&](CLI::App* cmd) { cmd->add_option("--emit-witness", emit_path, "write the witness as a .trail file"); };

  auto* ham_cmd = search->add_subcommand("ham", "Hamiltonian cycle");
  ham_cmd->add_option("graph", graph_path)->required();
  add_emit(ham_cmd);
  ham_cmd->callback([&] { print(search_json(find_hamiltonian_cycle(load_graph(graph_path)), emit_path)); });

  auto* dc_cmd = search->add_subcommand("dc", "Dominating cycle");
  dc_cmd->add_option("graph", graph_path)->required();
  dc_cmd->add_flag("--shortest", shortest, "minimise the length");
  add_emit(dc_cmd);
  dc_cmd->callback([&] {
    const Multigraph g = load_graph(graph_path);
    print(search_json(shortest ? find_shortest_dominating_cycle(g) : find_dominating_cycle(g), emit_path));
  });

  auto* dcm_cmd = search->add_subcommand("dc-matching", "Cycle meeting every edge of a matching");
  dcm_cmd->add_option("graph", graph_path)->required();
  dcm_cmd->add_option("matching", matching_path)->required();
  add_emit(dcm_cmd);
  dcm_cmd->callback([&] {
    const Multigraph g = load_graph(graph_path);
    print(search_json(find_cycle_dominating_matching(g, make_matching(g, read_edge_ids(read_file(matching_path)))), emit_path));
  });

  auto* tt_cmd = search->add_subcommand("t-trail", "T-trail of a 4-regular graph");
  tt_cmd->add_option("graph", graph_path)->required();
  tt_cmd->add_option("ts", ts_path)->required();
  add_emit(tt_cmd);
  tt_cmd->callback([&] {
    const Multigraph h = load_graph(graph_path);
    print(search_json(find_t_trail(h, load_system(h, ts_path)), emit_path));
  });

  // ---- pipeline ----
  auto* pipeline = app.add_subcommand("pipeline", "End-to-end constructive pipelines");
  pipeline->require_subcommand(1);
  auto* p1 = pipeline->add_subcommand("prop1", "cubic G -> L(G) -> T-trail -> Hamiltonian cycle -> dominating cycle");
  p1->add_option("graph", graph_path)->required();
  p1->callback([&] {
    const PipelineTrace trace = run_line_graph_pipeline(load_graph(graph_path));
    print(trace_json(trace));
    if (!trace.ok) exit_status = 2;
  });
  auto* p2 = pipeline->add_subcommand("prop2", "(H,T) -> G(H,T) -> H' -> dominating cycle -> T-trail");
  p2->add_option("graph", graph_path)->required();
  p2->add_option("ts", ts_path)->required();
  p2->callback([&] {
    const Multigraph h = load_graph(graph_path);
    const PipelineTrace trace = run_triangle_contraction_pipeline(h, load_system(h, ts_path));
    print(trace_json(trace));
    if (!trace.ok) exit_status = 2;
  });

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "Run a verification campaign (exit 0 clean, 2 failures, 3 budget exceeded)");
  std::string campaign, budget, json_path;
  std::vector<std::string> corpus_args;
  CampaignOptions options;
  bool timings = false;
  verify->add_option("campaign", campaign)->required()->check(CLI::IsMember(campaign_names()));
  verify->add_option("--corpus", corpus_args, "builtin corpus name or corpus file (repeatable)");
  verify->add_option("--budget", budget, "wall-clock limit such as 60s or 5m");
  verify->add_option("--seed", options.seed, "seed for sampled instances");
  verify->add_option("--json", json_path, "write the report here (default stdout)");
  verify->add_option("--threads", options.threads, "worker threads (default: all cores)");
  verify->add_option("--samples", options.sampled_systems, "transition systems sampled per large host");
  verify->add_option("--trials", options.parity_trials, "parity trials");
  verify->add_flag("--timings", timings, "include wall-clock timings (makes reports run-dependent)");
  verify->callback([&] {
    options.campaign = campaign;
    for (const std::string& c : corpus_args) {
      if (auto builtin = builtin_corpus(c)) {
        options.corpora.push_back(std::move(*builtin));
      } else {
        options.corpora.push_back(load_corpus_file(c));
      }
    }
    if (!budget.empty()) options.budget = parse_budget(budget);
    const CampaignReport report = run_campaign(options);
    const std::string text = report_json(report, timings).dump(2) + "\n";
    if (json_path.empty()) {
      std::cout << text;
    } else {
      write_file(json_path, text);
    }
    for (const std::string& f : report.failures) std::cerr << "FAIL " << f << '\n';
    exit_status = exit_code(report);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // --help exits 0, usage errors 1
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_status;
}
