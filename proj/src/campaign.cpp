#include "domcycle/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <thread>

#include "domcycle/connectivity.hpp"
#include "domcycle/constructions.hpp"
#include "domcycle/errors.hpp"
#include "domcycle/reductions.hpp"
#include "domcycle/search.hpp"
#include "domcycle/transitions.hpp"

namespace domcycle {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct TaskResult {
  bool ran = false;
  bool ok = true;
  std::string result;
  std::string failure;
  json detail = json::object();
  std::optional<ClosedTrail> witness;
  double seconds = 0;
};

struct Task {
  std::size_t entry = 0;
  std::string label;
  bool claims = false;
  std::function<TaskResult()> run;
};

struct EntryPlan {
  std::string id;
  /// Result when the entry has no instances.
  std::string result = "pass";
  std::string skip_reason;
  json detail = json::object();
};

struct Plan {
  std::vector<EntryPlan> entries;
  std::vector<Task> tasks;
};

struct Target {
  std::string id;
  const CorpusEntry* entry;
};

TaskResult failed(std::string why, json detail = json::object()) {
  TaskResult r;
  r.ok = false;
  r.result = "fail";
  r.failure = std::move(why);
  r.detail = std::move(detail);
  return r;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string codes_label(const std::vector<int>& codes) {
  std::string label = "T=";
  for (int c : codes) label.push_back(static_cast<char>('0' + c));
  return label;
}

/// All 3^n code vectors up to the exhaustive limit, otherwise a fixed-seed
/// uniform sample drawn per host.
std::vector<std::vector<int>> choose_systems(const Multigraph& h, const CampaignOptions& options, std::string_view id, json& detail) {
  const auto n = static_cast<std::size_t>(h.vertex_count());
  std::vector<std::vector<int>> systems;
  if (h.vertex_count() <= options.exhaustive_vertex_limit) {
    detail["mode"] = "exhaustive";
    std::vector<int> codes(n, 0);
    while (true) {
      systems.push_back(codes);
      std::size_t v = n;
      while (v > 0 && codes[v - 1] == 2) codes[--v] = 0;
      if (v == 0) break;
      ++codes[v - 1];
    }
  } else {
    detail["mode"] = "sampled";
    std::mt19937_64 rng(options.seed ^ fnv1a(id));
    for (int i = 0; i < options.sampled_systems; ++i) {
      std::vector<int> codes(n);
      for (int& c : codes) c = static_cast<int>(rng() % 3);
      systems.push_back(std::move(codes));
    }
  }
  detail["systems"] = systems.size();
  return systems;
}

std::vector<EdgeId> sorted_edges(const ClosedTrail& c) {
  std::vector<EdgeId> e = trail_edges(c);
  std::sort(e.begin(), e.end());
  return e;
}

std::optional<bool> cyclically_four_connected(const Multigraph& g) {
  if (g.vertex_count() > kMaxCyclicConnectivityVertices) return std::nullopt;
  return is_cyclically_k_edge_connected(g, 4);
}

// ---- per-instance checks ----

TaskResult dcc_instance(const Multigraph& g) {
  TaskResult r;
  const SearchOutcome out = find_dominating_cycle(g);
  const std::optional<bool> cyclic4 = cyclically_four_connected(g);
  r.detail["found"] = out.found;
  r.detail["nodes"] = out.nodes_expanded;
  r.detail["cyclically_4_edge_connected"] = cyclic4 ? json(*cyclic4) : json();
  if (!out.found) {
    r.result = "no_dominating_cycle";
    if (cyclic4.value_or(false)) {
      r.ok = false;
      r.failure = "cyclically 4-edge connected cubic graph without a dominating cycle";
    }
    return r;
  }
  if (!is_dominating_cycle(g, *out.witness)) return failed("search returned an invalid dominating cycle");
  r.result = "dominating_cycle";
  r.detail["length"] = out.witness->length();
  r.witness = out.witness;
  return r;
}

TaskResult nwcstar_instance(const Multigraph& h, const std::vector<int>& codes) {
  const TransitionSystem t = transition_system_from_codes(h, codes);
  const SearchOutcome out = find_t_trail(h, t);
  TaskResult r;
  r.detail["t_hamiltonian"] = out.found ? 1 : 0;
  r.detail["nodes"] = out.nodes_expanded;
  if (!out.found) return failed("no T-trail", r.detail);
  TTrail::validated(h, t, *out.witness);
  r.witness = out.witness;
  return r;
}

TaskResult cross_oracle_instance(const Multigraph& h, const std::vector<int>& codes) {
  const TransitionSystem t = transition_system_from_codes(h, codes);
  const SplitResult sr = split(h, t);
  const SearchOutcome direct = find_t_trail(h, t);
  const SearchOutcome via_split = find_cycle_dominating_matching(sr.g, sr.matching);
  TaskResult r;
  r.detail["t_hamiltonian"] = direct.found ? 1 : 0;
  r.detail["split_cycle_found"] = via_split.found ? 1 : 0;
  if (direct.found != via_split.found) return failed("T-trail search and split-graph search disagree", r.detail);
  if (!direct.found) return r;

  const ClosedTrail cycle = split_cycle_from_trail(h, t, sr, *direct.witness);
  if (!is_cycle(sr.g, cycle) || !dominates_edges(sr.g, cycle, sr.matching.edges)) {
    return failed("T-trail did not convert to a cycle dominating M_T", r.detail);
  }
  if (!(trail_from_split_cycle(h, t, sr, cycle).trail() == *direct.witness)) {
    return failed("trail -> cycle -> trail changed the trail", r.detail);
  }
  const TTrail back = trail_from_split_cycle(h, t, sr, *via_split.witness);
  if (sorted_edges(split_cycle_from_trail(h, t, sr, back.trail())) != sorted_edges(*via_split.witness)) {
    return failed("cycle -> trail -> cycle changed the edge set", r.detail);
  }
  r.detail["round_trips"] = 2;
  return r;
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

TaskResult lemma_l2_instance(const Multigraph& h, const std::vector<int>& codes) {
  const LemmaReport rep = verify_lemma_l2(h, transition_system_from_codes(h, codes), true);
  TaskResult r;
  r.detail["cyclic_three_cuts"] = rep.cyclic_three_cuts;
  r.detail["triangles"] = rep.triangles;
  if (!rep.holds) return failed(joined(rep.violations), r.detail);
  return r;
}

TaskResult lemma_lll_instance(const Multigraph& h, const std::vector<int>& codes) {
  const LemmaReport rep = verify_lemma_lll(h, transition_system_from_codes(h, codes), true);
  TaskResult r;
  r.detail["h_prime_K4"] = rep.h_prime_exception == "K4" ? 1 : 0;
  r.detail["h_prime_K33"] = rep.h_prime_exception == "K3,3" ? 1 : 0;
  r.detail["h_prime_lambda_c_at_least_4"] = rep.h_prime_lambda_c.has_value() && *rep.h_prime_lambda_c >= 4 ? 1 : 0;
  if (!rep.holds) return failed(joined(rep.violations), r.detail);
  return r;
}

TaskResult prop2_instance(const Multigraph& h, const std::vector<int>& codes) {
  const PipelineTrace trace = run_triangle_contraction_pipeline(h, transition_system_from_codes(h, codes), true);
  TaskResult r;
  r.detail["lifted"] = trace.ok ? 1 : 0;
  if (!trace.ok) return failed(trace.failure, r.detail);
  r.witness = trace.result;
  return r;
}

bool strictly_decreasing_to_zero(const std::vector<int>& counts) {
  if (counts.empty() || counts.back() != 0) return false;
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] >= counts[i - 1]) return false;
  }
  return true;
}

TaskResult prop1_instance(const Multigraph& g) {
  const PipelineTrace trace = run_line_graph_pipeline(g);
  const SearchOutcome direct = find_dominating_cycle(g);
  TaskResult r;
  r.detail["four_valent_counts"] = trace.four_valent_counts;
  r.detail["direct_search_found"] = direct.found;
  if (!trace.ok) return failed(trace.failure, r.detail);
  if (!direct.found) return failed("pipeline found a dominating cycle the direct search missed", r.detail);
  if (!strictly_decreasing_to_zero(trace.four_valent_counts)) return failed("4-valent counts not strictly decreasing", r.detail);
  r.detail["length"] = trace.result->length();

  // Start again from the trail that makes every chord 4-valent, so the
  // reduction step does real work.
  const LineGraphResult lgr = line_graph(g);
  ClosedTrail current = line_t_trail_from_dominating_cycle(g, lgr, *trace.result).trail();
  std::vector<int> chain{static_cast<int>(four_valent_vertices(lgr.lg, current).size())};
  while (chain.back() > 0) {
    current = reduce_t_trail_step(lgr, current).trail();
    chain.push_back(static_cast<int>(four_valent_vertices(lgr.lg, current).size()));
    if (chain.back() >= chain[chain.size() - 2]) break;
  }
  r.detail["chord_chain"] = chain;
  if (!strictly_decreasing_to_zero(chain)) return failed("chord trail reduction not strictly decreasing", r.detail);
  if (!is_dominating_cycle(g, line_ham_to_dominating_cycle(g, lgr, current))) {
    return failed("reduced chord trail did not map to a dominating cycle", r.detail);
  }
  r.result = "dominating_cycle";
  r.witness = trace.result;
  return r;
}

TaskResult conjecture3_instance(const Multigraph& g, const Matching& m) {
  const ContractionMap cm = contract_matching(g, m);
  TaskResult r;
  r.detail["matchings"] = 1;
  const bool four_connected = cm.image_graph.is_simple() && vertex_connectivity(cm.image_graph).value >= 4;
  r.detail["four_connected_quotient"] = four_connected ? 1 : 0;
  if (!four_connected) return r;
  const SearchOutcome dom = find_cycle_dominating_matching(g, m);
  r.detail["dominated"] = dom.found ? 1 : 0;
  const TransitionSystem t = induced_transition_system(g, m, cm);
  const SearchOutcome trail = find_t_trail(cm.image_graph, t);
  r.detail["quotient_t_hamiltonian"] = trail.found ? 1 : 0;
  if (!dom.found) return failed("no cycle dominates the matching", r.detail);
  if (!dominates_edges(g, *dom.witness, m.edges)) return failed("invalid dominating witness", r.detail);
  if (!trail.found) return failed("G/M has no T_M-trail although a cycle dominates M", r.detail);
  return r;
}

TaskResult parity_instance(const Multigraph& g, const std::vector<EdgeId>& cut, const Matching& m) {
  TaskResult r;
  r.detail["trials"] = 1;
  const bool even = check_parity_lemma(g, cut, m);
  r.detail["even"] = even ? 1 : 0;
  if (!even) return failed("|E0 ∩ M| + |E0| is odd", r.detail);
  return r;
}

/// Matchings E0 whose removal leaves exactly two components, with every E0
/// edge joining them.
std::vector<std::vector<EdgeId>> split_matchings(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<EdgeId>> cuts;
  std::vector<int> touched(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(g.edge_count()));
  std::vector<int> label;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<EdgeId> cut;
    std::fill(touched.begin(), touched.end(), 0);
    bool matching = true;
    for (EdgeId e = 0; e < g.edge_count() && matching; ++e) {
      const Edge& ed = g.edge(e);
      if (((mask >> ed.u) & 1U) == ((mask >> ed.v) & 1U)) continue;
      cut.push_back(e);
      matching = ++touched[ed.u] == 1 && ++touched[ed.v] == 1;
    }
    if (!matching || cut.empty()) continue;
    std::fill(removed.begin(), removed.end(), 0);
    for (EdgeId e : cut) removed[e] = 1;
    if (component_labels(g, removed, label) == 2) cuts.push_back(std::move(cut));
  }
  return cuts;
}

// ---- planning ----

bool four_regular_host(const Multigraph& h, std::string& reason) {
  try {
    require_four_regular_four_connected(h);
    return true;
  } catch (const GraphError& e) {
    reason = e.what();
    return false;
  }
}

bool cubic_host(const Multigraph& g, std::string& reason) {
  if (g.vertex_count() == 0 || !is_k_regular(g, 3)) {
    reason = "not cubic";
    return false;
  }
  if (!g.is_simple() || !g.is_connected()) {
    reason = "not simple and connected";
    return false;
  }
  return true;
}

using SystemCheck = TaskResult (*)(const Multigraph&, const std::vector<int>&);

SystemCheck system_check(std::string_view campaign) {
  if (campaign == "nwcstar-check") return nwcstar_instance;
  if (campaign == "lemma-l3-crossoracle") return cross_oracle_instance;
  if (campaign == "lemma-l2") return lemma_l2_instance;
  if (campaign == "lemma-lll") return lemma_lll_instance;
  if (campaign == "prop2-pipeline") return prop2_instance;
  return nullptr;
}

void plan_parity(const CampaignOptions& options, const std::vector<Target>& targets, Plan& plan) {
  struct Pool {
    std::size_t entry;
    std::vector<std::vector<EdgeId>> cuts;
    std::vector<Matching> matchings;
  };
  std::vector<Pool> pools;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Multigraph& g = targets[i].entry->graph;
    EntryPlan& ep = plan.entries[i];
    if (!is_k_regular(g, 3) || g.vertex_count() > kMaxCyclicConnectivityVertices) {
      ep.skip_reason = "needs a cubic graph on at most 24 vertices";
      continue;
    }
    Pool pool{i, split_matchings(g), enumerate_perfect_matchings(g)};
    ep.detail["valid_cuts"] = pool.cuts.size();
    ep.detail["perfect_matchings"] = pool.matchings.size();
    if (pool.cuts.empty() || pool.matchings.empty()) {
      ep.result = "no_valid_input";
      continue;
    }
    pools.push_back(std::move(pool));
  }
  if (pools.empty()) return;
  std::mt19937_64 rng(options.seed);
  for (int trial = 0; trial < options.parity_trials; ++trial) {
    const Pool& pool = pools[rng() % pools.size()];
    const std::vector<EdgeId>& cut = pool.cuts[rng() % pool.cuts.size()];
    const Matching& m = pool.matchings[rng() % pool.matchings.size()];
    const Multigraph* g = &targets[pool.entry].entry->graph;
    plan.tasks.push_back(Task{pool.entry, "trial " + std::to_string(trial), false, [g, cut, m] { return parity_instance(*g, cut, m); }});
  }
}

Plan make_plan(const CampaignOptions& options, const std::vector<Target>& targets) {
  Plan plan;
  for (const Target& t : targets) plan.entries.push_back(EntryPlan{t.id, "pass", "", json::object()});

  // claims first, so a broken corpus shows up even under a tight budget
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const CorpusEntry* entry = targets[i].entry;
    plan.tasks.push_back(Task{i, "claims", true, [entry] {
                                const auto problems = verify_claims(*entry);
                                return problems.empty() ? TaskResult{} : failed("metadata: " + joined(problems));
                              }});
  }

  const std::string& name = options.campaign;
  if (name == "parity") {
    plan_parity(options, targets, plan);
    return plan;
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Multigraph* g = &targets[i].entry->graph;
    EntryPlan& ep = plan.entries[i];
    std::string reason;
    if (SystemCheck check = system_check(name)) {
      if (!four_regular_host(*g, reason)) {
        ep.skip_reason = reason;
        continue;
      }
      for (std::vector<int>& codes : choose_systems(*g, options, ep.id, ep.detail)) {
        std::string label = codes_label(codes);
        plan.tasks.push_back(Task{i, std::move(label), false, [g, check, c = std::move(codes)] { return check(*g, c); }});
      }
    } else if (name == "dcc-check") {
      if (!cubic_host(*g, reason)) {
        ep.skip_reason = reason;
        continue;
      }
      plan.tasks.push_back(Task{i, "dc", false, [g] { return dcc_instance(*g); }});
    } else if (name == "prop1-pipeline") {
      if (!cubic_host(*g, reason)) {
        ep.skip_reason = reason;
        continue;
      }
      plan.tasks.push_back(Task{i, "pipeline", false, [g] { return prop1_instance(*g); }});
    } else if (name == "conjecture3-check") {
      if (!cubic_host(*g, reason)) {
        ep.skip_reason = reason;
        continue;
      }
      for (Matching& m : enumerate_perfect_matchings(*g)) {
        std::string label = "M=";
        for (EdgeId e : m.edges) label += std::to_string(e) + (e == m.edges.back() ? "" : ",");
        plan.tasks.push_back(Task{i, std::move(label), false, [g, mm = std::move(m)] { return conjecture3_instance(*g, mm); }});
      }
    }
  }
  return plan;
}

TaskResult guarded(const Task& task) {
  const auto begin = Clock::now();
  TaskResult r;
  try {
    r = task.run();
  } catch (const std::exception& e) {
    r = failed(std::string("exception: ") + e.what());
  }
  r.ran = true;
  r.seconds = std::chrono::duration<double>(Clock::now() - begin).count();
  return r;
}

void add_counters(json& into, const json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) {
    if (!it.value().is_number_integer()) continue;
    if (!into.contains(it.key())) into[it.key()] = 0;
    into[it.key()] = into[it.key()].get<std::int64_t>() + it.value().get<std::int64_t>();
  }
}

}  // namespace

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names{"dcc-check",  "nwcstar-check",  "lemma-l2",       "lemma-l3-crossoracle", "lemma-lll",
                                              "parity",     "prop1-pipeline", "prop2-pipeline", "conjecture3-check"};
  return names;
}

bool is_campaign(std::string_view name) {
  const auto& names = campaign_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<Corpus> default_corpora(std::string_view campaign) {
  if (campaign == "dcc-check" || campaign == "prop1-pipeline" || campaign == "conjecture3-check") {
    return {*builtin_corpus("CUBIC_C4")};
  }
  if (campaign == "parity") return {*builtin_corpus("NEGATIVES"), *builtin_corpus("CUBIC_C4")};
  return {*builtin_corpus("FOURREG_4C")};
}

CampaignReport run_campaign(const CampaignOptions& options) {
  if (!is_campaign(options.campaign)) {
    throw GraphError(ErrorCode::PreconditionViolated, "unknown campaign " + options.campaign);
  }
  const std::vector<Corpus> corpora = options.corpora.empty() ? default_corpora(options.campaign) : options.corpora;
  std::vector<Target> targets;
  for (const Corpus& c : corpora) {
    for (const CorpusEntry& e : c.entries) targets.push_back(Target{c.name + "/" + e.id, &e});
  }
  const Plan plan = make_plan(options, targets);

  const auto start = Clock::now();
  std::vector<TaskResult> results(plan.tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> over_budget{false};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= plan.tasks.size()) return;
      if (options.budget && Clock::now() - start > *options.budget) {
        over_budget = true;
        continue;
      }
      results[i] = guarded(plan.tasks[i]);
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, plan.tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  CampaignReport report;
  report.campaign = options.campaign;
  report.seed = options.seed;
  report.budget_exceeded = over_budget;
  for (const Corpus& c : corpora) report.corpora.push_back(c.name);

  std::vector<std::vector<std::size_t>> by_entry(plan.entries.size());
  for (std::size_t i = 0; i < plan.tasks.size(); ++i) by_entry[plan.tasks[i].entry].push_back(i);

  for (std::size_t e = 0; e < plan.entries.size(); ++e) {
    const EntryPlan& ep = plan.entries[e];
    EntryReport rep{ep.id, ep.result, ep.detail, std::nullopt, 0};
    std::size_t instances = 0, passed = 0, failures = 0, skipped = 0;
    const TaskResult* only = nullptr;
    for (std::size_t i : by_entry[e]) {
      const Task& task = plan.tasks[i];
      const TaskResult& r = results[i];
      rep.seconds += r.seconds;
      if (task.claims) {
        rep.detail["claims_verified"] = r.ran ? json(r.ok) : json();
        if (r.ran && !r.ok) report.failures.push_back(ep.id + " [claims]: " + r.failure);
        continue;
      }
      ++instances;
      only = &r;
      if (!r.ran) {
        ++skipped;
        continue;
      }
      if (r.ok) {
        ++passed;
      } else {
        ++failures;
        report.failures.push_back(ep.id + " [" + task.label + "]: " + r.failure);
      }
    }
    report.instances += instances;
    report.skipped += skipped;

    if (!ep.skip_reason.empty()) {
      rep.result = "not_applicable";
      rep.detail["reason"] = ep.skip_reason;
    } else if (instances == 1 && only->ran) {
      rep.detail.update(only->detail);
      rep.witness = only->witness;
      rep.result = !only->ok ? "fail" : only->result.empty() ? "pass" : only->result;
    } else if (instances > 0) {
      for (std::size_t i : by_entry[e]) {
        if (!plan.tasks[i].claims && results[i].ran) add_counters(rep.detail, results[i].detail);
      }
      rep.detail["instances"] = instances;
      rep.detail["passed"] = passed;
      rep.result = failures > 0 ? "fail" : skipped > 0 ? "incomplete" : "pass";
    }
    report.entries.push_back(std::move(rep));
  }
  std::sort(report.entries.begin(), report.entries.end(), [](const EntryReport& a, const EntryReport& b) { return a.id < b.id; });
  std::sort(report.failures.begin(), report.failures.end());
  return report;
}

json trail_json(const ClosedTrail& trail) {
  json darts = json::array();
  for (Dart d : trail.darts) darts.push_back({d.edge, d.end});
  return darts;
}

json report_json(const CampaignReport& report, bool include_timings) {
  json entries = json::array();
  double total = 0;
  for (const EntryReport& e : report.entries) {
    json item{{"id", e.id}, {"result", e.result}, {"detail", e.detail}};
    if (e.witness) item["witness"] = trail_json(*e.witness);
    if (include_timings) item["timings"] = {{"seconds", e.seconds}};
    total += e.seconds;
    entries.push_back(std::move(item));
  }
  json out{{"campaign", report.campaign},
           {"seed", report.seed},
           {"corpora", report.corpora},
           {"budget_exceeded", report.budget_exceeded},
           {"summary",
            {{"entries", report.entries.size()},
             {"instances", report.instances},
             {"skipped", report.skipped},
             {"failures", report.failures.size()}}},
           {"entries", std::move(entries)},
           {"failures", report.failures}};
  if (include_timings) out["timings"] = {{"seconds", total}};
  return out;
}

int exit_code(const CampaignReport& report) {
  if (!report.failures.empty()) return 2;
  if (report.budget_exceeded) return 3;
  return 0;
}

}  // namespace domcycle
