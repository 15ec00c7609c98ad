#include "domcycle/reductions.hpp"

#include <algorithm>
#include <set>

#include "domcycle/connectivity.hpp"
#include "domcycle/errors.hpp"
#include "domcycle/isomorphism.hpp"
#include "domcycle/named_graphs.hpp"
#include "domcycle/search.hpp"

namespace domcycle {

TTrail trail_from_split_cycle(const Multigraph& h, const TransitionSystem& t, const SplitResult& sr, const ClosedTrail& c) {
  if (!is_cycle(sr.g, c)) throw GraphError(ErrorCode::NotACycle, "input is not a cycle of the split graph");
  if (!dominates_edges(sr.g, c, sr.matching.edges)) {
    throw GraphError(ErrorCode::NotDominating, "cycle misses both ends of some e(v)");
  }
  std::vector<int> host_dart(static_cast<std::size_t>(2 * sr.g.edge_count()), -1);
  for (std::size_t i = 0; i < sr.dart_image.size(); ++i) {
    host_dart[static_cast<std::size_t>(sr.dart_image[i].index())] = static_cast<int>(i);
  }
  ClosedTrail trail;
  for (Dart d : c.darts) {
    const int hd = host_dart[static_cast<std::size_t>(d.index())];
    if (hd >= 0) trail.darts.push_back(Dart::from_index(hd));
  }
  return TTrail::validated(h, t, std::move(trail));
}

ClosedTrail split_cycle_from_trail(const Multigraph& h, const TransitionSystem& t, const SplitResult& sr, const ClosedTrail& tt) {
  TTrail checked = TTrail::validated(h, t, tt);
  const TransitionLookup lookup(h, t);
  const auto& darts = checked.trail().darts;
  const std::size_t len = darts.size();
  ClosedTrail cycle;
  for (std::size_t i = 0; i < len; ++i) {
    const Dart out = darts[i];
    const Dart in = darts[(i + len - 1) % len].opposite();
    const VertexId v = h.anchor(out);
    const int from = lookup.side(in);
    const int to = lookup.side(out);
    if (from != to) {
      // e(v) runs from v' (end 0) to v'' (end 1)
      cycle.darts.push_back(Dart{sr.matching_edge[static_cast<std::size_t>(v)], static_cast<std::uint8_t>(from)});
    }
    cycle.darts.push_back(sr.dart_image[static_cast<std::size_t>(out.index())]);
  }
  return cycle;
}

TTrail reduce_t_trail_step(const LineGraphResult& lgr, const ClosedTrail& c) {
  if (!lgr.canonical_t) throw GraphError(ErrorCode::PreconditionViolated, "line graph of a non-cubic graph has no canonical system");
  const Multigraph& lg = lgr.lg;
  TTrail checked = TTrail::validated(lg, *lgr.canonical_t, c);
  const auto four = four_valent_vertices(lg, checked.trail());
  if (four.empty()) throw GraphError(ErrorCode::NoFourValentVertex, "trail is already a Hamiltonian cycle");

  const VertexId w = four.front();
  // the two families at w are the endpoints of the G-edge w
  VertexId x = -1;
  for (Dart d : lg.darts_at(w)) {
    const VertexId family = lgr.family_of_edge[static_cast<std::size_t>(d.edge)];
    if (x < 0 || family < x) x = family;
  }

  const auto& darts = checked.trail().darts;
  const std::size_t len = darts.size();
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t prev = (i + len - 1) % len;
    const Dart out = darts[i];
    const Dart in = darts[prev].opposite();
    if (lg.anchor(out) != w) continue;
    if (lgr.family_of_edge[static_cast<std::size_t>(out.edge)] != x ||
        lgr.family_of_edge[static_cast<std::size_t>(in.edge)] != x) {
      continue;
    }
    const VertexId a = lg.head(in);
    const VertexId b = lg.head(out);
    EdgeId third = -1;
    for (EdgeId e : lgr.triangle_family[static_cast<std::size_t>(x)]) {
      const Edge& ed = lg.edge(e);
      if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) third = e;
    }
    if (third < 0) throw GraphError(ErrorCode::PreconditionViolated, "triangle family is not a triangle");
    ClosedTrail reduced;
    for (std::size_t j = 0; j < len; ++j) {
      if (j == i) continue;
      reduced.darts.push_back(j == prev ? lg.dart_at(third, a) : darts[j]);
    }
    return TTrail::validated(lg, *lgr.canonical_t, std::move(reduced));
  }
  throw GraphError(ErrorCode::InvalidTTrail, "4-valent vertex without a visit inside its triangle");
}

ClosedTrail line_ham_to_dominating_cycle(const Multigraph& g, const LineGraphResult& lgr, const ClosedTrail& hc) {
  if (g.vertex_count() == 0 || !is_k_regular(g, 3)) throw GraphError(ErrorCode::PreconditionViolated, "host graph is not cubic");
  if (!is_hamiltonian_cycle(lgr.lg, hc)) throw GraphError(ErrorCode::NotHamiltonian, "input is not a Hamiltonian cycle of L(G)");

  const std::size_t len = hc.darts.size();
  std::vector<VertexId> family(len);
  for (std::size_t i = 0; i < len; ++i) family[i] = lgr.family_of_edge[static_cast<std::size_t>(hc.darts[i].edge)];
  std::size_t start = 0;
  while (start < len && family[start] == family[(start + len - 1) % len]) ++start;
  if (start == len) throw GraphError(ErrorCode::PreconditionViolated, "cycle never leaves one triangle");

  // Between runs of equal family, the line-graph vertex where the run
  // changes is the G-edge joining the two family vertices.
  ClosedTrail cycle;
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t i = (start + k) % len;
    const std::size_t next = (i + 1) % len;
    if (family[next] == family[i]) continue;
    const EdgeId g_edge = lgr.lg.anchor(hc.darts[next]);
    cycle.darts.push_back(g.dart_at(g_edge, family[i]));
  }
  return cycle;
}

TTrail line_t_trail_from_dominating_cycle(const Multigraph& g, const LineGraphResult& lgr, const ClosedTrail& dc) {
  if (!lgr.canonical_t || !is_k_regular(g, 3)) throw GraphError(ErrorCode::PreconditionViolated, "host graph is not cubic");
  if (!is_cycle(g, dc)) throw GraphError(ErrorCode::NotACycle, "input is not a cycle of G");
  if (!is_dominating_cycle(g, dc)) throw GraphError(ErrorCode::NotDominating, "cycle does not dominate G");
  const Multigraph& lg = lgr.lg;
  // L-edge of t_x joining the G-edges p and q
  auto link = [&](VertexId x, EdgeId p, EdgeId q) {
    for (EdgeId e : lgr.triangle_family[static_cast<std::size_t>(x)]) {
      const Edge& ed = lg.edge(e);
      if ((ed.u == p && ed.v == q) || (ed.u == q && ed.v == p)) return lg.dart_at(e, p);
    }
    throw GraphError(ErrorCode::PreconditionViolated, "line graph triangle is incomplete");
  };

  ClosedTrail trail;
  const std::size_t len = dc.darts.size();
  for (std::size_t i = 0; i < len; ++i) {
    const EdgeId in = dc.darts[(i + len - 1) % len].edge;
    const EdgeId out = dc.darts[i].edge;
    const VertexId x = g.anchor(dc.darts[i]);
    EdgeId third = -1;
    for (Dart d : g.darts_at(x)) {
      if (d.edge != in && d.edge != out) third = d.edge;
    }
    trail.darts.push_back(link(x, in, third));
    trail.darts.push_back(link(x, third, out));
  }
  return TTrail::validated(lg, *lgr.canonical_t, std::move(trail));
}

ClosedTrail lift_dominating_cycle(const SplitResult& sr, const ContractionMap& cm, const ClosedTrail& c_prime) {
  const Multigraph& image = cm.image_graph;
  if (!is_dominating_cycle(image, c_prime)) {
    throw GraphError(ErrorCode::NotDominatingInImage, "input is not a dominating cycle of the contracted graph");
  }
  const Multigraph& g = sr.g;
  std::vector<char> contracted(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : cm.contracted_edges) contracted[e] = 1;

  std::vector<Dart> source;
  for (Dart d : c_prime.darts) source.push_back(Dart{cm.edge_provenance[static_cast<std::size_t>(d.edge)], d.end});

  ClosedTrail lifted;
  const std::size_t len = source.size();
  for (std::size_t i = 0; i < len; ++i) {
    const VertexId arrive = g.head(source[(i + len - 1) % len]);
    const VertexId leave = g.anchor(source[i]);
    if (arrive != leave) {
      // bad vertex: walk arrive -> third corner -> leave inside the triangle
      const auto& fiber = cm.fibers[static_cast<std::size_t>(cm.vertex_map[arrive])];
      VertexId third = -1;
      for (VertexId v : fiber) {
        if (v != arrive && v != leave) third = v;
      }
      auto triangle_dart = [&](VertexId from, VertexId to) {
        for (Dart d : g.darts_at(from)) {
          if (contracted[d.edge] && g.head(d) == to) return d;
        }
        throw GraphError(ErrorCode::PreconditionViolated, "contracted fiber is not a triangle");
      };
      lifted.darts.push_back(triangle_dart(arrive, third));
      lifted.darts.push_back(triangle_dart(third, leave));
    }
    lifted.darts.push_back(source[i]);
  }
  return lifted;
}

bool check_parity_lemma(const Multigraph& g, std::span<const EdgeId> e0, const Matching& m) {
  if (!is_k_regular(g, 3)) throw GraphError(ErrorCode::PreconditionViolated, "graph is not cubic");
  if (!is_perfect_matching(g, m)) throw GraphError(ErrorCode::PreconditionViolated, "M is not a perfect matching");
  std::vector<EdgeId> cut(e0.begin(), e0.end());
  std::sort(cut.begin(), cut.end());
  if (!is_matching(g, Matching{cut})) throw GraphError(ErrorCode::PreconditionViolated, "E0 is not a matching");
  std::vector<char> removed(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : cut) removed[e] = 1;
  std::vector<int> label;
  if (component_labels(g, removed, label) != 2) {
    throw GraphError(ErrorCode::PreconditionViolated, "G - E0 does not have exactly two components");
  }
  for (EdgeId e : cut) {
    if (label[g.edge(e).u] == label[g.edge(e).v]) {
      throw GraphError(ErrorCode::PreconditionViolated, "an E0 edge does not cross between the components");
    }
  }
  std::size_t shared = 0;
  for (EdgeId e : cut) shared += m.contains(e) ? 1 : 0;
  return (shared + cut.size()) % 2 == 0;
}

void require_four_regular_four_connected(const Multigraph& h) {
  if (!is_k_regular(h, 4)) throw GraphError(ErrorCode::PreconditionViolated, "host is not 4-regular");
  if (!h.is_connected() || vertex_connectivity(h).value < 4) {
    throw GraphError(ErrorCode::PreconditionViolated, "host is not 4-connected");
  }
}

LemmaReport verify_lemma_l2(const Multigraph& h, const TransitionSystem& t, bool host_checked) {
  if (!host_checked) require_four_regular_four_connected(h);
  const SplitResult sr = split(h, t);
  const Multigraph& g = sr.g;
  LemmaReport report;
  report.split_vertices = g.vertex_count();
  report.split_edge_connectivity = edge_connectivity(g).value;
  report.triangles = static_cast<int>(list_triangles(g).size());
  if (report.split_edge_connectivity < 3) {
    report.violations.push_back("split graph has an edge cut of size " + std::to_string(report.split_edge_connectivity));
  }

  const int m = g.edge_count();
  const int n = g.vertex_count();
  std::vector<char> removed(static_cast<std::size_t>(m), 0);
  std::vector<int> label;
  std::vector<int> comp_vertices, comp_edges;
  for (EdgeId a = 0; a < m; ++a) {
    for (EdgeId b = a + 1; b < m; ++b) {
      for (EdgeId c = b + 1; c < m; ++c) {
        removed[a] = removed[b] = removed[c] = 1;
        const int comps = component_labels(g, removed, label);
        if (comps >= 2) {
          comp_vertices.assign(static_cast<std::size_t>(comps), 0);
          comp_edges.assign(static_cast<std::size_t>(comps), 0);
          for (VertexId v = 0; v < n; ++v) ++comp_vertices[static_cast<std::size_t>(label[v])];
          for (EdgeId e = 0; e < m; ++e) {
            if (!removed[e]) ++comp_edges[static_cast<std::size_t>(label[g.edge(e).u])];
          }
          int cyclic_parts = 0;
          bool triangle_side = false;
          for (int k = 0; k < comps; ++k) {
            if (comp_edges[k] >= comp_vertices[k]) ++cyclic_parts;
            if (comp_vertices[k] == 3 && comp_edges[k] == 3) triangle_side = true;
          }
          if (cyclic_parts >= 2) {
            ++report.cyclic_three_cuts;
            if (comps != 2 || !triangle_side) {
              report.violations.push_back("cyclic 3-cut {" + std::to_string(a) + "," + std::to_string(b) + "," +
                                          std::to_string(c) + "} does not isolate a triangle");
            }
          }
        }
        removed[a] = removed[b] = removed[c] = 0;
      }
    }
  }
  report.holds = report.violations.empty();
  return report;
}

LemmaReport verify_lemma_lll(const Multigraph& h, const TransitionSystem& t, bool host_checked) {
  if (!host_checked) require_four_regular_four_connected(h);
  const SplitResult sr = split(h, t);
  LemmaReport report;
  report.split_vertices = sr.g.vertex_count();
  report.triangles = static_cast<int>(list_triangles(sr.g).size());
  ContractionMap cm;
  try {
    cm = contract_triangles(sr.g);
  } catch (const GraphError& e) {
    report.holds = false;
    report.violations.emplace_back(e.what());
    return report;
  }
  const Multigraph& hp = cm.image_graph;
  report.h_prime_vertices = hp.vertex_count();
  if (!has_two_disjoint_cycles(hp)) {
    if (hp.vertex_count() == 4 && are_isomorphic(hp, named::complete(4)).isomorphic) {
      report.h_prime_exception = "K4";
    } else if (hp.vertex_count() == 6 && are_isomorphic(hp, named::complete_bipartite(3, 3)).isomorphic) {
      report.h_prime_exception = "K3,3";
    } else {
      report.violations.push_back("H' lacks two disjoint cycles but is neither K4 nor K3,3");
    }
  } else {
    report.h_prime_lambda_c = cyclic_edge_connectivity(hp).value;
    if (*report.h_prime_lambda_c < 4) {
      report.violations.push_back("H' has a cyclic edge cut of size " + std::to_string(*report.h_prime_lambda_c));
    }
  }
  report.holds = report.violations.empty();
  return report;
}

PipelineTrace run_line_graph_pipeline(const Multigraph& g) {
  PipelineTrace trace;
  if (g.vertex_count() == 0 || !is_k_regular(g, 3) || !g.is_simple() || !g.is_connected()) {
    throw GraphError(ErrorCode::PreconditionViolated, "line graph pipeline needs a simple connected cubic graph");
  }
  const LineGraphResult lgr = line_graph(g);
  trace.stages.push_back(PipelineStage{"line_graph", lgr.lg.vertex_count(), lgr.lg.edge_count(), std::nullopt, "canonical transition system from triangles t_v"});

  const SearchOutcome found = find_t_trail(lgr.lg, *lgr.canonical_t);
  if (!found.found) {
    trace.failure = "L(G) has no T-trail for the canonical system";
    return trace;
  }
  ClosedTrail current = *found.witness;
  trace.stages.push_back(PipelineStage{"t_trail", lgr.lg.vertex_count(), lgr.lg.edge_count(), current,
                                       std::to_string(found.nodes_expanded) + " nodes"});
  trace.four_valent_counts.push_back(static_cast<int>(four_valent_vertices(lgr.lg, current).size()));
  while (trace.four_valent_counts.back() > 0) {
    current = reduce_t_trail_step(lgr, current).trail();
    const int count = static_cast<int>(four_valent_vertices(lgr.lg, current).size());
    if (count >= trace.four_valent_counts.back()) {
      trace.failure = "reduction step did not decrease the 4-valent count";
      return trace;
    }
    trace.four_valent_counts.push_back(count);
  }
  trace.stages.push_back(PipelineStage{"hamiltonian_cycle", lgr.lg.vertex_count(), lgr.lg.edge_count(), current,
                                       std::to_string(trace.four_valent_counts.size() - 1) + " reduction steps"});

  ClosedTrail dc = line_ham_to_dominating_cycle(g, lgr, current);
  if (!is_dominating_cycle(g, dc)) {
    trace.failure = "mapped cycle does not dominate G";
    return trace;
  }
  trace.stages.push_back(PipelineStage{"dominating_cycle", g.vertex_count(), g.edge_count(), dc, "length " + std::to_string(dc.length())});
  trace.result = std::move(dc);
  trace.ok = true;
  return trace;
}

PipelineTrace run_triangle_contraction_pipeline(const Multigraph& h, const TransitionSystem& t, bool host_checked) {
  if (!host_checked) require_four_regular_four_connected(h);
  PipelineTrace trace;
  const SplitResult sr = split(h, t);
  trace.stages.push_back(PipelineStage{"split", sr.g.vertex_count(), sr.g.edge_count(), std::nullopt, "cubic graph with perfect matching M_T"});

  const LemmaReport l2 = verify_lemma_l2(h, t, true);
  if (!l2.holds) {
    trace.failure = "3-edge-connectivity lemma violated: " + l2.violations.front();
    return trace;
  }
  const LemmaReport lll = verify_lemma_lll(h, t, true);
  if (!lll.holds) {
    trace.failure = "contracted-graph connectivity lemma violated: " + lll.violations.front();
    return trace;
  }
  const ContractionMap cm = contract_triangles(sr.g);
  trace.stages.push_back(PipelineStage{"contract_triangles", cm.image_graph.vertex_count(), cm.image_graph.edge_count(), std::nullopt,
                                       std::to_string(l2.triangles) + " triangles"});

  const SearchOutcome dc = find_dominating_cycle(cm.image_graph);
  if (!dc.found) {
    trace.failure = "H' has no dominating cycle";
    return trace;
  }
  trace.stages.push_back(PipelineStage{"dominating_cycle", cm.image_graph.vertex_count(), cm.image_graph.edge_count(), dc.witness, ""});

  ClosedTrail lifted = lift_dominating_cycle(sr, cm, *dc.witness);
  if (!is_cycle(sr.g, lifted) || !dominates_edges(sr.g, lifted, sr.matching.edges)) {
    trace.failure = "lifted cycle does not dominate M_T";
    return trace;
  }
  trace.stages.push_back(PipelineStage{"lift", sr.g.vertex_count(), sr.g.edge_count(), lifted, ""});

  TTrail tt = trail_from_split_cycle(h, t, sr, lifted);
  trace.stages.push_back(PipelineStage{"t_trail", h.vertex_count(), h.edge_count(), tt.trail(), ""});
  trace.result = tt.trail();
  trace.ok = true;
  return trace;
}

}  // namespace domcycle
