#include "domcycle/constructions.hpp"

#include <algorithm>
#include <string>

#include "domcycle/errors.hpp"

namespace domcycle {
namespace {

/// Contracts every group of vertices sharing a label in `group` (labels are
/// arbitrary ints) and drops edges inside a group.
ContractionMap contract_groups(const Multigraph& g, const std::vector<int>& group) {
  const int n = g.vertex_count();
  ContractionMap cm;
  cm.vertex_map.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> image_of_group(static_cast<std::size_t>(n), -1);
  for (VertexId v = 0; v < n; ++v) {
    int& image = image_of_group[static_cast<std::size_t>(group[v])];
    if (image < 0) {
      image = static_cast<int>(cm.fibers.size());
      cm.fibers.emplace_back();
    }
    cm.vertex_map[v] = image;
    cm.fibers[static_cast<std::size_t>(image)].push_back(v);
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    VertexId a = cm.vertex_map[g.edge(e).u];
    VertexId b = cm.vertex_map[g.edge(e).v];
    if (a == b) {
      cm.contracted_edges.push_back(e);
      continue;
    }
    edges.push_back(Edge{a, b});
    cm.edge_provenance.push_back(e);
  }
  cm.image_graph = Multigraph(static_cast<int>(cm.fibers.size()), std::move(edges));
  return cm;
}

TransitionSystem normalized(const Multigraph& h, const TransitionSystem& t) {
  return transition_system_from_codes(h, pairing_codes(h, t));
}

}  // namespace

LineGraphResult line_graph(const Multigraph& g) {
  if (!g.is_simple()) throw GraphError(ErrorCode::NotSimple, "line graph construction needs a simple graph");
  LineGraphResult r;
  r.vertex_of_edge.resize(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) r.vertex_of_edge[e] = e;

  std::vector<Edge> edges;
  r.triangle_family.resize(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto darts = g.darts_at(v);
    for (std::size_t i = 0; i < darts.size(); ++i) {
      for (std::size_t j = i + 1; j < darts.size(); ++j) {
        r.triangle_family[v].push_back(static_cast<EdgeId>(edges.size()));
        r.family_of_edge.push_back(v);
        edges.push_back(Edge{darts[i].edge, darts[j].edge});
      }
    }
  }
  r.lg = Multigraph(g.edge_count(), std::move(edges));

  if (g.vertex_count() > 0 && is_k_regular(g, 3)) {
    TransitionSystem t;
    for (VertexId x = 0; x < r.lg.vertex_count(); ++x) {
      const VertexId u = g.edge(x).u;
      std::array<DartPair, 2> at_x{};
      int filled[2] = {0, 0};
      for (Dart d : r.lg.darts_at(x)) {
        const int which = r.family_of_edge[d.edge] == u ? 0 : 1;
        at_x[static_cast<std::size_t>(which)][static_cast<std::size_t>(filled[which]++)] = d;
      }
      t.per_vertex.push_back(at_x);
    }
    r.canonical_t = normalized(r.lg, t);
  }
  return r;
}

SplitResult split(const Multigraph& h, const TransitionSystem& t) {
  require_valid_transition_system(h, t);
  const TransitionLookup lookup(h, t);
  const int n = h.vertex_count();
  const int m = h.edge_count();

  SplitResult r;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m + n));
  for (EdgeId e = 0; e < m; ++e) {
    const Dart d0{e, 0};
    const Dart d1{e, 1};
    edges.push_back(Edge{2 * h.anchor(d0) + lookup.side(d0), 2 * h.anchor(d1) + lookup.side(d1)});
  }
  for (VertexId v = 0; v < n; ++v) {
    r.matching_edge.push_back(static_cast<EdgeId>(edges.size()));
    r.split_pair.emplace_back(2 * v, 2 * v + 1);
    edges.push_back(Edge{2 * v, 2 * v + 1});
  }
  r.g = Multigraph(2 * n, std::move(edges));
  r.matching = Matching{r.matching_edge};
  r.dart_image.resize(static_cast<std::size_t>(2 * m));
  for (int i = 0; i < 2 * m; ++i) r.dart_image[static_cast<std::size_t>(i)] = Dart::from_index(i);
  return r;
}

ContractionMap contract_matching(const Multigraph& g, const Matching& m) {
  if (!is_matching(g, m)) throw GraphError(ErrorCode::NotAMatching, "edge set is not a matching");
  std::vector<int> group(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) group[v] = v;
  for (EdgeId e : m.edges) {
    const Edge& ed = g.edge(e);
    group[std::max(ed.u, ed.v)] = std::min(ed.u, ed.v);
  }
  return contract_groups(g, group);
}

ContractionMap contract_triangles(const Multigraph& g) {
  std::vector<int> group(static_cast<std::size_t>(g.vertex_count()));
  std::vector<char> in_triangle(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) group[v] = v;
  for (const Triangle& tri : list_triangles(g)) {
    for (VertexId v : tri.vertices) {
      if (in_triangle[v]) {
        throw GraphError(ErrorCode::OverlappingTriangles, "vertex " + std::to_string(v) + " lies on two triangles");
      }
      in_triangle[v] = 1;
      group[v] = tri.vertices[0];
    }
  }
  return contract_groups(g, group);
}

TransitionSystem induced_transition_system(const Multigraph& g, const Matching& m, const ContractionMap& cm) {
  if (!is_k_regular(g, 3)) throw GraphError(ErrorCode::PreconditionViolated, "source graph is not cubic");
  if (!is_perfect_matching(g, m)) throw GraphError(ErrorCode::PreconditionViolated, "matching is not perfect");
  const Multigraph& h = cm.image_graph;
  if (!is_k_regular(h, 4)) throw GraphError(ErrorCode::PreconditionViolated, "contracted graph is not 4-regular");

  TransitionSystem t;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    const VertexId low = cm.fibers[static_cast<std::size_t>(v)].front();
    std::array<DartPair, 2> at_v{};
    int filled[2] = {0, 0};
    for (Dart d : h.darts_at(v)) {
      const Dart source{cm.edge_provenance[static_cast<std::size_t>(d.edge)], d.end};
      const int which = g.anchor(source) == low ? 0 : 1;
      if (filled[which] == 2) throw GraphError(ErrorCode::PreconditionViolated, "fiber end does not carry two darts");
      at_v[static_cast<std::size_t>(which)][static_cast<std::size_t>(filled[which]++)] = d;
    }
    t.per_vertex.push_back(at_v);
  }
  return normalized(h, t);
}

std::vector<VertexId> split_vertex_origin(const Multigraph& g, const ContractionMap& cm, const TransitionSystem& t) {
  const Multigraph& h = cm.image_graph;
  std::vector<VertexId> origin(static_cast<std::size_t>(2 * h.vertex_count()), -1);
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    const Dart d = t.per_vertex[static_cast<std::size_t>(v)][0][0];
    const VertexId first = g.anchor(Dart{cm.edge_provenance[static_cast<std::size_t>(d.edge)], d.end});
    const auto& fiber = cm.fibers[static_cast<std::size_t>(v)];
    origin[static_cast<std::size_t>(2 * v)] = first;
    origin[static_cast<std::size_t>(2 * v + 1)] = fiber[0] == first ? fiber[1] : fiber[0];
  }
  return origin;
}

}  // namespace domcycle
