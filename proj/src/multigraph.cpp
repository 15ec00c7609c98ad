#include "domcycle/multigraph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "domcycle/errors.hpp"

namespace domcycle {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges) : edges_(std::move(edges)) {
  if (vertex_count < 0) {
    throw GraphError(ErrorCode::VertexOutOfRange, "negative vertex count");
  }
  incidence_.resize(static_cast<std::size_t>(vertex_count));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw GraphError(ErrorCode::VertexOutOfRange,
                       "edge " + std::to_string(i) + " = (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    if (e.u == e.v) {
      throw GraphError(ErrorCode::LoopEdge, "edge " + std::to_string(i) + " at vertex " + std::to_string(e.u));
    }
    const auto id = static_cast<EdgeId>(i);
    incidence_[static_cast<std::size_t>(e.u)].push_back(Dart{id, 0});
    incidence_[static_cast<std::size_t>(e.v)].push_back(Dart{id, 1});
  }
  // edge ids were pushed in ascending order, so incidence lists are already sorted
}

int Multigraph::min_degree() const {
  int best = vertex_count() == 0 ? 0 : degree(0);
  for (VertexId v = 1; v < vertex_count(); ++v) best = std::min(best, degree(v));
  return best;
}

int Multigraph::max_degree() const {
  int best = 0;
  for (VertexId v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Multigraph::is_simple() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : edges_) {
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) return false;
  }
  return true;
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
  int count = 0;
  for (Dart d : darts_at(u)) {
    if (head(d) == v) ++count;
  }
  return count;
}

bool Multigraph::is_connected() const {
  if (vertex_count() == 0) return true;
  std::vector<int> label;
  return component_labels(*this, {}, label) == 1;
}

Multigraph build_multigraph(int vertex_count, std::span<const std::pair<VertexId, VertexId>> endpoint_pairs) {
  std::vector<Edge> edges;
  edges.reserve(endpoint_pairs.size());
  for (const auto& [u, v] : endpoint_pairs) edges.push_back(Edge{u, v});
  return Multigraph(vertex_count, std::move(edges));
}

Multigraph build_multigraph(int vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> endpoint_pairs) {
  return build_multigraph(vertex_count, std::span<const std::pair<VertexId, VertexId>>(endpoint_pairs.begin(), endpoint_pairs.size()));
}

bool is_k_regular(const Multigraph& g, int k) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != k) return false;
  }
  return true;
}

bool Matching::contains(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }

bool is_matching(const Multigraph& g, const Matching& m) {
  std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
  EdgeId previous = -1;
  for (EdgeId e : m.edges) {
    if (e < 0 || e >= g.edge_count() || e <= previous) return false;
    previous = e;
    const Edge& ed = g.edge(e);
    if (covered[ed.u] || covered[ed.v]) return false;
    covered[ed.u] = covered[ed.v] = 1;
  }
  return true;
}

bool is_perfect_matching(const Multigraph& g, const Matching& m) {
  return is_matching(g, m) && 2 * static_cast<int>(m.size()) == g.vertex_count();
}

Matching make_matching(const Multigraph& g, std::vector<EdgeId> edge_ids) {
  std::sort(edge_ids.begin(), edge_ids.end());
  Matching m{std::move(edge_ids)};
  if (!is_matching(g, m)) throw GraphError(ErrorCode::NotAMatching, "edge set shares an endpoint or is out of range");
  return m;
}

std::vector<Matching> enumerate_perfect_matchings(const Multigraph& g) {
  std::vector<Matching> result;
  const int n = g.vertex_count();
  if (n % 2 != 0) return result;
  std::vector<char> matched(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> chosen;

  auto recurse = [&](auto&& self, VertexId from) -> void {
    while (from < n && matched[from]) ++from;
    if (from == n) {
      Matching m{chosen};
      std::sort(m.edges.begin(), m.edges.end());
      result.push_back(std::move(m));
      return;
    }
    matched[from] = 1;
    for (Dart d : g.darts_at(from)) {
      const VertexId w = g.head(d);
      if (matched[w]) continue;
      matched[w] = 1;
      chosen.push_back(d.edge);
      self(self, from + 1);
      chosen.pop_back();
      matched[w] = 0;
    }
    matched[from] = 0;
  };
  recurse(recurse, 0);
  std::sort(result.begin(), result.end(), [](const Matching& a, const Matching& b) { return a.edges < b.edges; });
  return result;
}

void validate_closed_trail(const Multigraph& g, const ClosedTrail& trail) {
  if (trail.darts.empty()) throw GraphError(ErrorCode::TrailNotInGraph, "empty trail");
  std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
  for (Dart d : trail.darts) {
    if (d.edge < 0 || d.edge >= g.edge_count() || d.end > 1) {
      throw GraphError(ErrorCode::TrailNotInGraph, "unknown dart on edge " + std::to_string(d.edge));
    }
    if (used[d.edge]) throw GraphError(ErrorCode::TrailNotInGraph, "edge " + std::to_string(d.edge) + " repeated");
    used[d.edge] = 1;
  }
  const std::size_t len = trail.darts.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (g.head(trail.darts[i]) != g.anchor(trail.darts[(i + 1) % len])) {
      throw GraphError(ErrorCode::TrailNotInGraph, "step " + std::to_string(i) + " does not connect");
    }
  }
}

bool is_closed_trail(const Multigraph& g, const ClosedTrail& trail) {
  try {
    validate_closed_trail(g, trail);
  } catch (const GraphError&) {
    return false;
  }
  return true;
}

bool is_cycle(const Multigraph& g, const ClosedTrail& trail) {
  if (!is_closed_trail(g, trail)) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Dart d : trail.darts) {
    VertexId v = g.anchor(d);
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_hamiltonian_cycle(const Multigraph& g, const ClosedTrail& trail) {
  return is_cycle(g, trail) && static_cast<int>(trail.length()) == g.vertex_count();
}

std::vector<VertexId> trail_vertices(const Multigraph& g, const ClosedTrail& trail) {
  std::vector<VertexId> out;
  out.reserve(trail.darts.size());
  for (Dart d : trail.darts) out.push_back(g.anchor(d));
  return out;
}

std::vector<EdgeId> trail_edges(const ClosedTrail& trail) {
  std::vector<EdgeId> out;
  out.reserve(trail.darts.size());
  for (Dart d : trail.darts) out.push_back(d.edge);
  return out;
}

std::vector<char> vertex_flags(const Multigraph& g, const ClosedTrail& trail) {
  std::vector<char> on(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Dart d : trail.darts) on[g.anchor(d)] = 1;
  return on;
}

bool dominates_edges(const Multigraph& g, const ClosedTrail& trail, std::span<const EdgeId> edge_ids) {
  const auto on = vertex_flags(g, trail);
  return std::all_of(edge_ids.begin(), edge_ids.end(), [&](EdgeId e) {
    const Edge& ed = g.edge(e);
    return on[ed.u] || on[ed.v];
  });
}

bool is_dominating_cycle(const Multigraph& g, const ClosedTrail& trail) {
  if (!is_cycle(g, trail)) return false;
  const auto on = vertex_flags(g, trail);
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return on[e.u] || on[e.v]; });
}

ClosedTrail trail_from_vertex_cycle(const Multigraph& g, std::span<const VertexId> vertices) {
  ClosedTrail trail;
  std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    VertexId from = vertices[i];
    VertexId to = vertices[(i + 1) % vertices.size()];
    bool placed = false;
    for (Dart d : g.darts_at(from)) {
      if (!used[d.edge] && g.head(d) == to) {
        used[d.edge] = 1;
        trail.darts.push_back(d);
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw GraphError(ErrorCode::TrailNotInGraph, "no free edge " + std::to_string(from) + "-" + std::to_string(to));
    }
  }
  return trail;
}

std::vector<Triangle> list_triangles(const Multigraph& g) {
  std::vector<Triangle> out;
  // a < b < c, every choice of one edge per side
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    for (Dart dab : g.darts_at(a)) {
      VertexId b = g.head(dab);
      if (b <= a) continue;
      for (Dart dbc : g.darts_at(b)) {
        VertexId c = g.head(dbc);
        if (c <= b) continue;
        for (Dart dac : g.darts_at(a)) {
          if (g.head(dac) != c) continue;
          Triangle t;
          t.vertices = {a, b, c};
          t.edges = {dab.edge, dbc.edge, dac.edge};
          out.push_back(t);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int component_labels(const Multigraph& g, std::span<const char> removed_edges, std::vector<int>& label) {
  const int n = g.vertex_count();
  label.assign(static_cast<std::size_t>(n), -1);
  std::vector<VertexId> stack;
  int count = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (Dart d : g.darts_at(v)) {
        if (!removed_edges.empty() && removed_edges[d.edge]) continue;
        VertexId w = g.head(d);
        if (label[w] < 0) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

Multigraph underlying_simple_graph(const Multigraph& g) {
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
    if (seen.insert(key).second) edges.push_back(Edge{key.first, key.second});
  }
  return Multigraph(g.vertex_count(), std::move(edges));
}

}  // namespace domcycle
