#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace domcycle {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// One end of an edge. Dart (e,0) is anchored at the edge's first endpoint,
/// (e,1) at its second. Transitions pair darts rather than edges so that
/// parallel edges stay unambiguous.
struct Dart {
  EdgeId edge = -1;
  std::uint8_t end = 0;

  constexpr Dart opposite() const { return Dart{edge, static_cast<std::uint8_t>(end ^ 1U)}; }
  constexpr int index() const { return 2 * edge + end; }
  static constexpr Dart from_index(int i) { return Dart{i / 2, static_cast<std::uint8_t>(i % 2)}; }

  friend constexpr auto operator<=>(const Dart&, const Dart&) = default;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

/// Loopless finite multigraph with dense ids. Immutable once built; every
/// transformation in the library returns a fresh graph.
class Multigraph {
 public:
  Multigraph() = default;

  /// Throws GraphError(LoopEdge | VertexOutOfRange).
  Multigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(incidence_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }

  VertexId anchor(Dart d) const {
    const Edge& e = edge(d.edge);
    return d.end == 0 ? e.u : e.v;
  }
  /// Vertex reached by leaving along `d`.
  VertexId head(Dart d) const { return anchor(d.opposite()); }
  VertexId other_end(EdgeId e, VertexId v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }
  /// The dart of edge `e` anchored at `v`.
  Dart dart_at(EdgeId e, VertexId v) const {
    return Dart{e, static_cast<std::uint8_t>(edge(e).u == v ? 0 : 1)};
  }

  /// Darts anchored at `v`, sorted by edge id.
  std::span<const Dart> darts_at(VertexId v) const { return incidence_[static_cast<std::size_t>(v)]; }
  int degree(VertexId v) const { return static_cast<int>(darts_at(v).size()); }
  int min_degree() const;
  int max_degree() const;

  bool is_simple() const;
  /// Number of edges joining u and v.
  int multiplicity(VertexId u, VertexId v) const;
  bool is_connected() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Dart>> incidence_;
};

/// Edge ids are assigned in input order.
Multigraph build_multigraph(int vertex_count, std::span<const std::pair<VertexId, VertexId>> endpoint_pairs);
Multigraph build_multigraph(int vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> endpoint_pairs);

bool is_k_regular(const Multigraph& g, int k);

/// Edge-id set; kept sorted.
struct Matching {
  std::vector<EdgeId> edges;

  bool contains(EdgeId e) const;
  std::size_t size() const { return edges.size(); }
};

bool is_matching(const Multigraph& g, const Matching& m);
bool is_perfect_matching(const Multigraph& g, const Matching& m);
/// Sorts and validates; throws GraphError(NotAMatching).
Matching make_matching(const Multigraph& g, std::vector<EdgeId> edge_ids);
/// All perfect matchings, by backtracking on the lowest unmatched vertex.
/// Output is in lexicographic order of the sorted edge lists.
std::vector<Matching> enumerate_perfect_matchings(const Multigraph& g);

/// Closed walk given as the cyclic sequence of darts along which it leaves
/// each successive vertex. Edges must be pairwise distinct.
struct ClosedTrail {
  std::vector<Dart> darts;

  std::size_t length() const { return darts.size(); }
  friend bool operator==(const ClosedTrail&, const ClosedTrail&) = default;
};

/// Throws GraphError(TrailNotInGraph) when the trail is empty, references
/// unknown edges, repeats an edge, or is not closed.
void validate_closed_trail(const Multigraph& g, const ClosedTrail& trail);
bool is_closed_trail(const Multigraph& g, const ClosedTrail& trail);
/// A closed trail visiting each vertex at most once.
bool is_cycle(const Multigraph& g, const ClosedTrail& trail);
bool is_hamiltonian_cycle(const Multigraph& g, const ClosedTrail& trail);

/// Vertex the trail leaves at step i, for every i.
std::vector<VertexId> trail_vertices(const Multigraph& g, const ClosedTrail& trail);
std::vector<EdgeId> trail_edges(const ClosedTrail& trail);
/// Per-vertex membership flags.
std::vector<char> vertex_flags(const Multigraph& g, const ClosedTrail& trail);

/// True when every listed edge has an endpoint on the trail.
bool dominates_edges(const Multigraph& g, const ClosedTrail& trail, std::span<const EdgeId> edge_ids);
bool is_dominating_cycle(const Multigraph& g, const ClosedTrail& trail);

/// Builds the trail that follows `vertices` cyclically, taking the lowest-id
/// unused edge between consecutive vertices. Throws TrailNotInGraph when a
/// step has no edge.
ClosedTrail trail_from_vertex_cycle(const Multigraph& g, std::span<const VertexId> vertices);

struct Triangle {
  std::array<VertexId, 3> vertices{};
  std::array<EdgeId, 3> edges{};

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Every 3-cycle on three distinct edges, sorted by (vertices, edges).
std::vector<Triangle> list_triangles(const Multigraph& g);

/// Vertex-induced component labels, ignoring edges flagged in `removed`.
/// Returns the number of components; `label` is filled per vertex.
int component_labels(const Multigraph& g, std::span<const char> removed_edges, std::vector<int>& label);

/// Same graph with each set of parallel edges collapsed to one edge.
Multigraph underlying_simple_graph(const Multigraph& g);

}  // namespace domcycle
