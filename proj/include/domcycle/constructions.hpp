#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "domcycle/multigraph.hpp"
#include "domcycle/transitions.hpp"

namespace domcycle {

/// L(G) with its provenance. Line-graph vertex i is edge i of G; for each
/// vertex v of G the edges joining the edges at v form `triangle_family[v]`
/// (a triangle t_v when G is cubic).
struct LineGraphResult {
  Multigraph lg;
  std::vector<VertexId> vertex_of_edge;
  std::vector<std::vector<EdgeId>> triangle_family;
  /// Inverse of triangle_family: the G-vertex whose family holds each L-edge.
  std::vector<VertexId> family_of_edge;
  /// Present when G is cubic: at every line-graph vertex the two edges of
  /// the same triangle t_v form a transition.
  std::optional<TransitionSystem> canonical_t;
};

/// Throws NotSimple.
LineGraphResult line_graph(const Multigraph& g);

/// The cubic graph obtained by splitting each vertex v of H along its
/// transitions into v' = 2v (transition 0) and v'' = 2v+1 (transition 1)
/// joined by e(v). Edge i < m(H) is the image of H's edge i with the same
/// dart orientation; e(v) has id m(H) + v.
struct SplitResult {
  Multigraph g;
  Matching matching;
  std::vector<std::pair<VertexId, VertexId>> split_pair;
  std::vector<EdgeId> matching_edge;
  /// Indexed by Dart::index() of H.
  std::vector<Dart> dart_image;

  /// H-vertex a split vertex came from.
  static VertexId origin(VertexId split_vertex) { return split_vertex / 2; }
};

/// Throws NotFourRegular or InvalidTransitionSystem.
SplitResult split(const Multigraph& h, const TransitionSystem& t);

/// Vertex surjection plus edge provenance. Image vertices are numbered by
/// the smallest source vertex in their fiber; surviving edges keep their
/// relative order and orientation.
struct ContractionMap {
  Multigraph image_graph;
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_provenance;
  std::vector<std::vector<VertexId>> fibers;
  /// Source edges that vanished (both ends in one fiber).
  std::vector<EdgeId> contracted_edges;
};

/// G/M. Throws NotAMatching.
ContractionMap contract_matching(const Multigraph& g, const Matching& m);

/// H': every triangle shrunk to one vertex. Throws OverlappingTriangles when
/// two triangles share a vertex.
ContractionMap contract_triangles(const Multigraph& g);

/// For cubic G with perfect matching M, the transition system T on G/M with
/// split(G/M, T) isomorphic to G: at each image vertex the darts inherited
/// from one end of the contracted edge form one transition.
/// Throws PreconditionViolated when G is not cubic, M not perfect, or G/M is
/// not 4-regular.
TransitionSystem induced_transition_system(const Multigraph& g, const Matching& m, const ContractionMap& cm);

/// Maps each vertex of split(G/M, T_M).g back to the vertex of G it came
/// from, so split results can be compared with G without an isomorphism
/// search.
std::vector<VertexId> split_vertex_origin(const Multigraph& g, const ContractionMap& cm, const TransitionSystem& t);

}  // namespace domcycle
