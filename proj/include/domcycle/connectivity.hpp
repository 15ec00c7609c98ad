#pragma once

#include <optional>
#include <vector>

#include "domcycle/multigraph.hpp"

namespace domcycle {

enum class CutKind { Vertex, Edge, CyclicEdge };

/// Witness of a disconnection. `members` holds vertex ids for a vertex cut
/// and edge ids otherwise; `side_a`/`side_b` are the two vertex sets the
/// removal separates (for a vertex cut, one component and everything else).
struct CutCertificate {
  CutKind kind = CutKind::Edge;
  std::vector<int> members;
  std::vector<VertexId> side_a;
  std::vector<VertexId> side_b;
};

struct ConnectivityResult {
  int value = 0;
  std::optional<CutCertificate> certificate;
};

/// Largest k such that the graph has more than k vertices and stays
/// connected after deleting any k-1 of them. Parallel edges are ignored.
/// Exhaustive over vertex subsets in increasing size; throws TooLarge when
/// the subset count exceeds kMaxVertexSubsets, Disconnected when the input
/// is disconnected.
ConnectivityResult vertex_connectivity(const Multigraph& g);
inline constexpr long long kMaxVertexSubsets = 50'000'000;

/// Minimum edge cut via unit-capacity max flow from vertex 0.
ConnectivityResult edge_connectivity(const Multigraph& g);

/// Any cycle among the vertices flagged in `allowed` (all vertices if empty).
std::optional<ClosedTrail> find_cycle(const Multigraph& g, std::span<const char> allowed = {});

struct DisjointCyclePair {
  ClosedTrail first;
  ClosedTrail second;
};

std::optional<DisjointCyclePair> find_two_disjoint_cycles(const Multigraph& g);
bool has_two_disjoint_cycles(const Multigraph& g);

/// Exact λ_c by enumerating all 2^(n-1) vertex bipartitions.
inline constexpr int kMaxCyclicConnectivityVertices = 24;

/// Throws NoTwoDisjointCycles when λ_c is undefined, TooLarge for n > 24.
ConnectivityResult cyclic_edge_connectivity(const Multigraph& g);

/// Graphs without two disjoint cycles have no cyclic edge cut and count as
/// cyclically k-edge connected for every k.
bool is_cyclically_k_edge_connected(const Multigraph& g, int k);

/// Re-checks a certificate against the host graph.
bool validate_certificate(const Multigraph& g, const CutCertificate& cert);

}  // namespace domcycle
