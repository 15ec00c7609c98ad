#include "domcycle/named_graphs.hpp"

namespace domcycle::named {

Multigraph complete(int n) {
  std::vector<Edge> edges;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) edges.push_back(Edge{i, j});
  }
  return Multigraph(n, std::move(edges));
}

Multigraph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < a; ++i) {
    for (VertexId j = 0; j < b; ++j) edges.push_back(Edge{i, a + j});
  }
  return Multigraph(a + b, std::move(edges));
}

Multigraph cycle(int n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.push_back(Edge{i, (i + 1) % n});
  return Multigraph(n, std::move(edges));
}

Multigraph path(int n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
  return Multigraph(n, std::move(edges));
}

Multigraph generalized_petersen(int n, int k) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.push_back(Edge{i, (i + 1) % n});
  for (VertexId i = 0; i < n; ++i) edges.push_back(Edge{i, n + i});
  for (VertexId i = 0; i < n; ++i) {
    const VertexId j = (i + k) % n;
    // for 2k == n each inner edge would be listed twice
    if (2 * k == n && j < i) continue;
    edges.push_back(Edge{n + i, n + j});
  }
  return Multigraph(2 * n, std::move(edges));
}

Multigraph lcf(int n, const std::vector<int>& shifts) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.push_back(Edge{i, (i + 1) % n});
  for (VertexId i = 0; i < n; ++i) {
    const int shift = shifts[static_cast<std::size_t>(i) % shifts.size()];
    const VertexId j = ((i + shift) % n + n) % n;
    if (i < j) edges.push_back(Edge{i, j});
  }
  return Multigraph(n, std::move(edges));
}

Multigraph petersen() { return generalized_petersen(5, 2); }
Multigraph heawood() { return lcf(14, {5, -5}); }
Multigraph mobius_kantor() { return generalized_petersen(8, 3); }
Multigraph pappus() { return lcf(18, {5, 7, -7, 7, -7, -5}); }
Multigraph dodecahedron() { return generalized_petersen(10, 2); }
Multigraph prism() { return generalized_petersen(3, 1); }

Multigraph two_triangles_joined() {
  return Multigraph(6, {{0, 2}, {2, 4}, {4, 0}, {0, 1}, {2, 3}, {4, 5}, {1, 3}, {3, 5}, {5, 1}});
}

Multigraph octahedron() {
  std::vector<Edge> edges;
  for (VertexId j = 1; j < 6; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      if (j - i != 3) edges.push_back(Edge{i, j});
    }
  }
  return Multigraph(6, std::move(edges));
}

Multigraph cycle_complement(int n) {
  std::vector<Edge> edges;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      const int gap = j - i;
      if (gap != 1 && gap != n - 1) edges.push_back(Edge{i, j});
    }
  }
  return Multigraph(n, std::move(edges));
}

Multigraph antiprism(int n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.push_back(Edge{i, (i + 1) % n});
  for (VertexId i = 0; i < n; ++i) edges.push_back(Edge{n + i, n + (i + 1) % n});
  for (VertexId i = 0; i < n; ++i) {
    edges.push_back(Edge{i, n + i});
    edges.push_back(Edge{i, n + (i + 1) % n});
  }
  return Multigraph(2 * n, std::move(edges));
}

Matching spoke_matching(int n) {
  Matching m;
  for (EdgeId e = n; e < 2 * n; ++e) m.edges.push_back(e);
  return m;
}

}  // namespace domcycle::named
