#include "domcycle/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

#include "domcycle/errors.hpp"

namespace domcycle {
namespace {

std::vector<std::vector<char>> adjacency_matrix(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  return adj;
}

/// Components of G - removed, restricted to live vertices. Returns label per
/// vertex (-1 for removed) and the component count.
int live_components(const Multigraph& g, const std::vector<char>& removed_vertex, std::vector<int>& label) {
  const int n = g.vertex_count();
  label.assign(static_cast<std::size_t>(n), -1);
  int count = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (removed_vertex[s] || label[s] >= 0) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (Dart d : g.darts_at(v)) {
        VertexId w = g.head(d);
        if (!removed_vertex[w] && label[w] < 0) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (1LL << 60)) return r;
  }
  return r;
}

// Union-find small enough to live on the stack of the bipartition loop.
struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

/// Calls `visit` with each chordless cycle (as a vertex list) of the simple
/// graph underlying `g`, once per direction. Stops when `visit` returns true.
bool for_each_chordless_cycle(const Multigraph& g, const std::function<bool(const std::vector<VertexId>&)>& visit) {
  const int n = g.vertex_count();
  const auto adj = adjacency_matrix(g);
  std::vector<std::vector<VertexId>> nbrs(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w = 0; w < n; ++w) {
      if (adj[v][w]) nbrs[v].push_back(w);
    }
  }
  std::vector<VertexId> path;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);

  std::function<bool(VertexId)> extend = [&](VertexId s) -> bool {
    VertexId last = path.back();
    for (VertexId w : nbrs[last]) {
      if (w <= s || on_path[w]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (adj[path[i]][w]) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (path.size() >= 2 && adj[s][w]) {
        path.push_back(w);
        bool stop = visit(path);
        path.pop_back();
        if (stop) return true;
        continue;  // s would be a chord of any longer path
      }
      path.push_back(w);
      on_path[w] = 1;
      bool stop = extend(s);
      on_path[w] = 0;
      path.pop_back();
      if (stop) return true;
    }
    return false;
  };

  for (VertexId s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    bool stop = extend(s);
    on_path[s] = 0;
    if (stop) return true;
  }
  return false;
}

}  // namespace

ConnectivityResult vertex_connectivity(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw GraphError(ErrorCode::PreconditionViolated, "empty graph");
  if (!g.is_connected()) throw GraphError(ErrorCode::Disconnected, "vertex connectivity needs a connected graph");
  const auto adj = adjacency_matrix(g);
  bool complete = true;
  for (VertexId u = 0; u < n && complete; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!adj[u][v]) {
        complete = false;
        break;
      }
    }
  }
  if (complete) return ConnectivityResult{n - 1, std::nullopt};

  // a non-complete graph always has a separator of size <= min degree
  const int simple_min_degree = [&] {
    int best = n;
    for (VertexId v = 0; v < n; ++v) best = std::min(best, static_cast<int>(std::count(adj[v].begin(), adj[v].end(), 1)));
    return best;
  }();
  long long work = 0;
  for (int k = 0; k <= simple_min_degree; ++k) work += binomial(n, k);
  if (work > kMaxVertexSubsets) {
    throw GraphError(ErrorCode::TooLarge, "vertex connectivity enumeration of " + std::to_string(work) + " subsets");
  }

  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<int> label;
  std::vector<int> pick;
  for (int k = 0; k <= n - 2; ++k) {
    pick.resize(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::fill(removed.begin(), removed.end(), 0);
      for (int v : pick) removed[v] = 1;
      if (live_components(g, removed, label) > 1) {
        CutCertificate cert;
        cert.kind = CutKind::Vertex;
        cert.members = pick;
        for (VertexId v = 0; v < n; ++v) {
          if (removed[v]) continue;
          (label[v] == 0 ? cert.side_a : cert.side_b).push_back(v);
        }
        return ConnectivityResult{k, cert};
      }
      // next combination in lexicographic order
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return ConnectivityResult{n - 1, std::nullopt};
}

ConnectivityResult edge_connectivity(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw GraphError(ErrorCode::PreconditionViolated, "empty graph");
  if (!g.is_connected()) throw GraphError(ErrorCode::Disconnected, "edge connectivity needs a connected graph");
  if (n == 1) return ConnectivityResult{0, std::nullopt};

  const auto m = static_cast<std::size_t>(g.edge_count());
  std::vector<int> flow(2 * m, 0);  // net flow along each dart direction
  std::vector<int> parent_dart(static_cast<std::size_t>(n));
  std::vector<VertexId> queue;

  auto residual_reach = [&](VertexId source) {
    std::fill(parent_dart.begin(), parent_dart.end(), -2);
    parent_dart[source] = -1;
    queue.assign(1, source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId v = queue[head];
      for (Dart d : g.darts_at(v)) {
        if (1 - flow[d.index()] <= 0) continue;
        VertexId w = g.head(d);
        if (parent_dart[w] != -2) continue;
        parent_dart[w] = d.index();
        queue.push_back(w);
      }
    }
  };

  int best = g.edge_count() + 1;
  std::vector<char> best_side;
  for (VertexId t = 1; t < n; ++t) {
    std::fill(flow.begin(), flow.end(), 0);
    int value = 0;
    while (true) {
      residual_reach(0);
      if (parent_dart[t] == -2) break;
      for (VertexId v = t; v != 0;) {
        Dart d = Dart::from_index(parent_dart[v]);
        flow[d.index()] += 1;
        flow[d.opposite().index()] -= 1;
        v = g.anchor(d);
      }
      ++value;
      if (value >= best) break;
    }
    if (value < best) {
      best = value;
      residual_reach(0);
      best_side.assign(static_cast<std::size_t>(n), 0);
      for (VertexId v = 0; v < n; ++v) best_side[v] = parent_dart[v] != -2;
    }
  }

  CutCertificate cert;
  cert.kind = CutKind::Edge;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (best_side[g.edge(e).u] != best_side[g.edge(e).v]) cert.members.push_back(e);
  }
  for (VertexId v = 0; v < n; ++v) (best_side[v] ? cert.side_a : cert.side_b).push_back(v);
  return ConnectivityResult{best, cert};
}

std::optional<ClosedTrail> find_cycle(const Multigraph& g, std::span<const char> allowed) {
  const int n = g.vertex_count();
  auto ok = [&](VertexId v) { return allowed.empty() || allowed[v]; };
  // 0 = unseen, 1 = on the DFS stack, 2 = finished
  std::vector<char> state(static_cast<std::size_t>(n), 0);
  std::vector<Dart> parent(static_cast<std::size_t>(n));
  std::vector<std::pair<VertexId, std::size_t>> stack;

  for (VertexId root = 0; root < n; ++root) {
    if (!ok(root) || state[root] != 0) continue;
    state[root] = 1;
    parent[root] = Dart{};
    stack.assign(1, {root, 0});
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto darts = g.darts_at(v);
      if (next == darts.size()) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      Dart d = darts[next++];
      if (d.edge == parent[v].edge) continue;
      VertexId w = g.head(d);
      if (!ok(w)) continue;
      if (state[w] == 0) {
        state[w] = 1;
        parent[w] = d;
        stack.emplace_back(w, 0);
      } else if (state[w] == 1) {
        ClosedTrail trail;
        for (VertexId x = v; x != w; x = g.anchor(parent[x])) trail.darts.push_back(parent[x]);
        std::reverse(trail.darts.begin(), trail.darts.end());
        trail.darts.push_back(d);
        return trail;
      }
    }
  }
  return std::nullopt;
}

std::optional<DisjointCyclePair> find_two_disjoint_cycles(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<char> allowed(static_cast<std::size_t>(n), 1);
  std::optional<DisjointCyclePair> result;

  auto try_cycle = [&](const std::vector<VertexId>& cycle) -> bool {
    std::fill(allowed.begin(), allowed.end(), 1);
    for (VertexId v : cycle) allowed[v] = 0;
    if (auto other = find_cycle(g, allowed)) {
      result = DisjointCyclePair{trail_from_vertex_cycle(g, cycle), std::move(*other)};
      return true;
    }
    return false;
  };

  // digons from parallel edges
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (g.multiplicity(u, v) >= 2 && try_cycle({u, v})) return result;
    }
  }
  for_each_chordless_cycle(g, try_cycle);
  return result;
}

bool has_two_disjoint_cycles(const Multigraph& g) { return find_two_disjoint_cycles(g).has_value(); }

ConnectivityResult cyclic_edge_connectivity(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > kMaxCyclicConnectivityVertices) {
    throw GraphError(ErrorCode::TooLarge, std::to_string(n) + " vertices exceeds bipartition enumeration bound");
  }
  if (!has_two_disjoint_cycles(g)) throw GraphError(ErrorCode::NoTwoDisjointCycles, "lambda_c undefined");

  // side[v] = 1 puts v on side A; vertex n-1 stays on side B
  std::vector<char> side(static_cast<std::size_t>(n), 0);
  std::vector<char> best_side;
  int crossing = 0;
  int best = g.edge_count() + 1;
  DisjointSets sets(n);

  auto both_sides_cyclic = [&]() {
    std::iota(sets.parent.begin(), sets.parent.end(), 0);
    bool cyclic[2] = {false, false};
    for (const Edge& e : g.edges()) {
      if (side[e.u] != side[e.v]) continue;
      if (!sets.unite(e.u, e.v)) cyclic[static_cast<int>(side[e.u])] = true;
    }
    return cyclic[0] && cyclic[1];
  };

  const std::uint64_t splits = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < splits; ++i) {
    const int v = std::countr_zero(i);
    for (Dart d : g.darts_at(v)) crossing += side[g.head(d)] == side[v] ? 1 : -1;
    side[v] ^= 1;
    if (crossing < best && both_sides_cyclic()) {
      best = crossing;
      best_side = side;
    }
  }

  CutCertificate cert;
  cert.kind = CutKind::CyclicEdge;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (best_side[g.edge(e).u] != best_side[g.edge(e).v]) cert.members.push_back(e);
  }
  for (VertexId v = 0; v < n; ++v) (best_side[v] ? cert.side_a : cert.side_b).push_back(v);
  return ConnectivityResult{best, cert};
}

bool is_cyclically_k_edge_connected(const Multigraph& g, int k) {
  if (!has_two_disjoint_cycles(g)) return true;
  return cyclic_edge_connectivity(g).value >= k;
}

bool validate_certificate(const Multigraph& g, const CutCertificate& cert) {
  const int n = g.vertex_count();
  std::vector<int> where(static_cast<std::size_t>(n), -1);  // 0 = A, 1 = B, 2 = removed
  for (VertexId v : cert.side_a) {
    if (v < 0 || v >= n || where[v] != -1) return false;
    where[v] = 0;
  }
  for (VertexId v : cert.side_b) {
    if (v < 0 || v >= n || where[v] != -1) return false;
    where[v] = 1;
  }
  if (cert.side_a.empty() || cert.side_b.empty()) return false;

  if (cert.kind == CutKind::Vertex) {
    for (int v : cert.members) {
      if (v < 0 || v >= n || where[v] != -1) return false;
      where[v] = 2;
    }
    if (std::count(where.begin(), where.end(), -1) != 0) return false;
    return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
      return where[e.u] != 2 && where[e.v] != 2 && where[e.u] != where[e.v];
    });
  }

  if (std::count(where.begin(), where.end(), -1) != 0) return false;
  std::vector<char> removed(static_cast<std::size_t>(g.edge_count()), 0);
  for (int e : cert.members) {
    if (e < 0 || e >= g.edge_count()) return false;
    removed[e] = 1;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!removed[e] && where[g.edge(e).u] != where[g.edge(e).v]) return false;
  }
  if (cert.kind == CutKind::CyclicEdge) {
    std::vector<char> in_a(static_cast<std::size_t>(n), 0), in_b(static_cast<std::size_t>(n), 0);
    for (VertexId v = 0; v < n; ++v) (where[v] == 0 ? in_a : in_b)[v] = 1;
    return find_cycle(g, in_a).has_value() && find_cycle(g, in_b).has_value();
  }
  return true;
}

}  // namespace domcycle
