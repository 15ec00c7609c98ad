#include <doctest.h>

#include "domcycle/constructions.hpp"
#include "domcycle/named_graphs.hpp"
#include "domcycle/search.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace domcycle;

namespace {

/// 4-regular multigraph with cut vertex 4: no T-trail exists for any T.
Multigraph cut_vertex_quartic() {
  return build_multigraph(5, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

/// Random loopless 4-regular multigraph.
Multigraph random_quartic_multigraph(int n, std::mt19937_64& rng) {
  while (true) {
    std::vector<VertexId> points;
    for (VertexId v = 0; v < n; ++v) points.insert(points.end(), 4, v);
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      ok = ok && points[i] != points[i + 1];
      edges.push_back({points[i], points[i + 1]});
    }
    if (ok) return Multigraph(n, edges);
  }
}

}  // namespace

TEST_CASE("Hamiltonian search agrees with the all-cycles oracle") {
  std::mt19937_64 rng(31);
  std::vector<Multigraph> graphs{named::petersen(), named::complete(5), named::prism(), named::heawood(), named::path(3),
                                 named::complete_bipartite(2, 3)};
  for (int i = 0; i < 25; ++i) graphs.push_back(oracle::random_connected(6 + i % 4, 0.35, rng));
  for (const Multigraph& g : graphs) {
    const SearchOutcome out = find_hamiltonian_cycle(g);
    CHECK(out.found == oracle::hamiltonian(g));
    if (out.found) CHECK(is_hamiltonian_cycle(g, *out.witness));
  }
  CHECK_FALSE(find_hamiltonian_cycle(named::petersen()).found);
  CHECK(find_hamiltonian_cycle(named::dodecahedron()).found);
}

TEST_CASE("dominating cycle searches agree with the all-cycles oracle") {
  std::mt19937_64 rng(32);
  std::vector<Multigraph> graphs{named::petersen(), named::prism(), named::complete(4), named::mobius_kantor(),
                                 named::generalized_petersen(7, 2)};
  for (int i = 0; i < 25; ++i) graphs.push_back(oracle::random_connected(6 + i % 4, 0.3, rng));
  for (int i = 0; i < 8; ++i) graphs.push_back(oracle::random_regular(10, 3, rng));
  for (const Multigraph& g : graphs) {
    const int shortest = oracle::shortest_dominating(g, oracle::every_edge(g));
    const SearchOutcome any = find_dominating_cycle(g);
    const SearchOutcome best = find_shortest_dominating_cycle(g);
    CHECK(any.found == (shortest > 0));
    CHECK(best.found == (shortest > 0));
    if (any.found) CHECK(is_dominating_cycle(g, *any.witness));
    if (best.found) {
      CHECK(is_dominating_cycle(g, *best.witness));
      CHECK(static_cast<int>(best.witness->length()) == shortest);
    }
  }
  CHECK(find_shortest_dominating_cycle(named::petersen()).witness->length() == 9);
  // two triangles joined by a perfect matching is the prism, which is Hamiltonian
  CHECK(oracle::hamiltonian(named::two_triangles_joined()));
  CHECK(find_dominating_cycle(named::two_triangles_joined()).found);
  // a star has no cycle at all
  CHECK_FALSE(find_dominating_cycle(build_multigraph(4, {{0, 1}, {0, 2}, {0, 3}})).found);
}

TEST_CASE("matching domination agrees with the oracle") {
  std::mt19937_64 rng(33);
  for (const Multigraph& g : {named::petersen(), named::heawood(), named::prism(), named::complete_bipartite(3, 3)}) {
    for (const Matching& m : enumerate_perfect_matchings(g)) {
      const SearchOutcome out = find_cycle_dominating_matching(g, m);
      CHECK(out.found == (oracle::shortest_dominating(g, m.edges) > 0));
      if (out.found) CHECK(dominates_edges(g, *out.witness, m.edges));
    }
  }
  CHECK(code_of([] { find_cycle_dominating_matching(named::petersen(), Matching{{0, 1}}); }) == ErrorCode::NotAMatching);
  // a single edge is dominated by a cycle through either endpoint
  const Multigraph two_triangles = build_multigraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
  CHECK(find_cycle_dominating_matching(two_triangles, Matching{{6}}).found);
  CHECK_FALSE(find_cycle_dominating_matching(two_triangles, Matching{{0, 3}}).found);
}

TEST_CASE("T-trail search agrees with the routing oracle") {
  std::vector<Multigraph> hosts{named::complete(5), cut_vertex_quartic()};
  std::mt19937_64 rng(34);
  for (int i = 0; i < 6; ++i) hosts.push_back(random_quartic_multigraph(3 + i % 3, rng));
  for (const Multigraph& h : hosts) {
    for (const TransitionSystem& t : enumerate_transition_systems(h)) {
      const SearchOutcome out = find_t_trail(h, t);
      CHECK(out.found == (oracle::t_trail_routings(h, t) > 0));
      if (out.found) CHECK(is_t_trail(h, t, *out.witness).ok);
    }
  }
  const Multigraph cut = cut_vertex_quartic();
  CHECK_FALSE(find_t_trail(cut, transition_system_from_codes(cut, std::vector<int>(5, 0))).found);
}

TEST_CASE("T-trail search on the octahedron") {
  const Multigraph h = named::octahedron();
  const auto systems = enumerate_transition_systems(h);
  for (std::size_t i = 0; i < systems.size(); i += 17) {
    const SearchOutcome out = find_t_trail(h, systems[i]);
    CHECK(out.found == (oracle::t_trail_routings(h, systems[i]) > 0));
  }
}

TEST_CASE("T-trail search preconditions") {
  CHECK(code_of([] { find_t_trail(named::petersen(), TransitionSystem{}); }) == ErrorCode::NotFourRegular);
  CHECK(code_of([] { find_t_trail(named::complete(5), TransitionSystem{}); }) == ErrorCode::InvalidTransitionSystem);
}
