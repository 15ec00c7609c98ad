#include <doctest.h>

#include "domcycle/errors.hpp"
#include "domcycle/multigraph.hpp"
#include "domcycle/named_graphs.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace domcycle;

TEST_CASE("construction rejects loops and unknown vertices") {
  CHECK(code_of([] { Multigraph(3, {{0, 0}}); }) == ErrorCode::LoopEdge);
  CHECK(code_of([] { Multigraph(3, {{0, 3}}); }) == ErrorCode::VertexOutOfRange);
  CHECK(code_of([] { Multigraph(3, {{-1, 2}}); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("darts are anchored at the ends of their edge") {
  const Multigraph g = build_multigraph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}});
  CHECK(g.anchor(Dart{0, 0}) == 0);
  CHECK(g.anchor(Dart{0, 1}) == 1);
  CHECK(g.head(Dart{0, 0}) == 1);
  CHECK(Dart{3, 1}.index() == 7);
  CHECK(Dart::from_index(7) == Dart{3, 1});
  CHECK(g.dart_at(2, 0) == Dart{2, 1});
  REQUIRE(g.darts_at(0).size() == 3);
  CHECK(g.darts_at(0)[0].edge == 0);
  CHECK(g.darts_at(0)[1].edge == 2);
  CHECK(g.darts_at(0)[2].edge == 3);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK_FALSE(g.is_simple());
  CHECK(g.max_degree() == 3);
  CHECK(g.min_degree() == 2);
  CHECK(underlying_simple_graph(g).edge_count() == 3);
}

TEST_CASE("regularity and connectivity of named graphs") {
  CHECK(is_k_regular(named::petersen(), 3));
  CHECK(is_k_regular(named::heawood(), 3));
  CHECK(is_k_regular(named::mobius_kantor(), 3));
  CHECK(is_k_regular(named::pappus(), 3));
  CHECK(is_k_regular(named::dodecahedron(), 3));
  CHECK(is_k_regular(named::octahedron(), 4));
  CHECK(is_k_regular(named::cycle_complement(7), 4));
  CHECK(is_k_regular(named::antiprism(4), 4));
  CHECK(named::petersen().edge_count() == 15);
  CHECK(named::pappus().edge_count() == 27);
  CHECK(named::two_triangles_joined().is_connected());
  CHECK_FALSE(Multigraph(4, {{0, 1}, {2, 3}}).is_connected());
}

TEST_CASE("matchings") {
  const Multigraph p = named::petersen();
  CHECK(is_perfect_matching(p, named::spoke_matching(5)));
  CHECK(is_matching(p, Matching{{0, 2}}));
  CHECK_FALSE(is_matching(p, Matching{{0, 1}}));
  CHECK(code_of([&] { make_matching(p, {0, 1}); }) == ErrorCode::NotAMatching);
  CHECK(make_matching(p, {7, 5}).edges == std::vector<EdgeId>{5, 7});
}

TEST_CASE("perfect matching enumeration agrees with subset enumeration") {
  for (const Multigraph& g : {named::complete(4), named::prism(), named::petersen(), named::complete_bipartite(3, 3), named::heawood()}) {
    const auto fast = enumerate_perfect_matchings(g);
    const auto slow = oracle::perfect_matchings(g);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].edges == slow[i]);
  }
  CHECK(enumerate_perfect_matchings(named::petersen()).size() == 6);
  CHECK(enumerate_perfect_matchings(named::complete(5)).empty());
}

TEST_CASE("closed trails, cycles and domination") {
  const Multigraph k4 = named::complete(4);  // edges 01 02 12 03 13 23
  const ClosedTrail tri{{Dart{0, 0}, Dart{2, 0}, Dart{1, 1}}};
  CHECK(is_closed_trail(k4, tri));
  CHECK(is_cycle(k4, tri));
  CHECK_FALSE(is_hamiltonian_cycle(k4, tri));
  CHECK(is_dominating_cycle(k4, tri));
  CHECK(trail_vertices(k4, tri) == std::vector<VertexId>{0, 1, 2});

  CHECK_FALSE(is_closed_trail(k4, ClosedTrail{{Dart{0, 0}, Dart{2, 0}}}));
  CHECK_FALSE(is_closed_trail(k4, ClosedTrail{}));
  CHECK_FALSE(is_closed_trail(k4, ClosedTrail{{Dart{0, 0}, Dart{0, 1}}}));
  CHECK(code_of([&] { validate_closed_trail(k4, ClosedTrail{{Dart{9, 0}}}); }) == ErrorCode::TrailNotInGraph);

  const std::vector<VertexId> order{0, 1, 2, 3};
  const ClosedTrail ham = trail_from_vertex_cycle(k4, order);
  CHECK(is_hamiltonian_cycle(k4, ham));

  // two triangles sharing vertex 0: a closed trail that is not a cycle
  const Multigraph bowtie = build_multigraph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  const ClosedTrail eight{{Dart{0, 0}, Dart{1, 0}, Dart{2, 0}, Dart{3, 0}, Dart{4, 0}, Dart{5, 0}}};
  CHECK(is_closed_trail(bowtie, eight));
  CHECK_FALSE(is_cycle(bowtie, eight));

  // a digon is a cycle of a multigraph
  const Multigraph digon = build_multigraph(2, {{0, 1}, {0, 1}});
  CHECK(is_cycle(digon, ClosedTrail{{Dart{0, 0}, Dart{1, 1}}}));
}

TEST_CASE("triangle listing matches the edge-triple oracle") {
  std::mt19937_64 rng(11);
  std::vector<Multigraph> graphs{named::complete(5), named::octahedron(), named::petersen(), named::prism(),
                                 build_multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}})};
  for (int i = 0; i < 20; ++i) graphs.push_back(oracle::random_connected(7, 0.5, rng));
  for (const Multigraph& g : graphs) {
    const auto found = list_triangles(g);
    const auto expected = oracle::triangles(g);
    REQUIRE(found.size() == expected.size());
    for (const Triangle& t : found) {
      auto edges = t.edges;
      std::sort(edges.begin(), edges.end());
      CHECK(std::find(expected.begin(), expected.end(), edges) != expected.end());
    }
  }
  CHECK(list_triangles(named::complete(4)).size() == 4);
  CHECK(list_triangles(named::complete(5)).size() == 10);
  CHECK(list_triangles(named::petersen()).empty());
  // parallel edges give distinct triangles on the same vertices
  CHECK(list_triangles(build_multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}})).size() == 2);
}

TEST_CASE("component labels respect removed edges") {
  const Multigraph p = named::prism();  // rungs are edges 3,4,5
  std::vector<char> removed(static_cast<std::size_t>(p.edge_count()), 0);
  removed[3] = removed[4] = removed[5] = 1;
  std::vector<int> label;
  CHECK(component_labels(p, removed, label) == 2);
  CHECK(label[0] == label[1]);
  CHECK(label[0] != label[3]);
}
