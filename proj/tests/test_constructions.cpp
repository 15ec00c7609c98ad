#include <doctest.h>

#include "domcycle/connectivity.hpp"
#include "domcycle/constructions.hpp"
#include "domcycle/isomorphism.hpp"
#include "domcycle/named_graphs.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace domcycle;

TEST_CASE("line graph structure follows the definition") {
  std::mt19937_64 rng(41);
  std::vector<Multigraph> graphs{named::petersen(), named::complete(4), named::cycle(3), named::complete(5), named::prism()};
  for (int i = 0; i < 15; ++i) graphs.push_back(oracle::random_connected(6, 0.5, rng));
  for (const Multigraph& g : graphs) {
    const LineGraphResult r = line_graph(g);
    const Multigraph& lg = r.lg;
    REQUIRE(lg.vertex_count() == g.edge_count());
    for (EdgeId i = 0; i < g.edge_count(); ++i) {
      CHECK(r.vertex_of_edge[i] == i);
      CHECK(lg.degree(i) == g.degree(g.edge(i).u) + g.degree(g.edge(i).v) - 2);
      for (EdgeId j = i + 1; j < g.edge_count(); ++j) {
        const Edge a = g.edge(i), b = g.edge(j);
        const bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
        CHECK(lg.multiplicity(i, j) == (share ? 1 : 0));
      }
    }
    // triangle families partition E(L(G))
    std::vector<int> seen(static_cast<std::size_t>(lg.edge_count()), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const int d = g.degree(v);
      CHECK(static_cast<int>(r.triangle_family[v].size()) == d * (d - 1) / 2);
      for (EdgeId e : r.triangle_family[v]) {
        ++seen[e];
        CHECK(r.family_of_edge[e] == v);
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    CHECK(r.canonical_t.has_value() == is_k_regular(g, 3));
  }
}

TEST_CASE("line graph examples") {
  const LineGraphResult pet = line_graph(named::petersen());
  CHECK(pet.lg.vertex_count() == 15);
  CHECK(is_k_regular(pet.lg, 4));
  REQUIRE(pet.canonical_t);
  CHECK(validate_transition_system(pet.lg, *pet.canonical_t));
  // canonical transitions never mix two triangle families
  for (VertexId x = 0; x < pet.lg.vertex_count(); ++x) {
    for (const DartPair& p : pet.canonical_t->per_vertex[x]) {
      CHECK(pet.family_of_edge[p[0].edge] == pet.family_of_edge[p[1].edge]);
    }
  }
  CHECK(are_isomorphic(line_graph(named::complete(4)).lg, named::octahedron()).isomorphic);
  CHECK(are_isomorphic(line_graph(named::cycle(3)).lg, named::cycle(3)).isomorphic);
  CHECK(code_of([] { line_graph(build_multigraph(2, {{0, 1}, {0, 1}})); }) == ErrorCode::NotSimple);
}

TEST_CASE("split graph invariants on every system of K5 and the octahedron") {
  for (const Multigraph& h : {named::complete(5), named::octahedron()}) {
    for (const TransitionSystem& t : enumerate_transition_systems(h)) {
      const SplitResult sr = split(h, t);
      const Multigraph& g = sr.g;
      REQUIRE(g.vertex_count() == 2 * h.vertex_count());
      REQUIRE(g.edge_count() == h.edge_count() + h.vertex_count());
      CHECK(is_k_regular(g, 3));
      CHECK(is_perfect_matching(g, sr.matching));
      const TransitionLookup lookup(h, t);
      for (VertexId v = 0; v < h.vertex_count(); ++v) {
        CHECK(sr.split_pair[v] == std::pair<VertexId, VertexId>{2 * v, 2 * v + 1});
        CHECK(sr.matching_edge[v] == h.edge_count() + v);
        for (Dart d : h.darts_at(v)) {
          // transition 0 lands on v', transition 1 on v''
          CHECK(g.anchor(sr.dart_image[d.index()]) == 2 * v + lookup.side(d));
          CHECK(sr.dart_image[d.index()] == d);
        }
      }
      // no triangle of the split graph uses an e(v)
      for (const Triangle& tri : list_triangles(g)) {
        for (EdgeId e : tri.edges) CHECK_FALSE(sr.matching.contains(e));
      }
      // contracting M_T gives H back with the identical labelling
      const ContractionMap cm = contract_matching(g, sr.matching);
      CHECK(cm.image_graph == h);
    }
  }
  const Multigraph oct = named::octahedron();
  const SplitResult sr = split(oct, transition_system_at(oct, 100));
  CHECK(sr.g.vertex_count() == 12);
  CHECK(sr.g.edge_count() == 18);
  CHECK(code_of([] { split(named::petersen(), TransitionSystem{}); }) == ErrorCode::NotFourRegular);
}

TEST_CASE("split and contract invert each other on 7-vertex hosts") {
  const Multigraph h = named::cycle_complement(7);
  const auto systems = enumerate_transition_systems(h);
  for (std::size_t i = 0; i < systems.size(); i += 7) {
    const SplitResult sr = split(h, systems[i]);
    CHECK(are_isomorphic(contract_matching(sr.g, sr.matching).image_graph, h).isomorphic);
  }
}

TEST_CASE("contracting Petersen's spokes gives K5, and splitting undoes it") {
  const Multigraph p = named::petersen();
  const Matching spokes = named::spoke_matching(5);
  const ContractionMap cm = contract_matching(p, spokes);
  CHECK(cm.image_graph.vertex_count() == 5);
  CHECK(are_isomorphic(cm.image_graph, named::complete(5)).isomorphic);
  CHECK(cm.contracted_edges == spokes.edges);
  for (const auto& fiber : cm.fibers) CHECK(fiber.size() == 2);

  const TransitionSystem t_pet = induced_transition_system(p, spokes, cm);
  const SplitResult sr = split(cm.image_graph, t_pet);
  const auto origin = split_vertex_origin(p, cm, t_pet);
  // origin maps split(K5, T_pet) onto Petersen edge for edge
  CHECK(is_isomorphism(sr.g, p, origin));
  CHECK(are_isomorphic(sr.g, p).isomorphic);
}

TEST_CASE("induced systems recover every cubic graph from its perfect matchings") {
  for (const Multigraph& g : {named::petersen(), named::heawood(), named::prism(), named::complete_bipartite(3, 3)}) {
    for (const Matching& m : enumerate_perfect_matchings(g)) {
      const ContractionMap cm = contract_matching(g, m);
      if (!is_k_regular(cm.image_graph, 4)) continue;
      const TransitionSystem t = induced_transition_system(g, m, cm);
      const SplitResult sr = split(cm.image_graph, t);
      CHECK(is_isomorphism(sr.g, g, split_vertex_origin(g, cm, t)));
    }
  }
  const Multigraph k4 = named::complete(4);
  CHECK(code_of([&] {
          const Matching m{{0}};
          induced_transition_system(k4, m, contract_matching(k4, m));
        }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("matching contraction keeps parallel edges") {
  const Multigraph k4 = named::complete(4);  // edges 01 02 12 03 13 23
  const ContractionMap cm = contract_matching(k4, Matching{{0}});
  CHECK(cm.image_graph.vertex_count() == 3);
  CHECK(cm.image_graph.edge_count() == 5);
  CHECK(cm.contracted_edges == std::vector<EdgeId>{0});
  CHECK(cm.edge_provenance == std::vector<EdgeId>{1, 2, 3, 4, 5});
  // {0,1} becomes image vertex 0, with doubled edges to both other vertices
  CHECK(cm.image_graph.multiplicity(0, 1) == 2);
  CHECK(cm.image_graph.multiplicity(0, 2) == 2);
  CHECK(cm.image_graph.multiplicity(1, 2) == 1);

  const ContractionMap id = contract_matching(named::petersen(), Matching{});
  CHECK(id.image_graph == named::petersen());
  CHECK(code_of([] { contract_matching(named::complete(4), Matching{{0, 1}}); }) == ErrorCode::NotAMatching);
}

TEST_CASE("triangle contraction") {
  const ContractionMap same = contract_triangles(named::petersen());
  CHECK(same.image_graph == named::petersen());
  CHECK(code_of([] { contract_triangles(named::complete(4)); }) == ErrorCode::OverlappingTriangles);

  const ContractionMap prism = contract_triangles(named::prism());
  CHECK(prism.image_graph.vertex_count() == 2);
  CHECK(prism.image_graph.multiplicity(0, 1) == 3);

  const Multigraph k5 = named::complete(5);
  const TransitionSystem tri = k5_single_triangle_system(k5);
  REQUIRE(validate_transition_system(k5, tri));
  const SplitResult sr = split(k5, tri);
  CHECK(list_triangles(sr.g).size() == 1);
  CHECK(oracle::triangles(sr.g).size() == 1);
  const ContractionMap cm = contract_triangles(sr.g);
  CHECK(cm.image_graph.vertex_count() == 8);
  CHECK(is_k_regular(cm.image_graph, 3));
  CHECK(cm.contracted_edges.size() == 3);
}
