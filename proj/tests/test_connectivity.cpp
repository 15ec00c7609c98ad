#include <doctest.h>

#include "domcycle/connectivity.hpp"
#include "domcycle/named_graphs.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace domcycle;

TEST_CASE("vertex connectivity of named graphs") {
  CHECK(vertex_connectivity(named::complete(5)).value == 4);
  CHECK(vertex_connectivity(named::octahedron()).value == 4);
  CHECK(vertex_connectivity(named::cycle_complement(7)).value == 4);
  CHECK(vertex_connectivity(named::antiprism(4)).value == 4);
  CHECK(vertex_connectivity(named::petersen()).value == 3);
  CHECK(vertex_connectivity(named::path(4)).value == 1);
  CHECK(code_of([] { vertex_connectivity(Multigraph(4, {{0, 1}, {2, 3}})); }) == ErrorCode::Disconnected);
}

TEST_CASE("vertex connectivity matches subset oracle with valid certificates") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    const Multigraph g = oracle::random_connected(4 + i % 6, 0.35 + 0.05 * (i % 8), rng);
    const ConnectivityResult r = vertex_connectivity(g);
    CHECK(r.value == oracle::vertex_connectivity(g));
    if (r.certificate) {
      CHECK(r.certificate->kind == CutKind::Vertex);
      CHECK(static_cast<int>(r.certificate->members.size()) == r.value);
      CHECK(validate_certificate(g, *r.certificate));
    }
  }
}

TEST_CASE("edge connectivity matches subset oracle") {
  std::mt19937_64 rng(22);
  std::vector<Multigraph> graphs{named::petersen(), named::complete(5), named::prism(),
                                 build_multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 0}})};
  for (int i = 0; i < 30; ++i) graphs.push_back(oracle::random_connected(4 + i % 5, 0.5, rng));
  for (const Multigraph& g : graphs) {
    const ConnectivityResult r = edge_connectivity(g);
    CHECK(r.value == oracle::edge_connectivity(g));
    REQUIRE(r.certificate);
    CHECK(static_cast<int>(r.certificate->members.size()) == r.value);
    CHECK(validate_certificate(g, *r.certificate));
  }
  CHECK(edge_connectivity(named::petersen()).value == 3);
}

TEST_CASE("two disjoint cycles agree with the all-cycles oracle") {
  std::mt19937_64 rng(23);
  std::vector<Multigraph> graphs{named::complete(4),  named::complete_bipartite(3, 3), named::complete(5), named::petersen(),
                                 named::prism(),      named::cycle(6),                named::path(3),
                                 build_multigraph(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {1, 2}})};
  for (int i = 0; i < 40; ++i) graphs.push_back(oracle::random_connected(5 + i % 4, 0.45, rng));
  for (const Multigraph& g : graphs) {
    const auto pair = find_two_disjoint_cycles(g);
    CHECK(pair.has_value() == oracle::has_two_disjoint_cycles(g));
    if (pair) {
      CHECK(is_cycle(g, pair->first));
      CHECK(is_cycle(g, pair->second));
      const auto a = vertex_flags(g, pair->first);
      const auto b = vertex_flags(g, pair->second);
      for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK_FALSE((a[v] && b[v]));
    }
  }
  CHECK_FALSE(has_two_disjoint_cycles(named::complete(5)));
  CHECK(has_two_disjoint_cycles(named::complete(6)));
}

TEST_CASE("cyclic edge connectivity") {
  CHECK(cyclic_edge_connectivity(named::petersen()).value == 5);
  CHECK(cyclic_edge_connectivity(named::prism()).value == 3);
  CHECK(cyclic_edge_connectivity(named::two_triangles_joined()).value == 3);
  CHECK(cyclic_edge_connectivity(named::heawood()).value == 6);
  CHECK(cyclic_edge_connectivity(named::dodecahedron()).value == 5);
  CHECK(code_of([] { cyclic_edge_connectivity(named::complete(4)); }) == ErrorCode::NoTwoDisjointCycles);
  CHECK(code_of([] { cyclic_edge_connectivity(named::cycle(25)); }) == ErrorCode::TooLarge);

  // no cyclic cut at all: every k holds
  CHECK(is_cyclically_k_edge_connected(named::complete(4), 10));
  CHECK(is_cyclically_k_edge_connected(named::petersen(), 5));
  CHECK_FALSE(is_cyclically_k_edge_connected(named::petersen(), 6));
}

TEST_CASE("cyclic edge connectivity matches the edge-subset oracle") {
  std::mt19937_64 rng(24);
  std::vector<Multigraph> graphs{named::petersen(), named::prism(), named::complete(6), named::octahedron(),
                                 named::mobius_kantor()};
  for (int i = 0; i < 10; ++i) graphs.push_back(oracle::random_regular(8 + 2 * (i % 2), 3, rng));
  for (int i = 0; i < 10; ++i) graphs.push_back(oracle::random_connected(7, 0.5, rng));
  for (const Multigraph& g : graphs) {
    if (!has_two_disjoint_cycles(g)) continue;
    const ConnectivityResult r = cyclic_edge_connectivity(g);
    CHECK(r.value == oracle::cyclic_edge_connectivity(g, r.value));
    REQUIRE(r.certificate);
    CHECK(validate_certificate(g, *r.certificate));
    std::vector<char> alive(static_cast<std::size_t>(g.edge_count()), 1);
    for (int e : r.certificate->members) alive[e] = 0;
    CHECK(oracle::cyclic_parts(g, alive) >= 2);
  }
}

TEST_CASE("certificates that do not separate are rejected") {
  const Multigraph p = named::prism();
  CutCertificate bogus{CutKind::Edge, {3, 4}, {0, 1, 2}, {3, 4, 5}};
  CHECK_FALSE(validate_certificate(p, bogus));
  CutCertificate rungs{CutKind::CyclicEdge, {3, 4, 5}, {0, 1, 2}, {3, 4, 5}};
  CHECK(validate_certificate(p, rungs));
}
