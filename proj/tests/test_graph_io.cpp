#include <doctest.h>

#include <filesystem>

#include "domcycle/errors.hpp"
#include "domcycle/graph_io.hpp"
#include "domcycle/isomorphism.hpp"
#include "domcycle/named_graphs.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace domcycle;

TEST_CASE("graph6 known strings") {
  const Multigraph k4 = read_graph6("C~");
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4 == named::complete(4));
  CHECK(write_graph6(named::complete(4)) == "C~");
  CHECK(write_graph6(named::complete(5)) == "D~{");
  CHECK(read_graph6(">>graph6<<C~") == k4);
  CHECK(read_graph6("@").vertex_count() == 1);
  CHECK(read_graph6("?").vertex_count() == 0);

  const Multigraph p = read_graph6("IheA@GUAo");
  CHECK(p.vertex_count() == 10);
  CHECK(are_isomorphic(p, named::petersen()).isomorphic);
}

TEST_CASE("graph6 round trips in column order") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const Multigraph g = graph6_normal_form(oracle::random_connected(2 + i % 12, 0.4, rng));
    CHECK(read_graph6(write_graph6(g)) == g);
  }
  const Multigraph big = graph6_normal_form(named::cycle(70));  // long header form
  CHECK(read_graph6(write_graph6(big)) == big);
}

TEST_CASE("graph6 errors") {
  CHECK(code_of([] { read_graph6("C"); }) == ErrorCode::MalformedGraph6);
  CHECK(code_of([] { read_graph6("C~~"); }) == ErrorCode::MalformedGraph6);
  CHECK(code_of([] { read_graph6("C\x7f"); }) == ErrorCode::MalformedGraph6);
  CHECK(code_of([] { read_graph6("BA"); }) == ErrorCode::MalformedGraph6);  // padding bit set
  CHECK(code_of([] { write_graph6(build_multigraph(2, {{0, 1}, {0, 1}})); }) == ErrorCode::MultiEdgeInGraph6);
}

TEST_CASE(".mg text is bit-exact") {
  const Multigraph g = build_multigraph(3, {{0, 1}, {1, 2}, {1, 0}});
  CHECK(write_mg(g) == "3 3\n0 1\n1 2\n1 0\n");
  CHECK(read_mg(write_mg(g)) == g);
  CHECK(code_of([] { read_mg("2 1\n0 0\n"); }) == ErrorCode::LoopEdge);
  CHECK(code_of([] { read_mg("2 2\n0 1\n"); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { read_mg("x"); }) == ErrorCode::MalformedInput);
}

TEST_CASE("pairing codes, trails and edge id files") {
  CHECK(read_pairing_codes("0\n2\n1\n") == std::vector<int>{0, 2, 1});
  CHECK(write_pairing_codes({1, 0}) == "1\n0\n");
  CHECK(code_of([] { read_pairing_codes("3\n"); }) == ErrorCode::MalformedInput);

  const ClosedTrail t{{Dart{0, 0}, Dart{2, 1}, Dart{1, 0}}};
  CHECK(write_trail(t) == "0,0\n2,1\n1,0\n");
  CHECK(read_trail(write_trail(t)) == t);
  CHECK(code_of([] { read_trail("0,2\n"); }) == ErrorCode::MalformedInput);

  const std::vector<EdgeId> ids{5, 6, 7};
  CHECK(read_edge_ids(write_edge_ids(ids)) == ids);
}

TEST_CASE("load_graph accepts files and literal graph6") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string mg = (dir / "domcycle_io_test.mg").string();
  const std::string g6 = (dir / "domcycle_io_test.g6").string();
  write_file(mg, write_mg(named::prism()));
  write_file(g6, "D~{\n");
  CHECK(load_graph(mg) == named::prism());
  CHECK(load_graph(g6) == named::complete(5));
  CHECK(load_graph("C~") == named::complete(4));
  std::filesystem::remove(mg);
  std::filesystem::remove(g6);
}
