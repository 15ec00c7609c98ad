#include <doctest.h>

#include "domcycle/named_graphs.hpp"
#include "domcycle/transitions.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace domcycle;

TEST_CASE("pairing codes round trip and normalise") {
  const Multigraph k5 = named::complete(5);
  const std::vector<int> codes{0, 1, 2, 1, 0};
  const TransitionSystem t = transition_system_from_codes(k5, codes);
  CHECK(validate_transition_system(k5, t));
  CHECK(pairing_codes(k5, t) == codes);

  // code c pairs the lowest dart with the (c+2)-th lowest
  const auto darts = k5.darts_at(1);
  CHECK(t.per_vertex[1][0][0] == darts[0]);
  CHECK(t.per_vertex[1][0][1] == darts[2]);
  const TransitionLookup lookup(k5, t);
  CHECK(lookup.side(darts[0]) == 0);
  CHECK(lookup.side(darts[1]) == 1);
  CHECK(lookup.partner(darts[1]) == darts[3]);
  CHECK(lookup.paired(darts[3], darts[1]));
}

TEST_CASE("malformed systems are rejected") {
  const Multigraph k5 = named::complete(5);
  TransitionSystem t = transition_system_from_codes(k5, std::vector<int>(5, 0));
  std::swap(t.per_vertex[2][0][0], t.per_vertex[3][0][0]);  // darts moved to the wrong vertex
  CHECK_FALSE(validate_transition_system(k5, t));
  CHECK(code_of([&] { require_valid_transition_system(k5, t); }) == ErrorCode::InvalidTransitionSystem);

  TransitionSystem dup = transition_system_from_codes(k5, std::vector<int>(5, 1));
  dup.per_vertex[0][1][0] = dup.per_vertex[0][0][0];
  CHECK_FALSE(validate_transition_system(k5, dup));

  TransitionSystem short_t;
  CHECK_FALSE(validate_transition_system(k5, short_t));
  CHECK(code_of([] { validate_transition_system(named::petersen(), TransitionSystem{}); }) == ErrorCode::NotFourRegular);
  CHECK(code_of([] { transition_system_from_codes(named::complete(5), std::vector<int>{0, 1, 3, 0, 0}); }) ==
        ErrorCode::InvalidTransitionSystem);
}

TEST_CASE("enumeration covers all 3^n systems exactly once") {
  const Multigraph k5 = named::complete(5);
  const auto all = enumerate_transition_systems(k5);
  CHECK(all.size() == 243);
  CHECK(transition_system_count(k5) == 243);
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(validate_transition_system(k5, all[i]));
    seen.insert(pairing_codes(k5, all[i]));
    CHECK(all[i] == transition_system_at(k5, i));
  }
  CHECK(seen.size() == 243);
  CHECK(pairing_codes(k5, transition_system_at(k5, 1)) == std::vector<int>{0, 0, 0, 0, 1});

  const Multigraph oct = named::octahedron();
  TransitionSystemEnumerator it(oct);
  std::size_t count = 0;
  while (it.next()) ++count;
  CHECK(count == 729);
  CHECK(code_of([] { const Multigraph big = named::antiprism(21);
    TransitionSystemEnumerator it(big); }) == ErrorCode::TooLarge);
}

TEST_CASE("T-trail validation") {
  const Multigraph k5 = named::complete(5);  // edge ids: 01 02 12 03 13 23 04 14 24 34
  const TransitionSystem t = transition_system_from_codes(k5, std::vector<int>(5, 0));
  const std::vector<VertexId> order{0, 1, 2, 3, 4};
  const ClosedTrail ham = trail_from_vertex_cycle(k5, order);
  CHECK(is_t_trail(k5, t, ham).ok);
  CHECK(four_valent_vertices(k5, ham).empty());

  // a triangle is not spanning
  const ClosedTrail tri = trail_from_vertex_cycle(k5, std::vector<VertexId>{0, 1, 2});
  const TTrailCheck partial = is_t_trail(k5, t, tri);
  CHECK_FALSE(partial.ok);
  CHECK(partial.vertex == 3);
  CHECK(code_of([&] { TTrail::validated(k5, t, tri); }) == ErrorCode::InvalidTTrail);

  // Euler tours are T-trails only when they follow T everywhere
  const ClosedTrail euler = trail_from_vertex_cycle(k5, std::vector<VertexId>{0, 1, 2, 3, 4, 1, 3, 0, 2, 4});
  REQUIRE(is_closed_trail(k5, euler));
  CHECK(four_valent_vertices(k5, euler).size() == 5);
  int followed = 0;
  for (const TransitionSystem& s : enumerate_transition_systems(k5)) followed += is_t_trail(k5, s, euler).ok;
  CHECK(followed == 1);
}
