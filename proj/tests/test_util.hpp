#pragma once

#include <doctest.h>

#include <functional>

#include "domcycle/errors.hpp"

/// Runs `fn` and returns the code of the GraphError it throws.
inline domcycle::ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const domcycle::GraphError& e) {
    return e.code();
  }
  FAIL("expected a GraphError");
  return domcycle::ErrorCode::MalformedInput;
}

#include <array>
#include <vector>

#include "domcycle/multigraph.hpp"
#include "domcycle/transitions.hpp"

/// Transition system on a simple 4-regular host where transition 0 at v
/// holds the edges to the two listed neighbours.
inline domcycle::TransitionSystem system_from_neighbour_pairs(const domcycle::Multigraph& h,
                                                              const std::vector<std::array<domcycle::VertexId, 2>>& pairs) {
  domcycle::TransitionSystem t;
  for (domcycle::VertexId v = 0; v < h.vertex_count(); ++v) {
    std::array<domcycle::DartPair, 2> at_v{};
    int filled[2] = {0, 0};
    for (domcycle::Dart d : h.darts_at(v)) {
      const domcycle::VertexId w = h.head(d);
      const int side = (w == pairs[v][0] || w == pairs[v][1]) ? 0 : 1;
      at_v[side][filled[side]++] = d;
    }
    t.per_vertex.push_back(at_v);
  }
  return t;
}

/// T△ on K5: the two edges of triangle {1,2,3} at each of its vertices form
/// a transition, and no other triangle of the split graph survives.
inline domcycle::TransitionSystem k5_single_triangle_system(const domcycle::Multigraph& k5) {
  return system_from_neighbour_pairs(k5, {{{1, 2}}, {{2, 3}}, {{1, 3}}, {{1, 2}}, {{0, 1}}});
}
