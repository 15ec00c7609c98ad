#pragma once

#include <optional>
#include <vector>

#include "domcycle/multigraph.hpp"

namespace domcycle {

inline constexpr int kMaxIsomorphismVertices = 16;

struct IsomorphismResult {
  bool isomorphic = false;
  /// mapping[v] = image in the second graph of vertex v of the first.
  std::optional<std::vector<VertexId>> mapping;
};

/// Exact test by colour refinement followed by backtracking; edge
/// multiplicities must match. Throws TooLarge above kMaxIsomorphismVertices.
IsomorphismResult are_isomorphic(const Multigraph& a, const Multigraph& b);

/// True when `mapping` is a bijection carrying every edge multiplicity of
/// `a` onto `b`.
bool is_isomorphism(const Multigraph& a, const Multigraph& b, const std::vector<VertexId>& mapping);

}  // namespace domcycle
