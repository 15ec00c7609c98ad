#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "domcycle/multigraph.hpp"
#include "domcycle/transitions.hpp"

namespace domcycle {

struct SearchOutcome {
  bool found = false;
  std::optional<ClosedTrail> witness;
  std::uint64_t nodes_expanded = 0;
  std::chrono::duration<double> elapsed{};
};

/// Exhaustive backtracking from vertex 0, darts in ascending id order. The
/// witness is the first Hamiltonian cycle in that order.
SearchOutcome find_hamiltonian_cycle(const Multigraph& g);

/// Cycle containing an endvertex of every edge.
SearchOutcome find_dominating_cycle(const Multigraph& g);

/// Shortest dominating cycle (exhaustive with a length bound).
SearchOutcome find_shortest_dominating_cycle(const Multigraph& g);

/// Cycle meeting every edge of `m`. Throws NotAMatching.
SearchOutcome find_cycle_dominating_matching(const Multigraph& g, const Matching& m);

/// Cycle meeting every listed edge. Cycles are enumerated by their lowest
/// vertex; a partial path is dropped as soon as some undominated edge has no
/// endvertex left that the path could still reach.
SearchOutcome find_cycle_dominating_edges(const Multigraph& g, std::span<const EdgeId> required, bool shortest = false);

/// Spanning closed trail of the 4-regular `h` meeting every vertex in 2 or 4
/// edges and following both transitions at 4-valent vertices. Runs on `h`
/// itself, independently of the split construction.
/// Throws NotFourRegular or InvalidTransitionSystem.
SearchOutcome find_t_trail(const Multigraph& h, const TransitionSystem& t);

}  // namespace domcycle
