#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domcycle/multigraph.hpp"

namespace domcycle {

using DartPair = std::array<Dart, 2>;

/// At each vertex of a 4-regular host, the four darts split into two
/// transitions. Stored explicitly so that malformed systems can still be
/// represented and rejected by validate_transition_system.
struct TransitionSystem {
  std::vector<std::array<DartPair, 2>> per_vertex;

  friend bool operator==(const TransitionSystem&, const TransitionSystem&) = default;
};

/// Pairing code c at v: the lowest dart at v is paired with the (c+2)-th
/// lowest; the remaining two darts form the second transition. The pair
/// holding the lowest dart is transition 0.
TransitionSystem transition_system_from_codes(const Multigraph& h, std::span<const int> codes);
/// Inverse of the above for valid systems.
std::vector<int> pairing_codes(const Multigraph& h, const TransitionSystem& t);

/// Throws NotFourRegular when `h` is not 4-regular.
bool validate_transition_system(const Multigraph& h, const TransitionSystem& t);
/// Throws NotFourRegular or InvalidTransitionSystem.
void require_valid_transition_system(const Multigraph& h, const TransitionSystem& t);

/// Per-dart view of a valid system, for tight search loops.
class TransitionLookup {
 public:
  TransitionLookup(const Multigraph& h, const TransitionSystem& t);

  /// 0 or 1: which transition at anchor(d) holds d.
  int side(Dart d) const { return side_[static_cast<std::size_t>(d.index())]; }
  Dart partner(Dart d) const { return partner_[static_cast<std::size_t>(d.index())]; }
  bool paired(Dart a, Dart b) const { return partner(a) == b; }

 private:
  std::vector<std::uint8_t> side_;
  std::vector<Dart> partner_;
};

inline constexpr int kMaxEnumeratedTransitionVertices = 12;

/// 3^n for a 4-regular host. Throws TooLarge above 40 vertices.
std::uint64_t transition_system_count(const Multigraph& h);
/// The index-th system in enumeration order (vertex 0 is the most
/// significant base-3 digit).
TransitionSystem transition_system_at(const Multigraph& h, std::uint64_t index);

/// Streams all 3^n systems in order. Throws NotFourRegular, or TooLarge when
/// n > kMaxEnumeratedTransitionVertices.
class TransitionSystemEnumerator {
 public:
  explicit TransitionSystemEnumerator(const Multigraph& h);
  TransitionSystemEnumerator(Multigraph&&) = delete;

  std::optional<TransitionSystem> next();

 private:
  const Multigraph* host_;
  std::vector<int> codes_;
  bool done_ = false;
};

std::vector<TransitionSystem> enumerate_transition_systems(const Multigraph& h);

struct TTrailCheck {
  bool ok = false;
  std::optional<VertexId> vertex;  // first violating vertex, when known
  std::string reason;
};

/// Throws TrailNotInGraph when `c` is not a closed trail of `h`.
TTrailCheck is_t_trail(const Multigraph& h, const TransitionSystem& t, const ClosedTrail& c);

/// A closed trail certified to be a T-trail of its host.
class TTrail {
 public:
  /// Throws InvalidTTrail (or TrailNotInGraph) on failure.
  static TTrail validated(const Multigraph& h, const TransitionSystem& t, ClosedTrail trail);

  const ClosedTrail& trail() const { return trail_; }

 private:
  explicit TTrail(ClosedTrail trail) : trail_(std::move(trail)) {}
  ClosedTrail trail_;
};

/// Number of trail darts anchored at each vertex.
std::vector<int> trail_valency(const Multigraph& h, const ClosedTrail& c);
std::vector<VertexId> four_valent_vertices(const Multigraph& h, const ClosedTrail& c);

}  // namespace domcycle
