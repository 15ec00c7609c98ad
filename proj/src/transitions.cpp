#include "domcycle/transitions.hpp"

#include <algorithm>

#include "domcycle/errors.hpp"

namespace domcycle {
namespace {

void require_four_regular(const Multigraph& h) {
  if (!is_k_regular(h, 4)) throw GraphError(ErrorCode::NotFourRegular, "host graph is not 4-regular");
}

std::array<DartPair, 2> pairing_for_code(std::span<const Dart> darts, int code) {
  const int mate = code + 1;
  std::array<Dart, 2> rest{};
  int k = 0;
  for (int i = 1; i < 4; ++i) {
    if (i != mate) rest[static_cast<std::size_t>(k++)] = darts[static_cast<std::size_t>(i)];
  }
  return {DartPair{darts[0], darts[static_cast<std::size_t>(mate)]}, DartPair{rest[0], rest[1]}};
}

}  // namespace

TransitionSystem transition_system_from_codes(const Multigraph& h, std::span<const int> codes) {
  require_four_regular(h);
  if (static_cast<int>(codes.size()) != h.vertex_count()) {
    throw GraphError(ErrorCode::InvalidTransitionSystem,
                     "expected " + std::to_string(h.vertex_count()) + " pairing codes, got " + std::to_string(codes.size()));
  }
  TransitionSystem t;
  t.per_vertex.reserve(codes.size());
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    int code = codes[static_cast<std::size_t>(v)];
    if (code < 0 || code > 2) throw GraphError(ErrorCode::InvalidTransitionSystem, "pairing code out of range");
    t.per_vertex.push_back(pairing_for_code(h.darts_at(v), code));
  }
  return t;
}

std::vector<int> pairing_codes(const Multigraph& h, const TransitionSystem& t) {
  require_valid_transition_system(h, t);
  TransitionLookup lookup(h, t);
  std::vector<int> codes;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    auto darts = h.darts_at(v);
    Dart mate = lookup.partner(darts[0]);
    codes.push_back(static_cast<int>(std::find(darts.begin(), darts.end(), mate) - darts.begin()) - 1);
  }
  return codes;
}

bool validate_transition_system(const Multigraph& h, const TransitionSystem& t) {
  require_four_regular(h);
  if (static_cast<int>(t.per_vertex.size()) != h.vertex_count()) return false;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    auto darts = h.darts_at(v);
    std::vector<Dart> seen;
    for (const DartPair& pair : t.per_vertex[static_cast<std::size_t>(v)]) {
      for (Dart d : pair) {
        if (std::find(darts.begin(), darts.end(), d) == darts.end()) return false;
        seen.push_back(d);
      }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

void require_valid_transition_system(const Multigraph& h, const TransitionSystem& t) {
  if (!validate_transition_system(h, t)) {
    throw GraphError(ErrorCode::InvalidTransitionSystem, "pairings do not partition the darts at every vertex");
  }
}

TransitionLookup::TransitionLookup(const Multigraph& h, const TransitionSystem& t)
    : side_(static_cast<std::size_t>(2 * h.edge_count()), 0), partner_(static_cast<std::size_t>(2 * h.edge_count())) {
  for (const auto& at_vertex : t.per_vertex) {
    for (std::uint8_t s = 0; s < 2; ++s) {
      const DartPair& pair = at_vertex[s];
      side_[static_cast<std::size_t>(pair[0].index())] = s;
      side_[static_cast<std::size_t>(pair[1].index())] = s;
      partner_[static_cast<std::size_t>(pair[0].index())] = pair[1];
      partner_[static_cast<std::size_t>(pair[1].index())] = pair[0];
    }
  }
}

std::uint64_t transition_system_count(const Multigraph& h) {
  require_four_regular(h);
  if (h.vertex_count() > 40) throw GraphError(ErrorCode::TooLarge, "3^n overflows 64 bits");
  std::uint64_t count = 1;
  for (int i = 0; i < h.vertex_count(); ++i) count *= 3;
  return count;
}

TransitionSystem transition_system_at(const Multigraph& h, std::uint64_t index) {
  const int n = h.vertex_count();
  std::vector<int> codes(static_cast<std::size_t>(n), 0);
  for (int v = n - 1; v >= 0; --v) {
    codes[static_cast<std::size_t>(v)] = static_cast<int>(index % 3);
    index /= 3;
  }
  return transition_system_from_codes(h, codes);
}

TransitionSystemEnumerator::TransitionSystemEnumerator(const Multigraph& h) : host_(&h) {
  require_four_regular(h);
  if (h.vertex_count() > kMaxEnumeratedTransitionVertices) {
    throw GraphError(ErrorCode::TooLarge, "3^" + std::to_string(h.vertex_count()) + " transition systems");
  }
  codes_.assign(static_cast<std::size_t>(h.vertex_count()), 0);
}

std::optional<TransitionSystem> TransitionSystemEnumerator::next() {
  if (done_) return std::nullopt;
  TransitionSystem current = transition_system_from_codes(*host_, codes_);
  int v = static_cast<int>(codes_.size()) - 1;
  while (v >= 0 && codes_[static_cast<std::size_t>(v)] == 2) codes_[static_cast<std::size_t>(v--)] = 0;
  if (v < 0) {
    done_ = true;
  } else {
    ++codes_[static_cast<std::size_t>(v)];
  }
  return current;
}

std::vector<TransitionSystem> enumerate_transition_systems(const Multigraph& h) {
  TransitionSystemEnumerator it(h);
  std::vector<TransitionSystem> out;
  while (auto t = it.next()) out.push_back(std::move(*t));
  return out;
}

std::vector<int> trail_valency(const Multigraph& h, const ClosedTrail& c) {
  std::vector<int> valency(static_cast<std::size_t>(h.vertex_count()), 0);
  for (Dart d : c.darts) {
    ++valency[h.anchor(d)];
    ++valency[h.head(d)];
  }
  return valency;
}

std::vector<VertexId> four_valent_vertices(const Multigraph& h, const ClosedTrail& c) {
  auto valency = trail_valency(h, c);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (valency[v] == 4) out.push_back(v);
  }
  return out;
}

TTrailCheck is_t_trail(const Multigraph& h, const TransitionSystem& t, const ClosedTrail& c) {
  validate_closed_trail(h, c);
  require_valid_transition_system(h, t);
  const TransitionLookup lookup(h, t);
  const auto valency = trail_valency(h, c);
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (valency[v] == 0) return TTrailCheck{false, v, "vertex not visited; trail is not spanning"};
    if (valency[v] != 2 && valency[v] != 4) return TTrailCheck{false, v, "trail meets vertex in " + std::to_string(valency[v]) + " edges"};
  }
  const std::size_t len = c.darts.size();
  for (std::size_t i = 0; i < len; ++i) {
    Dart out = c.darts[i];
    Dart in = c.darts[(i + len - 1) % len].opposite();
    VertexId v = h.anchor(out);
    if (valency[v] == 4 && !lookup.paired(in, out)) {
      return TTrailCheck{false, v, "4-valent vertex passed without following a transition"};
    }
  }
  return TTrailCheck{true, std::nullopt, {}};
}

TTrail TTrail::validated(const Multigraph& h, const TransitionSystem& t, ClosedTrail trail) {
  TTrailCheck check = is_t_trail(h, t, trail);
  if (!check.ok) {
    throw GraphError(ErrorCode::InvalidTTrail,
                     check.reason + (check.vertex ? " (vertex " + std::to_string(*check.vertex) + ")" : std::string{}));
  }
  return TTrail(std::move(trail));
}

}  // namespace domcycle
