#include "domcycle/search.hpp"

#include <algorithm>

#include "domcycle/errors.hpp"

namespace domcycle {
namespace {

using Clock = std::chrono::steady_clock;

class HamiltonianSearch {
 public:
  explicit HamiltonianSearch(const Multigraph& g)
      : g_(g), on_path_(static_cast<std::size_t>(g.vertex_count()), 0), used_(static_cast<std::size_t>(g.edge_count()), 0) {}

  SearchOutcome run() {
    SearchOutcome out;
    const int n = g_.vertex_count();
    if (n >= 2) {
      on_path_[0] = 1;
      path_len_ = 1;
      if (extend(0)) {
        out.found = true;
        out.witness = ClosedTrail{darts_};
      }
    }
    out.nodes_expanded = nodes_;
    return out;
  }

 private:
  // Every vertex off the path needs two usable neighbours (off-path, or a
  // path end).
  bool degree_feasible(VertexId last) const {
    for (VertexId x = 0; x < g_.vertex_count(); ++x) {
      if (on_path_[x]) continue;
      int usable = 0;
      for (Dart d : g_.darts_at(x)) {
        VertexId y = g_.head(d);
        if (!on_path_[y] || y == last || y == 0) ++usable;
        if (usable >= 2) break;
      }
      if (usable < 2) return false;
    }
    return true;
  }

  bool extend(VertexId last) {
    ++nodes_;
    const int n = g_.vertex_count();
    if (path_len_ == n) {
      for (Dart d : g_.darts_at(last)) {
        if (!used_[d.edge] && g_.head(d) == 0) {
          darts_.push_back(d);
          return true;
        }
      }
      return false;
    }
    if (!degree_feasible(last)) return false;
    for (Dart d : g_.darts_at(last)) {
      VertexId w = g_.head(d);
      if (on_path_[w] || used_[d.edge]) continue;
      on_path_[w] = 1;
      used_[d.edge] = 1;
      darts_.push_back(d);
      ++path_len_;
      if (extend(w)) return true;
      --path_len_;
      darts_.pop_back();
      used_[d.edge] = 0;
      on_path_[w] = 0;
    }
    return false;
  }

  const Multigraph& g_;
  std::vector<char> on_path_;
  std::vector<char> used_;
  std::vector<Dart> darts_;
  int path_len_ = 0;
  std::uint64_t nodes_ = 0;
};

class DominatingSearch {
 public:
  DominatingSearch(const Multigraph& g, std::span<const EdgeId> required, bool shortest)
      : g_(g),
        required_(required.begin(), required.end()),
        shortest_(shortest),
        on_path_(static_cast<std::size_t>(g.vertex_count()), 0),
        used_(static_cast<std::size_t>(g.edge_count()), 0),
        hits_(required_.size(), 0),
        incident_required_(static_cast<std::size_t>(g.vertex_count())),
        reach_(static_cast<std::size_t>(g.vertex_count()), 0) {
    for (std::size_t i = 0; i < required_.size(); ++i) {
      const Edge& e = g.edge(required_[i]);
      incident_required_[e.u].push_back(static_cast<int>(i));
      incident_required_[e.v].push_back(static_cast<int>(i));
    }
  }

  SearchOutcome run() {
    SearchOutcome out;
    const int n = g_.vertex_count();
    for (VertexId s = 0; s < n; ++s) {
      // vertices below s never lie on a cycle whose lowest vertex is s
      const bool hopeless = std::any_of(required_.begin(), required_.end(), [&](EdgeId e) {
        return g_.edge(e).u < s && g_.edge(e).v < s;
      });
      if (hopeless) break;
      start_ = s;
      undominated_ = static_cast<int>(required_.size());
      path_len_ = 0;
      push_vertex(s);
      const bool stop = extend(s);
      pop_vertex(s);
      if (stop) break;
    }
    out.found = best_.has_value();
    out.witness = best_;
    out.nodes_expanded = nodes_;
    return out;
  }

 private:
  void push_vertex(VertexId v) {
    on_path_[v] = 1;
    ++path_len_;
    for (int i : incident_required_[v]) {
      if (hits_[static_cast<std::size_t>(i)]++ == 0) --undominated_;
    }
  }

  void pop_vertex(VertexId v) {
    on_path_[v] = 0;
    --path_len_;
    for (int i : incident_required_[v]) {
      if (--hits_[static_cast<std::size_t>(i)] == 0) ++undominated_;
    }
  }

  bool addable(VertexId v) const { return v > start_ && !on_path_[v]; }

  // Vertices the open path can still absorb: reachable from `last` through
  // addable vertices. The path must also be able to return to the start.
  bool feasible(VertexId last) {
    if (undominated_ == 0) return true;
    std::fill(reach_.begin(), reach_.end(), 0);
    queue_.assign(1, last);
    bool can_close = false;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      VertexId v = queue_[head];
      for (Dart d : g_.darts_at(v)) {
        VertexId w = g_.head(d);
        if (w == start_ && v != start_) can_close = true;
        if (!addable(w) || reach_[w]) continue;
        reach_[w] = 1;
        queue_.push_back(w);
      }
    }
    if (!can_close) return false;
    for (std::size_t i = 0; i < required_.size(); ++i) {
      if (hits_[i]) continue;
      const Edge& e = g_.edge(required_[i]);
      if (!reach_[e.u] && !reach_[e.v]) return false;
    }
    return true;
  }

  bool try_close(VertexId last) {
    if (undominated_ != 0 || last == start_) return false;
    for (Dart d : g_.darts_at(last)) {
      if (used_[d.edge] || g_.head(d) != start_) continue;
      darts_.push_back(d);
      best_ = ClosedTrail{darts_};
      darts_.pop_back();
      return true;
    }
    return false;
  }

  // Returns true to stop the whole search.
  bool extend(VertexId last) {
    ++nodes_;
    if (shortest_ && best_ && path_len_ >= static_cast<int>(best_->length())) return false;
    if (try_close(last) && !shortest_) return true;
    if (shortest_ && best_ && path_len_ + 1 >= static_cast<int>(best_->length())) return false;
    if (!feasible(last)) return false;
    for (Dart d : g_.darts_at(last)) {
      VertexId w = g_.head(d);
      if (!addable(w) || used_[d.edge]) continue;
      used_[d.edge] = 1;
      darts_.push_back(d);
      push_vertex(w);
      const bool stop = extend(w);
      pop_vertex(w);
      darts_.pop_back();
      used_[d.edge] = 0;
      if (stop) return true;
    }
    return false;
  }

  const Multigraph& g_;
  std::vector<EdgeId> required_;
  bool shortest_;
  std::vector<char> on_path_;
  std::vector<char> used_;
  std::vector<int> hits_;
  std::vector<std::vector<int>> incident_required_;
  std::vector<char> reach_;
  std::vector<VertexId> queue_;
  std::vector<Dart> darts_;
  std::optional<ClosedTrail> best_;
  VertexId start_ = 0;
  int undominated_ = 0;
  int path_len_ = 0;
  std::uint64_t nodes_ = 0;
};

class TTrailSearch {
 public:
  TTrailSearch(const Multigraph& h, const TransitionSystem& t)
      : h_(h),
        lookup_(h, t),
        state_(static_cast<std::size_t>(h.vertex_count()), kUnvisited),
        used_(static_cast<std::size_t>(h.edge_count()), 0),
        reach_(static_cast<std::size_t>(h.vertex_count()), 0) {}

  SearchOutcome run() {
    SearchOutcome out;
    if (h_.vertex_count() == 0) return out;
    auto darts = h_.darts_at(0);
    // vertex 0 two-valent: leave along the lower dart of the pair it uses
    start_four_valent_ = false;
    for (std::size_t a = 0; a < darts.size(); ++a) {
      for (std::size_t b = a + 1; b < darts.size(); ++b) {
        closing_dart_ = darts[b];
        if (launch(darts[a])) return finish(out);
      }
    }
    // vertex 0 four-valent: rotate so the wrap-around uses the transition
    // holding the lowest dart, and reverse so the trail leaves along it
    const Dart first = darts[0];
    start_four_valent_ = true;
    closing_dart_ = lookup_.partner(first);
    middle_side_ = 1 - lookup_.side(first);
    middle_pending_ = true;
    if (launch(first)) return finish(out);
    return finish(out);
  }

 private:
  enum : std::uint8_t { kUnvisited, kPendingSide0, kPendingSide1, kDone };

  SearchOutcome& finish(SearchOutcome& out) {
    out.nodes_expanded = nodes_;
    if (found_) {
      out.found = true;
      out.witness = ClosedTrail{darts_};
    }
    return out;
  }

  bool launch(Dart first) {
    state_[0] = kDone;  // vertex 0 is handled by the start flags
    return step(first);
  }

  bool step(Dart out) {
    used_[out.edge] = 1;
    darts_.push_back(out);
    if (arrive(out.opposite())) return true;
    darts_.pop_back();
    used_[out.edge] = 0;
    return false;
  }

  bool all_done() const {
    return std::all_of(state_.begin() + 1, state_.end(), [](std::uint8_t s) { return s == kDone; }) &&
           (!start_four_valent_ || !middle_pending_);
  }

  bool can_enter(VertexId w) const {
    if (w == 0) return true;
    return state_[w] != kDone;
  }

  // Every unfinished vertex (and the start, for closing) must be reachable
  // from `v` along unused edges through enterable vertices.
  bool feasible(VertexId v) {
    std::fill(reach_.begin(), reach_.end(), 0);
    reach_[v] = 1;
    queue_.assign(1, v);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      VertexId x = queue_[head];
      if (x == 0 && x != v && !(start_four_valent_ && middle_pending_)) continue;  // 0 is only a target
      for (Dart d : h_.darts_at(x)) {
        if (used_[d.edge]) continue;
        VertexId w = h_.head(d);
        if (reach_[w] || !can_enter(w)) continue;
        reach_[w] = 1;
        queue_.push_back(w);
      }
    }
    if (!reach_[0] || !usable(closing_dart_, v)) return false;
    if (start_four_valent_ && middle_pending_) {
      for (Dart d : h_.darts_at(0)) {
        if (lookup_.side(d) == middle_side_ && !usable(d, v)) return false;
      }
    }
    for (VertexId x = 1; x < h_.vertex_count(); ++x) {
      if (state_[x] == kDone) continue;
      if (!reach_[x] || !has_room(x, v)) return false;
    }
    return true;
  }

  // An unvisited vertex needs two usable darts; a pending one needs both
  // darts of its pending transition. A dart is usable when its edge is free
  // and leads to the current vertex or to one that can still be entered.
  bool usable(Dart d, VertexId current) const {
    if (used_[d.edge]) return false;
    const VertexId w = h_.head(d);
    return w == current || can_enter(w);
  }

  bool has_room(VertexId x, VertexId current) const {
    int free = 0;
    for (Dart d : h_.darts_at(x)) {
      if (usable(d, current)) {
        ++free;
      } else if (state_[x] != kUnvisited && lookup_.side(d) == (state_[x] == kPendingSide0 ? 0 : 1)) {
        return false;
      }
    }
    return free >= 2;
  }

  bool arrive(Dart in) {
    ++nodes_;
    const VertexId v = h_.anchor(in);
    if (v == 0) {
      if (start_four_valent_ && middle_pending_) {
        if (lookup_.side(in) != middle_side_) return false;
        const Dart out = lookup_.partner(in);
        if (used_[out.edge]) return false;
        middle_pending_ = false;
        if (feasible(0) && step(out)) return true;
        middle_pending_ = true;
        return false;
      }
      if (in == closing_dart_ && all_done()) {
        found_ = true;
        return true;
      }
      return false;
    }

    const std::uint8_t before = state_[v];
    if (before == kDone) return false;
    if (before == kPendingSide0 || before == kPendingSide1) {
      const int pending = before == kPendingSide0 ? 0 : 1;
      if (lookup_.side(in) != pending) return false;
      const Dart out = lookup_.partner(in);
      state_[v] = kDone;
      if (!used_[out.edge] && feasible(v) && step(out)) return true;
      state_[v] = before;
      return false;
    }

    // first visit: either v is two-valent (any exit), or four-valent and the
    // exit is forced by the transition holding `in`
    state_[v] = kDone;
    if (feasible(v)) {
      for (Dart out : h_.darts_at(v)) {
        if (out == in || used_[out.edge]) continue;
        if (step(out)) return true;
      }
    }
    state_[v] = lookup_.side(in) == 0 ? kPendingSide1 : kPendingSide0;
    const Dart out = lookup_.partner(in);
    if (!used_[out.edge] && feasible(v) && step(out)) return true;
    state_[v] = kUnvisited;
    return false;
  }

  const Multigraph& h_;
  TransitionLookup lookup_;
  std::vector<std::uint8_t> state_;
  std::vector<char> used_;
  std::vector<char> reach_;
  std::vector<VertexId> queue_;
  std::vector<Dart> darts_;
  bool start_four_valent_ = false;
  bool middle_pending_ = false;
  int middle_side_ = 1;
  Dart closing_dart_{};
  bool found_ = false;
  std::uint64_t nodes_ = 0;
};

template <typename Fn>
SearchOutcome timed(Fn&& fn) {
  const auto begin = Clock::now();
  SearchOutcome out = fn();
  out.elapsed = Clock::now() - begin;
  return out;
}

}  // namespace

SearchOutcome find_hamiltonian_cycle(const Multigraph& g) {
  return timed([&] { return HamiltonianSearch(g).run(); });
}

SearchOutcome find_cycle_dominating_edges(const Multigraph& g, std::span<const EdgeId> required, bool shortest) {
  return timed([&] { return DominatingSearch(g, required, shortest).run(); });
}

namespace {
std::vector<EdgeId> all_edges(const Multigraph& g) {
  std::vector<EdgeId> ids(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) ids[e] = e;
  return ids;
}
}  // namespace

SearchOutcome find_dominating_cycle(const Multigraph& g) { return find_cycle_dominating_edges(g, all_edges(g)); }

SearchOutcome find_shortest_dominating_cycle(const Multigraph& g) {
  return find_cycle_dominating_edges(g, all_edges(g), true);
}

SearchOutcome find_cycle_dominating_matching(const Multigraph& g, const Matching& m) {
  if (!is_matching(g, m)) throw GraphError(ErrorCode::NotAMatching, "edge set is not a matching");
  return find_cycle_dominating_edges(g, m.edges);
}

SearchOutcome find_t_trail(const Multigraph& h, const TransitionSystem& t) {
  require_valid_transition_system(h, t);
  return timed([&] { return TTrailSearch(h, t).run(); });
}

}  // namespace domcycle
