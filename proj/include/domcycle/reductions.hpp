#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domcycle/constructions.hpp"
#include "domcycle/multigraph.hpp"
#include "domcycle/transitions.hpp"

namespace domcycle {

// ---- cycles of the split graph <-> T-trails of the host ----

/// Drops the matching edges of a cycle of split(h,t).g that dominates the
/// matching and reads the rest as a T-trail of `h`. A vertex whose e(v) lies
/// on the cycle is passed once through e(v); a vertex with both v' and v''
/// on the cycle but e(v) off it becomes 4-valent.
/// Throws NotACycle, NotDominating.
TTrail trail_from_split_cycle(const Multigraph& h, const TransitionSystem& t, const SplitResult& sr, const ClosedTrail& c);

/// Inverse direction: each visit of the trail enters split vertex
/// 2v + side(in) and leaves from 2v + side(out); e(v) is inserted when the
/// two differ. Throws InvalidTTrail.
ClosedTrail split_cycle_from_trail(const Multigraph& h, const TransitionSystem& t, const SplitResult& sr, const ClosedTrail& tt);

// ---- line graph route: T-trail of L(G) -> dominating cycle of G ----

/// Removes one 4-valent vertex w of a T-trail of L(G) under the canonical
/// system: the two trail edges of t_x at w are replaced by the third edge of
/// t_x, where x is the lower endpoint in G of the edge w.
/// Throws NoFourValentVertex, InvalidTTrail, PreconditionViolated (no
/// canonical system).
TTrail reduce_t_trail_step(const LineGraphResult& lgr, const ClosedTrail& c);

/// Reads a Hamiltonian cycle of L(G) as a closed walk of G (consecutive
/// line-graph vertices share the G-vertex whose triangle holds the joining
/// edge) and collapses repeats. For cubic G the result is a dominating cycle.
/// Throws PreconditionViolated (G not cubic), NotHamiltonian.
ClosedTrail line_ham_to_dominating_cycle(const Multigraph& g, const LineGraphResult& lgr, const ClosedTrail& hc);

/// Converse direction for cubic G: follows a dominating cycle through L(G).
/// At each cycle vertex x the walk crosses t_x through the third edge at x.
/// A chord is visited from both ends and becomes 4-valent, so the result has
/// one 4-valent vertex per chord of the cycle.
/// Throws PreconditionViolated (G not cubic), NotACycle, NotDominating.
TTrail line_t_trail_from_dominating_cycle(const Multigraph& g, const LineGraphResult& lgr, const ClosedTrail& dc);

// ---- triangle contraction route: dominating cycle of H' -> split graph ----

/// Pulls a dominating cycle of H' = cm.image_graph back into sr.g. At every
/// contracted-triangle vertex on the cycle the two boundary edges land on
/// different triangle corners, which are joined through the third corner.
/// Throws NotDominatingInImage.
ClosedTrail lift_dominating_cycle(const SplitResult& sr, const ContractionMap& cm, const ClosedTrail& c_prime);

/// |E0 ∩ M| + |E0| is even. Requires cubic G, E0 a matching whose removal
/// leaves exactly two components with every E0 edge crossing, and M perfect;
/// throws PreconditionViolated otherwise.
bool check_parity_lemma(const Multigraph& g, std::span<const EdgeId> e0, const Matching& m);

struct LemmaReport {
  bool holds = true;
  std::vector<std::string> violations;
  int split_vertices = 0;
  int split_edge_connectivity = 0;
  int cyclic_three_cuts = 0;
  int triangles = 0;
  int h_prime_vertices = 0;
  /// nullopt when H' has no two disjoint cycles.
  std::optional<int> h_prime_lambda_c;
  /// "K4" / "K3,3" when H' is one of the exceptional graphs.
  std::string h_prime_exception;
};

/// Checks that split(h,t).g is 3-edge connected and that every cyclic 3-edge
/// cut (by exhaustive 3-subset enumeration) leaves two components, one of
/// them a triangle. `host_checked` skips the 4-regular/4-connected test.
LemmaReport verify_lemma_l2(const Multigraph& h, const TransitionSystem& t, bool host_checked = false);

/// Checks that H' is K4 or K3,3, or has two disjoint cycles and λ_c(H') >= 4.
LemmaReport verify_lemma_lll(const Multigraph& h, const TransitionSystem& t, bool host_checked = false);

/// Throws PreconditionViolated unless h is 4-regular and 4-connected.
void require_four_regular_four_connected(const Multigraph& h);

// ---- end-to-end pipelines ----

struct PipelineStage {
  std::string name;
  int vertices = 0;
  int edges = 0;
  std::optional<ClosedTrail> witness;
  std::string note;
};

struct PipelineTrace {
  std::vector<PipelineStage> stages;
  /// 4-valent vertex counts along the reduction, ending in 0.
  std::vector<int> four_valent_counts;
  std::optional<ClosedTrail> result;
  bool ok = false;
  std::string failure;
};

/// line graph -> canonical T -> T-trail -> reduce to a Hamiltonian cycle ->
/// dominating cycle of G. Requires G cubic, simple and connected.
PipelineTrace run_line_graph_pipeline(const Multigraph& g);

/// split -> lemma checks -> H' -> dominating cycle of H' -> lift -> T-trail
/// of H. Requires H 4-regular and 4-connected.
PipelineTrace run_triangle_contraction_pipeline(const Multigraph& h, const TransitionSystem& t, bool host_checked = false);

}  // namespace domcycle
