#pragma once

#include <cstdint>
#include <vector>

#include "circles/model.hpp"
#include "circles/rng.hpp"

namespace circles {

struct OptimizerConfig {
  double tau_l = 0.2;
  double tau_init = kSimCap;
  int patience = 0;               // 0 -> number of alters
  long long max_iterations = 0;   // 0 -> 200 * number of alters
  std::uint64_t rng_seed = 0;
  bool record_trace = true;

  int effective_patience(int alters) const {
    return patience > 0 ? patience : alters;
  }
  long long effective_max_iterations(int alters) const {
    return max_iterations > 0 ? max_iterations : 200LL * alters;
  }
};

struct DetectionResult {
  std::vector<Circle> circles;
  double log_likelihood = 0.0;
  long long iterations = 0;
  long long accepted_steps = 0;
  std::vector<double> trace;  // likelihood of the retained state per iteration
};

// One singleton circle per alter at threshold tau_init; caches and the
// initial likelihood filled in.
CircleState init_state(const EgoNetwork& net,
                       const std::vector<std::vector<double>>& profiles,
                       const OptimizerConfig& config);

// ceil((k + s1) / s1) with s1 clamped to at least 1.
int delta_count(int k, int s1);

struct MembershipDeltas {
  int add_count = 0;
  int remove_count = 0;
};

// Sampled add/remove counts for a node that is in `in_circles` circles and
// out of `out_circles`. Draw order: K1 for the add count first (when the
// range is non-degenerate), then K2 for the remove count.
MembershipDeltas membership_deltas(int in_circles, int out_circles,
                                   SplitMix64& rng);

// One unguided sweep: every node, in index order, is added to and removed
// from randomly chosen circles. Membership sets are taken from the input
// state while the mutations accumulate on the copy; circles left empty by
// the sweep are dropped. Thresholds are not updated here.
CircleState perturb(const CircleState& state, SplitMix64& rng);

// tau_j = min over members of sim_to_circle (kSimCap for seed singletons);
// lambda refreshed over the active circles.
void update_thresholds(CircleState& state);

// Drop circles below tau_l; lambda refreshed.
void prune(CircleState& state, double tau_l);

// Seed singletons dissolve once their node belongs to a real circle; they
// are only kept as a home for otherwise uncovered nodes.
void dissolve_absorbed_singletons(CircleState& state);

// Post-mutation cleanup: drop emptied circles, dissolve absorbed seeds,
// refresh thresholds and prune.
void normalize_state(CircleState& state, double tau_l);

// One optimization step visits a single node: its add/remove budget is drawn
// from membership_deltas, then every sampled membership flip is proposed as
// its own candidate (threshold update + prune + fresh likelihood) and kept
// only when the likelihood strictly improves. Returns whether any flip was
// kept. Visiting nodes round-robin makes `patience` rejections equal one
// full fruitless pass per alter.
bool step(CircleState& state, int node, SplitMix64& rng,
          const OptimizerConfig& config);

// Runs steps round-robin until `patience` consecutive rejected visits or the
// iteration cap.
DetectionResult detect(const EgoNetwork& net,
                       const std::vector<std::vector<double>>& profiles,
                       const OptimizerConfig& config);

}  // namespace circles
