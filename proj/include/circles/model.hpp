#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "circles/ego.hpp"
#include "circles/profiles.hpp"

namespace circles {

struct Circle {
  std::vector<int> members;  // sorted alter indices
  double tau = 0.0;

  bool contains(int y) const;
  int size() const { return static_cast<int>(members.size()); }
  // Circles need two members before they say anything about pair closeness.
  // Singleton circles are seeds: they carry a threshold but stay out of the
  // beta sums and out of lambda until they grow.
  bool is_active() const { return members.size() >= 2; }
  void add(int y);
  void remove(int y);
};

// One ego network's working state: the pairwise distance/similarity caches,
// the edge matrix, the current circles and the cached likelihood. Candidate
// states are plain copies.
struct CircleState {
  int n = 0;
  std::vector<double> dists;         // n*n Euclidean distances
  std::vector<double> sims;          // n*n clamped reciprocal distances
  std::vector<std::uint8_t> edges;   // n*n adjacency (0/1)
  std::vector<Circle> circles;
  double lambda = 0.0;               // max circle threshold, 0 when empty
  double log_likelihood = 0.0;       // cached value of the last evaluation

  static CircleState from_ego(const EgoNetwork& net,
                              const std::vector<std::vector<double>>& profiles);

  double dist(int x, int y) const { return dists[static_cast<std::size_t>(x) * n + y]; }
  double sim(int x, int y) const { return sims[static_cast<std::size_t>(x) * n + y]; }
  bool has_edge(int x, int y) const { return edges[static_cast<std::size_t>(x) * n + y] != 0; }
  int pair_count() const { return n * (n - 1) / 2; }

  // Largest threshold over the active circles; 0 when there are none.
  double max_threshold() const;
};

// Reciprocal of the mean distance from y to the other members. A circle whose
// only member is y itself has no such distances and maps to kSimCap.
double sim_to_circle(const CircleState& state, const Circle& circle, int y);

// (beta1, beta2): summed reciprocal margins over active circles containing
// both of x,y and over all remaining active circles. Every term is positive
// because lambda >= tau_j and sim > 0.
std::pair<double, double> beta_components(const CircleState& state, int x, int y);

// log of the closeness estimator: beta1^2 - beta2^2.
double phi(const CircleState& state, int x, int y);

// logistic(phi), clamped into the open interval (0,1) so extreme phi cannot
// round to an exact 0 or 1.
double edge_probability(double phi_value);

// Complement taken literally as 1 - p so the two probabilities always sum to
// 1 exactly.
double non_edge_probability(double phi_value);

// log(1 + exp(x)) without overflow.
double softplus(double x);

// Fresh evaluation of the log-likelihood of the ego graph under the current
// circles: sum of phi over edges minus softplus(phi) over all distinct pairs.
double log_likelihood(const CircleState& state);

}  // namespace circles
