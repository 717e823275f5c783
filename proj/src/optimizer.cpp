#include "circles/optimizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace circles {

CircleState init_state(const EgoNetwork& net,
                       const std::vector<std::vector<double>>& profiles,
                       const OptimizerConfig& config) {
  if (net.alter_count() == 0)
    throw std::invalid_argument("init_state: ego network has no alters");
  CircleState s = CircleState::from_ego(net, profiles);
  s.circles.reserve(net.alter_count());
  for (int y = 0; y < net.alter_count(); ++y)
    s.circles.push_back(Circle{{y}, config.tau_init});
  s.lambda = s.max_threshold();
  s.log_likelihood = log_likelihood(s);
  return s;
}

int delta_count(int k, int s1) {
  const int denom = std::max(s1, 1);
  return (k + denom + denom - 1) / denom;
}

MembershipDeltas membership_deltas(int in_circles, int out_circles,
                                   SplitMix64& rng) {
  MembershipDeltas d;
  if (out_circles == 1) {
    d.add_count = delta_count(1, in_circles);
  } else if (out_circles > 1) {
    const int k1 = static_cast<int>(rng.next_in(1, out_circles - 1));
    d.add_count = delta_count(k1, in_circles);
  }
  if (in_circles > 1) {
    const int k2 = static_cast<int>(rng.next_in(1, in_circles - 1));
    d.remove_count = delta_count(k2, in_circles);
  }
  return d;
}

namespace {

void drop_empty_circles(CircleState& state) {
  state.circles.erase(
      std::remove_if(state.circles.begin(), state.circles.end(),
                     [](const Circle& c) { return c.members.empty(); }),
      state.circles.end());
}

}  // namespace

CircleState perturb(const CircleState& state, SplitMix64& rng) {
  CircleState candidate = state;
  const int k = static_cast<int>(state.circles.size());

  std::vector<int> in_list, out_list;
  for (int y = 0; y < state.n; ++y) {
    in_list.clear();
    out_list.clear();
    for (int j = 0; j < k; ++j) {
      if (state.circles[j].contains(y))
        in_list.push_back(j);
      else
        out_list.push_back(j);
    }
    const MembershipDeltas d = membership_deltas(
        static_cast<int>(in_list.size()), static_cast<int>(out_list.size()), rng);
    for (int j : sample_without_replacement(out_list, d.add_count, rng))
      candidate.circles[j].add(y);
    for (int j : sample_without_replacement(in_list, d.remove_count, rng))
      candidate.circles[j].remove(y);
  }

  drop_empty_circles(candidate);
  return candidate;
}

void update_thresholds(CircleState& state) {
  for (auto& c : state.circles) {
    double tau = kSimCap;
    for (int y : c.members) tau = std::min(tau, sim_to_circle(state, c, y));
    c.tau = tau;
  }
  state.lambda = state.max_threshold();
}

void prune(CircleState& state, double tau_l) {
  state.circles.erase(
      std::remove_if(state.circles.begin(), state.circles.end(),
                     [tau_l](const Circle& c) { return c.tau < tau_l; }),
      state.circles.end());
  state.lambda = state.max_threshold();
}

void dissolve_absorbed_singletons(CircleState& state) {
  std::vector<std::uint8_t> covered(state.n, 0);
  for (const auto& c : state.circles)
    if (c.is_active())
      for (int y : c.members) covered[y] = 1;
  state.circles.erase(
      std::remove_if(state.circles.begin(), state.circles.end(),
                     [&](const Circle& c) {
                       return c.size() == 1 && covered[c.members[0]];
                     }),
      state.circles.end());
}

void normalize_state(CircleState& state, double tau_l) {
  drop_empty_circles(state);
  dissolve_absorbed_singletons(state);
  update_thresholds(state);
  prune(state, tau_l);
}

namespace {

// Propose one membership flip; keep it only on strict improvement. The
// target circle is looked up by member set because earlier accepted flips
// may have reindexed the circle list.
bool try_flip(CircleState& state, int node, const std::vector<int>& target,
              bool add, const OptimizerConfig& config) {
  CircleState candidate = state;
  bool found = false;
  for (auto& c : candidate.circles) {
    if (c.members == target) {
      if (add)
        c.add(node);
      else
        c.remove(node);
      found = true;
      break;
    }
  }
  if (!found) return false;
  normalize_state(candidate, config.tau_l);
  candidate.log_likelihood = log_likelihood(candidate);
  if (candidate.log_likelihood > state.log_likelihood) {
    state = std::move(candidate);
    return true;
  }
  return false;
}

}  // namespace

bool step(CircleState& state, int node, SplitMix64& rng,
          const OptimizerConfig& config) {
  const int k = static_cast<int>(state.circles.size());
  std::vector<int> in_list, out_list;
  for (int j = 0; j < k; ++j) {
    if (state.circles[j].contains(node))
      in_list.push_back(j);
    else
      out_list.push_back(j);
  }
  const MembershipDeltas d = membership_deltas(
      static_cast<int>(in_list.size()), static_cast<int>(out_list.size()), rng);

  // Snapshot the chosen targets up front: accepted flips reshape the list.
  std::vector<std::vector<int>> add_targets, remove_targets;
  for (int j : sample_without_replacement(out_list, d.add_count, rng))
    add_targets.push_back(state.circles[j].members);
  for (int j : sample_without_replacement(in_list, d.remove_count, rng))
    remove_targets.push_back(state.circles[j].members);

  bool any = false;
  for (const auto& target : add_targets)
    any |= try_flip(state, node, target, true, config);
  for (const auto& target : remove_targets)
    any |= try_flip(state, node, target, false, config);
  return any;
}

DetectionResult detect(const EgoNetwork& net,
                       const std::vector<std::vector<double>>& profiles,
                       const OptimizerConfig& config) {
  CircleState state = init_state(net, profiles, config);
  SplitMix64 rng(config.rng_seed);

  const int n = net.alter_count();
  const int patience = config.effective_patience(n);
  const long long max_iters = config.effective_max_iterations(n);

  DetectionResult result;
  int rejections_in_a_row = 0;
  while (result.iterations < max_iters && rejections_in_a_row < patience) {
    const int node = static_cast<int>(result.iterations % n);
    const bool accepted = step(state, node, rng, config);
    ++result.iterations;
    if (accepted) {
      ++result.accepted_steps;
      rejections_in_a_row = 0;
    } else {
      ++rejections_in_a_row;
    }
    if (config.record_trace) result.trace.push_back(state.log_likelihood);
  }

  result.circles = state.circles;
  result.log_likelihood = state.log_likelihood;
  return result;
}

}  // namespace circles
