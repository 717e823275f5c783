#include "circles/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace circles {

bool Circle::contains(int y) const {
  return std::binary_search(members.begin(), members.end(), y);
}

void Circle::add(int y) {
  const auto it = std::lower_bound(members.begin(), members.end(), y);
  if (it == members.end() || *it != y) members.insert(it, y);
}

void Circle::remove(int y) {
  const auto it = std::lower_bound(members.begin(), members.end(), y);
  if (it != members.end() && *it == y) members.erase(it);
}

CircleState CircleState::from_ego(
    const EgoNetwork& net, const std::vector<std::vector<double>>& profiles) {
  if (profiles.size() != net.alters.size())
    throw std::invalid_argument("profiles do not match the alter list");
  CircleState s;
  s.n = net.alter_count();
  const std::size_t nn = static_cast<std::size_t>(s.n) * s.n;
  s.dists.assign(nn, 0.0);
  s.sims.assign(nn, kSimCap);
  s.edges.assign(nn, 0);
  for (int x = 0; x < s.n; ++x) {
    for (int y = x + 1; y < s.n; ++y) {
      const double d = distance(profiles[x], profiles[y]);
      const double sim = std::min(1.0 / std::max(d, kSimEpsilon), kSimCap);
      s.dists[static_cast<std::size_t>(x) * s.n + y] = d;
      s.dists[static_cast<std::size_t>(y) * s.n + x] = d;
      s.sims[static_cast<std::size_t>(x) * s.n + y] = sim;
      s.sims[static_cast<std::size_t>(y) * s.n + x] = sim;
    }
  }
  for (const auto& [a, b] : net.edges) {
    s.edges[static_cast<std::size_t>(a) * s.n + b] = 1;
    s.edges[static_cast<std::size_t>(b) * s.n + a] = 1;
  }
  return s;
}

double CircleState::max_threshold() const {
  double m = 0.0;
  for (const auto& c : circles)
    if (c.is_active()) m = std::max(m, c.tau);
  return m;
}

double sim_to_circle(const CircleState& state, const Circle& circle, int y) {
  if (circle.members.empty())
    throw std::invalid_argument("sim_to_circle: empty circle");
  double sum = 0.0;
  int count = 0;
  for (int z : circle.members) {
    if (z == y) continue;
    sum += state.dist(y, z);
    ++count;
  }
  if (count == 0) return kSimCap;
  const double mean = sum / count;
  return std::min(1.0 / std::max(mean, kSimEpsilon), kSimCap);
}

std::pair<double, double> beta_components(const CircleState& state, int x,
                                          int y) {
  const double a = state.sim(x, y) + state.lambda;
  double b1 = 0.0;
  double b2 = 0.0;
  for (const auto& c : state.circles) {
    if (!c.is_active()) continue;
    const double term = 1.0 / (a - c.tau);
    if (c.contains(x) && c.contains(y))
      b1 += term;
    else
      b2 += term;
  }
  return {b1, b2};
}

double phi(const CircleState& state, int x, int y) {
  const auto [b1, b2] = beta_components(state, x, y);
  return b1 * b1 - b2 * b2;
}

double edge_probability(double phi_value) {
  double p;
  if (phi_value >= 0.0) {
    p = 1.0 / (1.0 + std::exp(-phi_value));
  } else {
    const double e = std::exp(phi_value);
    p = e / (1.0 + e);
  }
  constexpr double lo = 1e-300;
  constexpr double hi = 1.0 - 1e-16;
  return std::min(std::max(p, lo), hi);
}

double non_edge_probability(double phi_value) {
  return 1.0 - edge_probability(phi_value);
}

double softplus(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

double log_likelihood(const CircleState& state) {
  const int n = state.n;

  std::vector<const Circle*> active;
  active.reserve(state.circles.size());
  for (const auto& c : state.circles)
    if (c.is_active()) active.push_back(&c);
  const std::size_t k = active.size();

  // Per-node membership masks over circle indices keep the inner loop to a
  // bit test per circle.
  const std::size_t words = (k + 63) / 64;
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n) * words, 0);
  for (std::size_t j = 0; j < k; ++j) {
    for (int y : active[j]->members)
      masks[static_cast<std::size_t>(y) * words + j / 64] |= 1ULL << (j % 64);
  }

  std::vector<double> taus(k);
  for (std::size_t j = 0; j < k; ++j) taus[j] = active[j]->tau;

  double ll = 0.0;
  std::vector<std::uint64_t> shared(words);
  for (int x = 0; x < n; ++x) {
    const std::uint64_t* mx = masks.data() + static_cast<std::size_t>(x) * words;
    for (int y = x + 1; y < n; ++y) {
      const std::uint64_t* my = masks.data() + static_cast<std::size_t>(y) * words;
      for (std::size_t w = 0; w < words; ++w) shared[w] = mx[w] & my[w];

      const double a = state.sim(x, y) + state.lambda;
      double b1 = 0.0;
      double b2 = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        const double term = 1.0 / (a - taus[j]);
        if (shared[j / 64] >> (j % 64) & 1ULL)
          b1 += term;
        else
          b2 += term;
      }
      const double phi_xy = b1 * b1 - b2 * b2;
      if (state.has_edge(x, y)) ll += phi_xy;
      ll -= softplus(phi_xy);
    }
  }
  return ll;
}

}  // namespace circles
