#include <doctest.h>

#include <cmath>

#include "circles/model.hpp"
#include "circles/rng.hpp"
#include "oracle.hpp"

using namespace circles;

namespace {

EgoNetwork net_of(int n, std::vector<std::pair<int, int>> edges) {
  EgoNetwork net;
  net.ego_id = "ego";
  for (int i = 0; i < n; ++i) net.alters.push_back("a" + std::to_string(i));
  net.edges = std::move(edges);
  return net;
}

// 1-d profiles make the pairwise distances easy to stage.
CircleState state_of(std::vector<double> coords,
                     std::vector<std::pair<int, int>> edges) {
  std::vector<std::vector<double>> profiles;
  for (double c : coords) profiles.push_back({c});
  return CircleState::from_ego(net_of(static_cast<int>(coords.size()), std::move(edges)),
                               profiles);
}

}  // namespace

TEST_CASE("sim_to_circle averages member distances") {
  auto s = state_of({0.0, 2.0, -2.0}, {});

  SUBCASE("singleton maps to the cap") {
    CHECK(sim_to_circle(s, Circle{{0}, 0.0}, 0) == kSimCap);
  }
  SUBCASE("one other member") {
    CHECK(sim_to_circle(s, Circle{{0, 1}, 0.0}, 0) == doctest::Approx(0.5));
  }
  SUBCASE("mean over two members") {
    // D(1,0)=2, D(1,2)=4 -> mean 3; D(0,1)=2, D(0,2)=2 -> mean 2
    CHECK(sim_to_circle(s, Circle{{0, 1, 2}, 0.0}, 1) == doctest::Approx(1.0 / 3.0));
    CHECK(sim_to_circle(s, Circle{{0, 1, 2}, 0.0}, 0) == doctest::Approx(0.5));
  }
  SUBCASE("empty circle is an error") {
    CHECK_THROWS(sim_to_circle(s, Circle{{}, 0.0}, 0));
  }
}

TEST_CASE("beta components follow the summation split") {
  SUBCASE("no circles at all") {
    auto s = state_of({0.0, 2.0}, {});
    s.lambda = 0.0;
    const auto [b1, b2] = beta_components(s, 0, 1);
    CHECK(b1 == 0.0);
    CHECK(b2 == 0.0);
  }

  SUBCASE("one shared, one unshared") {
    // Sim(0,1) = 0.5; shared circle tau 0.3, unshared circle tau 0.4.
    auto s = state_of({0.0, 2.0, 9.0, 9.5}, {});
    s.circles = {Circle{{0, 1}, 0.3}, Circle{{2, 3}, 0.4}};
    s.lambda = s.max_threshold();
    CHECK(s.lambda == doctest::Approx(0.4));
    const auto [b1, b2] = beta_components(s, 0, 1);
    CHECK(b1 == doctest::Approx(1.0 / 0.6).epsilon(1e-12));
    CHECK(b2 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(phi(s, 0, 1) ==
          doctest::Approx(1.0 / 0.36 - 4.0).epsilon(1e-12));  // ~ -1.2222
  }

  SUBCASE("sharing every circle empties beta2") {
    auto s = state_of({0.0, 2.0}, {});
    s.circles = {Circle{{0, 1}, 0.2}, Circle{{0, 1}, 0.1}};
    s.lambda = s.max_threshold();
    const auto [b1, b2] = beta_components(s, 0, 1);
    CHECK(b2 == 0.0);
    CHECK(b1 > 0.0);
  }

  SUBCASE("seed singletons contribute to neither sum") {
    auto s = state_of({0.0, 2.0, 9.0}, {});
    s.circles = {Circle{{0, 1}, 0.3}, Circle{{2}, kSimCap}};
    s.lambda = s.max_threshold();
    CHECK(s.lambda == doctest::Approx(0.3));  // singleton excluded
    const auto [b1, b2] = beta_components(s, 0, 1);
    CHECK(b1 == doctest::Approx(1.0 / 0.5).epsilon(1e-12));
    CHECK(b2 == 0.0);
  }
}

TEST_CASE("phi signs") {
  SUBCASE("no shared circles gives a negative phi") {
    auto s = state_of({0.0, 2.0, 9.0}, {});
    s.circles = {Circle{{0, 2}, 0.1}, Circle{{1, 2}, 0.1}};
    s.lambda = s.max_threshold();
    CHECK(phi(s, 0, 1) < 0.0);
  }
  SUBCASE("balanced components cancel") {
    auto s = state_of({0.0, 2.0}, {});
    s.lambda = 0.0;
    CHECK(phi(s, 0, 1) == 0.0);
  }
}

TEST_CASE("edge probability is a clamped logistic") {
  CHECK(edge_probability(0.0) == doctest::Approx(0.5));

  const double phi_example = 1.0 / 0.36 - 4.0;
  const double expected = 1.0 / (1.0 + std::exp(-phi_example));
  CHECK(edge_probability(phi_example) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(edge_probability(phi_example) == doctest::Approx(0.2275).epsilon(1e-3));

  CHECK(edge_probability(1e6) < 1.0);
  CHECK(edge_probability(1e6) >= 1.0 - 1e-15);
  CHECK(edge_probability(-1e6) > 0.0);
  CHECK(edge_probability(-1e6) < 1e-12);

  SplitMix64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const double x = (rng.next_double() - 0.5) * 2e6;
    const double p = edge_probability(x);
    CHECK(p > 0.0);
    CHECK(p < 1.0);
    CHECK(edge_probability(x) + non_edge_probability(x) == 1.0);  // exact
  }
}

TEST_CASE("softplus is stable at extreme arguments") {
  CHECK(softplus(0.0) == doctest::Approx(std::log(2.0)));
  CHECK(softplus(3.0) == doctest::Approx(std::log(1.0 + std::exp(3.0))));
  CHECK(std::isfinite(softplus(1e6)));
  CHECK(softplus(1e6) == doctest::Approx(1e6));
  CHECK(softplus(-1e6) == 0.0);
  CHECK(softplus(-800.0) >= 0.0);
}

TEST_CASE("log likelihood on staged states") {
  SUBCASE("two alters, one edge, one shared circle") {
    // Sim = 1.0, tau = lambda = 0.2 -> phi = 1, l = 1 - log(1 + e)
    auto s = state_of({0.0, 1.0}, {{0, 1}});
    s.circles = {Circle{{0, 1}, 0.2}};
    s.lambda = 0.2;
    CHECK(log_likelihood(s) ==
          doctest::Approx(1.0 - std::log1p(std::exp(1.0))).epsilon(1e-12));
  }

  SUBCASE("no circles collapses to pairs * log 2") {
    auto s = state_of({0.0, 1.0, 2.0, 5.0}, {{0, 1}, {2, 3}});
    s.lambda = 0.0;
    CHECK(log_likelihood(s) ==
          doctest::Approx(-6.0 * std::log(2.0)).epsilon(1e-12));
  }

  SUBCASE("edgeless graph with one big circle is negative") {
    auto s = state_of({0.0, 0.5, 1.0}, {});
    s.circles = {Circle{{0, 1, 2}, 0.5}};
    s.lambda = 0.5;
    CHECK(log_likelihood(s) < 0.0);
  }
}

TEST_CASE("beta monotonicity when a shared circle is added") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + static_cast<int>(rng.next_below(4));
    std::vector<double> coords;
    for (int i = 0; i < n; ++i) coords.push_back(rng.next_double() * 4.0);
    auto s = state_of(coords, {});
    // a couple of random circles with taus below lambda_cap
    const int k = 1 + static_cast<int>(rng.next_below(3));
    for (int j = 0; j < k; ++j) {
      Circle c;
      for (int y = 0; y < n; ++y)
        if (rng.next_double() < 0.5) c.members.push_back(y);
      if (c.members.empty()) c.members.push_back(0);
      c.tau = 0.1 + rng.next_double() * 0.4;
      s.circles.push_back(c);
    }
    s.lambda = 0.8;  // fixed, above every tau

    const int x = 0, y = 1;
    const auto [b1_before, b2_before] = beta_components(s, x, y);
    Circle shared;
    shared.members = {x, y};
    shared.tau = 0.2;
    s.circles.push_back(shared);
    const auto [b1_after, b2_after] = beta_components(s, x, y);
    CHECK(b1_after >= b1_before);
    CHECK(b2_after == b2_before);
    CHECK(b1_after * b1_after - b2_after * b2_after >=
          b1_before * b1_before - b2_before * b2_before);
  }
}

TEST_CASE("engine likelihood matches the direct oracle") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng.next_below(4));
    std::vector<std::vector<double>> profiles;
    for (int i = 0; i < n; ++i) {
      std::vector<double> p(5);
      for (auto& v : p) v = rng.next_double();
      profiles.push_back(p);
    }
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (rng.next_double() < 0.4) edges.emplace_back(x, y);

    std::vector<std::vector<int>> members;
    const int k = 1 + static_cast<int>(rng.next_below(3));
    for (int j = 0; j < k; ++j) {
      std::vector<int> m;
      for (int y = 0; y < n; ++y)
        if (rng.next_double() < 0.5) m.push_back(y);
      if (m.empty()) m.push_back(static_cast<int>(rng.next_below(n)));
      members.push_back(m);
    }

    auto s = CircleState::from_ego(net_of(n, edges), profiles);
    std::vector<double> taus;
    for (const auto& m : members) {
      Circle c;
      c.members = m;
      c.tau = oracle::circle_threshold(profiles, m);
      taus.push_back(c.tau);
      s.circles.push_back(c);
    }
    s.lambda = s.max_threshold();

    const double engine = log_likelihood(s);
    const double reference = oracle::log_likelihood(n, edges, profiles, members, taus);
    CHECK(engine == doctest::Approx(reference).epsilon(1e-9));
  }
}
