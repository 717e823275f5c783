#include <doctest.h>

#include <cmath>
#include <set>

#include "circles/synth.hpp"

using namespace circles;

TEST_CASE("generate_ego respects the edge probability limits") {
  PlantedEgoSpec spec;
  spec.sizes = {5, 5};
  spec.p_in = 1.0;
  spec.p_out = 0.0;
  spec.sigma_within = 0.01;
  spec.seed = 7;
  const auto ego = generate_ego(spec);

  REQUIRE(ego.truth.circles.size() == 2);
  const auto& c0 = ego.truth.circles[0];
  const auto& c1 = ego.truth.circles[1];
  std::set<std::pair<int, int>> edges(ego.net.edges.begin(), ego.net.edges.end());

  for (std::size_t i = 0; i < c0.size(); ++i)
    for (std::size_t j = i + 1; j < c0.size(); ++j)
      CHECK(edges.count({c0[i], c0[j]}) == 1);
  for (int x : c0)
    for (int y : c1)
      CHECK(edges.count({std::min(x, y), std::max(x, y)}) == 0);
}

TEST_CASE("zero within-circle noise duplicates the centroid") {
  PlantedEgoSpec spec;
  spec.sizes = {4, 4};
  spec.sigma_within = 0.0;
  spec.seed = 11;
  const auto ego = generate_ego(spec);
  for (const auto& c : ego.truth.circles)
    for (std::size_t i = 1; i < c.size(); ++i)
      CHECK(ego.profiles[c[0]] == ego.profiles[c[i]]);
}

TEST_CASE("overlap fraction shares the floor count of members") {
  PlantedEgoSpec spec;
  spec.sizes = {10, 10};
  spec.overlap_fraction = 0.2;
  spec.seed = 3;
  const auto ego = generate_ego(spec);

  const auto& a = ego.truth.circles[0];
  const auto& b = ego.truth.circles[1];
  std::set<int> inter;
  for (int x : a)
    if (std::binary_search(b.begin(), b.end(), x)) inter.insert(x);
  CHECK(inter.size() == 2);  // floor(0.2 * 10)
  CHECK(ego.net.alter_count() == 18);
}

TEST_CASE("generation is deterministic per seed") {
  PlantedEgoSpec spec;
  spec.sizes = {6, 7};
  spec.seed = 99;
  const auto a = generate_ego(spec);
  const auto b = generate_ego(spec);
  CHECK(a.net.edges == b.net.edges);
  CHECK(a.profiles == b.profiles);

  spec.seed = 100;
  const auto c = generate_ego(spec);
  CHECK((a.net.edges != c.net.edges || a.profiles != c.profiles));
}

TEST_CASE("edge density stays near the spec within binomial bounds") {
  PlantedEgoSpec spec;
  spec.sizes = {12, 12};
  spec.p_in = 0.7;
  spec.p_out = 0.1;
  spec.seed = 23;
  const auto ego = generate_ego(spec);

  long long intra_pairs = 0, cross_pairs = 0, intra_edges = 0, cross_edges = 0;
  std::set<std::pair<int, int>> edges(ego.net.edges.begin(), ego.net.edges.end());
  const int n = ego.net.alter_count();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      bool shared = false;
      for (const auto& c : ego.truth.circles)
        if (std::binary_search(c.begin(), c.end(), x) &&
            std::binary_search(c.begin(), c.end(), y))
          shared = true;
      const bool has = edges.count({x, y}) > 0;
      if (shared) {
        ++intra_pairs;
        intra_edges += has;
      } else {
        ++cross_pairs;
        cross_edges += has;
      }
    }
  }
  const auto within_3_sigma = [](long long edges_seen, long long pairs, double p) {
    const double mean = pairs * p;
    const double sigma = std::sqrt(pairs * p * (1 - p));
    return std::abs(edges_seen - mean) <= 3.0 * sigma + 1e-9;
  };
  CHECK(within_3_sigma(intra_edges, intra_pairs, spec.p_in));
  CHECK(within_3_sigma(cross_edges, cross_pairs, spec.p_out));
}

TEST_CASE("recovery_score identities") {
  PlantedTruth truth;
  truth.circles = {{0, 1, 2}, {3, 4, 5, 6}};

  SUBCASE("perfect recovery") {
    const auto [f1, omega] = recovery_score(truth.circles, truth);
    CHECK(f1 == doctest::Approx(1.0));
    CHECK(omega == doctest::Approx(1.0));
  }

  SUBCASE("all singletons against one big circle") {
    PlantedTruth big;
    big.circles = {{0, 1, 2, 3, 4}};
    std::vector<std::vector<int>> singles{{0}, {1}, {2}, {3}, {4}};
    const auto [f1, omega] = recovery_score(singles, big);
    CHECK(f1 == doctest::Approx(2.0 / 6.0).epsilon(1e-9));
    CHECK(omega <= 0.0 + 1e-9);  // no co-membership agreement beyond chance
  }

  SUBCASE("disjoint member sets score zero F1") {
    std::vector<std::vector<int>> other{{7, 8}, {9, 10}};
    const auto [f1, omega] = recovery_score(other, truth);
    CHECK(f1 == doctest::Approx(0.0));
  }

  SUBCASE("F1 is symmetric in its arguments") {
    std::vector<std::vector<int>> detected{{0, 1}, {2, 3, 4}};
    PlantedTruth as_truth;
    as_truth.circles = detected;
    const auto [f1_a, omega_a] = recovery_score(detected, truth);
    const auto [f1_b, omega_b] = recovery_score(truth.circles, as_truth);
    CHECK(f1_a == doctest::Approx(f1_b));
    CHECK(omega_a == doctest::Approx(omega_b));
  }
}

TEST_CASE("temporal corpus generator limits") {
  TemporalCorpusSpec spec;
  spec.clusters = 3;
  spec.authors_per_cluster = 6;
  spec.train_papers_per_cluster = 12;
  spec.bridge_papers = 8;
  spec.future_edges = 20;
  spec.seed = 5;

  SUBCASE("deterministic per seed") {
    const auto a = generate_temporal_corpus(spec);
    const auto b = generate_temporal_corpus(spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a.papers()[i].paper_id == b.papers()[i].paper_id);
      CHECK(a.papers()[i].year == b.papers()[i].year);
      CHECK(a.papers()[i].author_ids == b.papers()[i].author_ids);
    }
  }

  SUBCASE("full signal keeps future edges inside clusters") {
    spec.signal_strength = 1.0;
    const auto corpus = generate_temporal_corpus(spec);
    const int per = spec.authors_per_cluster;
    for (const auto& rec : corpus.papers()) {
      if (rec.year < spec.window_start) continue;
      REQUIRE(rec.author_ids.size() == 2);
      const int a = std::stoi(rec.author_ids[0].substr(1));
      const int b = std::stoi(rec.author_ids[1].substr(1));
      CHECK(a / per == b / per);
    }
  }

  SUBCASE("window years stay inside the window") {
    const auto corpus = generate_temporal_corpus(spec);
    for (const auto& rec : corpus.papers()) {
      const bool train = rec.year <= spec.train_end;
      const bool window = rec.year >= spec.window_start && rec.year <= spec.window_end;
      CHECK((train || window));
    }
  }
}
