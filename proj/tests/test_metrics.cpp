#include <doctest.h>

#include <cmath>

#include "circles/metrics.hpp"

using namespace circles;

namespace {

EgoNetwork net_of(const std::string& ego, int n,
                  std::vector<std::pair<int, int>> edges) {
  EgoNetwork net;
  net.ego_id = ego;
  for (int i = 0; i < n; ++i) net.alters.push_back("m" + std::to_string(i));
  net.edges = std::move(edges);
  return net;
}

EgoNetwork two_triangles() {
  return net_of("ego", 6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

}  // namespace

TEST_CASE("overlapping modularity closed forms") {
  SUBCASE("two disjoint triangles as two circles") {
    const auto net = two_triangles();
    const std::vector<Circle> cover{Circle{{0, 1, 2}, 0.0},
                                    Circle{{3, 4, 5}, 0.0}};
    CHECK(overlapping_modularity(net, cover) ==
          doctest::Approx(0.5).epsilon(1e-9));
  }

  SUBCASE("a clique in one circle scores zero") {
    const auto net = net_of("ego", 4,
                            {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const std::vector<Circle> cover{Circle{{0, 1, 2, 3}, 0.0}};
    CHECK(std::abs(overlapping_modularity(net, cover)) < 1e-12);
  }

  SUBCASE("all-singleton cover carries only the null-model diagonal") {
    const auto net = two_triangles();
    std::vector<Circle> cover;
    for (int i = 0; i < 6; ++i) cover.push_back(Circle{{i}, 0.0});
    // every node contributes -(k_i/2m)^2 with k_i = 2, m = 6
    CHECK(overlapping_modularity(net, cover) ==
          doctest::Approx(-1.0 / 6.0).epsilon(1e-9));
  }

  SUBCASE("empty cover and edgeless network") {
    CHECK(overlapping_modularity(two_triangles(), {}) == 0.0);
    CHECK(overlapping_modularity(net_of("e", 3, {}),
                                 {Circle{{0, 1, 2}, 0.0}}) == 0.0);
  }

  SUBCASE("invariance under relabeling and member order") {
    const auto net = two_triangles();
    const std::vector<Circle> a{Circle{{0, 1, 2}, 0.0}, Circle{{3, 4, 5}, 0.0}};
    const std::vector<Circle> b{Circle{{3, 4, 5}, 0.0}, Circle{{0, 1, 2}, 0.0}};
    CHECK(overlapping_modularity(net, a) ==
          doctest::Approx(overlapping_modularity(net, b)).epsilon(1e-12));
  }

  SUBCASE("overlap weighting splits shared nodes") {
    const auto net = net_of("ego", 4, {{0, 1}, {1, 2}, {2, 3}});
    const std::vector<Circle> cover{Circle{{0, 1, 2}, 0.0},
                                    Circle{{1, 2, 3}, 0.0}};
    const double q = overlapping_modularity(net, cover);
    CHECK(std::isfinite(q));
    CHECK(q <= 1.0);
  }
}

TEST_CASE("cliquishness is the within-circle density") {
  const auto net = net_of("ego", 5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});

  CHECK(*cliquishness(net, Circle{{0, 1, 2}, 0.0}) == doctest::Approx(1.0));
  CHECK(*cliquishness(net, Circle{{0, 1, 2, 3}, 0.0}) ==
        doctest::Approx(4.0 / 6.0));
  CHECK(*cliquishness(net, Circle{{3, 4}, 0.0}) == doctest::Approx(0.0));
  CHECK(!cliquishness(net, Circle{{0}, 0.0}).has_value());
}

TEST_CASE("homogeneity closed forms") {
  CHECK(homogeneity_from_fields({4, 4, 4}) == doctest::Approx(1.0));
  CHECK(homogeneity_from_fields({1, 1, 2, 2}) ==
        doctest::Approx(1.0 / (1.0 + std::log(2.0))).epsilon(1e-9));

  std::vector<int> uniform;
  for (int f = 0; f < 24; ++f) uniform.push_back(f);
  CHECK(homogeneity_from_fields(uniform) ==
        doctest::Approx(1.0 / (1.0 + std::log(24.0))).epsilon(1e-9));

  // strictly below 1 whenever more than one field appears
  CHECK(homogeneity_from_fields({1, 2}) < 1.0);
  CHECK(homogeneity_from_fields({1, 1, 2}) > homogeneity_from_fields({1, 2}));
  CHECK_THROWS(homogeneity_from_fields({}));
}

TEST_CASE("field_label picks the mode with low-index ties") {
  CHECK(field_label_from_fields({3, 3, 7}) == 3);
  CHECK(field_label_from_fields({7, 3}) == 3);
  CHECK(field_label_from_fields({5}) == 5);
}

TEST_CASE("citation bands") {
  CHECK(citation_band(150) == CitationBand::kHigh);
  CHECK(citation_band(101) == CitationBand::kHigh);
  CHECK(citation_band(100) == CitationBand::kMedium);
  CHECK(citation_band(30) == CitationBand::kMedium);
  CHECK(citation_band(29) == CitationBand::kLow);
  CHECK(citation_band(0) == CitationBand::kLow);

  CHECK(homogeneity_zone(250) == 0);
  CHECK(homogeneity_zone(150) == 1);
  CHECK(homogeneity_zone(50) == 2);
  CHECK(homogeneity_zone(30) == 3);
}

TEST_CASE("summarize aggregates per ego and per band") {
  std::map<std::string, long long> citations{
      {"ego1", 150}, {"ego2", 40}, {"ego3", 5}, {"m0", 10}, {"m1", 10},
      {"m2", 10},    {"m3", 10},  {"m4", 10},  {"m5", 10}, {"m6", 10},
      {"m7", 10}};
  std::map<std::string, int> fields{{"ego1", 0}, {"ego2", 1}, {"ego3", 2},
                                    {"m0", 0},  {"m1", 0},  {"m2", 1},
                                    {"m3", 1},  {"m4", 2},  {"m5", 2},
                                    {"m6", 3},  {"m7", 3}};

  std::vector<EgoDetection> detections;
  {
    EgoDetection d;
    d.net = net_of("ego1", 8, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    d.circles = {Circle{{0, 1, 2}, 0.5}, Circle{{3, 4, 5, 6, 7}, 0.4}};
    detections.push_back(d);
  }
  {
    EgoDetection d;
    d.net = net_of("ego2", 3, {{0, 1}});
    d.circles = {Circle{{0, 1}, 0.3}};
    detections.push_back(d);
  }
  {
    EgoDetection d;  // no circles detected
    d.net = net_of("ego3", 3, {});
    detections.push_back(d);
  }

  const auto t = summarize(detections, citations, fields);

  CHECK(t.egos_total == 3);
  CHECK(t.egos_with_circles == 2);
  CHECK(t.bands[0].egos + t.bands[1].egos + t.bands[2].egos == 3);

  REQUIRE(t.author_rows.size() == 3);
  CHECK(t.author_rows[0].mean_size == doctest::Approx(4.0));  // {3,5}
  CHECK(t.author_rows[0].circle_count == 2);
  CHECK(t.author_rows[2].circle_count == 0);
  CHECK(t.author_rows[2].memberships == 0);  // ego3 is in nobody's circles

  CHECK(t.size_distribution.at(3) == 1);
  CHECK(t.size_distribution.at(5) == 1);
  CHECK(t.size_distribution.at(2) == 1);
  CHECK(t.circles_per_ego.at(0) == 1);
  CHECK(t.circles_per_ego.at(1) == 1);
  CHECK(t.circles_per_ego.at(2) == 1);

  // high band is ego1 only
  CHECK(t.bands[2].egos == 1);
  CHECK(t.bands[2].mean_circle_count == doctest::Approx(2.0));

  CHECK_THROWS(summarize({}, citations, fields));
}
