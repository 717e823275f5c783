#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "circles/corpus.hpp"
#include "circles/ego.hpp"
#include "circles/model.hpp"

namespace circles {

// Generator for one ego network with known overlapping circles. Profiles are
// drawn directly in feature space: one centroid per circle, member profiles
// centroid + gaussian noise, edges at p_in inside circles and p_out across.
struct PlantedEgoSpec {
  std::vector<int> sizes;          // one entry per circle, each >= 2
  double overlap_fraction = 0.0;   // floor(overlap * size) members shared
                                   // with the previous circle
  double p_in = 0.8;
  double p_out = 0.05;
  double sigma_within = 0.02;      // per-coordinate noise around the centroid
  double sigma_between = 0.3;      // minimum distance between centroids
  int dims = 67;
  std::uint64_t seed = 0;
};

struct PlantedTruth {
  std::vector<std::vector<int>> circles;  // alter indices, sorted
};

struct SyntheticEgo {
  EgoNetwork net;
  std::vector<std::vector<double>> profiles;
  PlantedTruth truth;
};

SyntheticEgo generate_ego(const PlantedEgoSpec& spec);

// Corpus generator for the temporal prediction task. Authors live in
// clusters with distinct field signatures; training-period papers create a
// sparse co-authorship graph, and window-period papers add new edges that
// favor same-cluster pairs with probability signal_strength.
struct TemporalCorpusSpec {
  int clusters = 6;
  int authors_per_cluster = 28;
  int train_papers_per_cluster = 110;
  int bridge_papers = 90;          // cross-cluster training papers
  int future_edges = 300;
  double signal_strength = 0.9;
  int first_year = 1976;
  int train_end = 1995;
  int window_start = 1996;
  int window_end = 1999;
  std::uint64_t seed = 0;
};

PaperCorpus generate_temporal_corpus(const TemporalCorpusSpec& spec);

// (best-match F1 symmetrized over both directions, omega index).
std::pair<double, double> recovery_score(
    const std::vector<std::vector<int>>& detected, const PlantedTruth& truth);

std::vector<std::vector<int>> circle_member_sets(
    const std::vector<Circle>& circles);

}  // namespace circles
