#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "circles/corpus.hpp"
#include "circles/metrics.hpp"
#include "circles/profiles.hpp"

namespace circles {

// N: node features of both endpoints. E: pair features. NE: both. NEB adds
// the shared-circle bit, NEBC additionally the normalized shared-circle count.
enum class FeatureMode { kN, kE, kNE, kNEB, kNEBC };

FeatureMode parse_feature_mode(const std::string& name);
std::string to_string(FeatureMode mode);
int feature_dim(FeatureMode mode);

struct SplitSpec {
  int train_end = 0;
  int window_start = 0;
  int window_end = 0;
};

struct TemporalSplit {
  PaperCorpus train_corpus;
  CoauthorGraph train_graph;
  // Train-graph non-edges that become edges inside the window, (i, j) with
  // i < j over train-graph node indices.
  std::vector<std::pair<int, int>> positives;
  std::set<std::pair<int, int>> positive_set;
  // Distance-2 candidates per source node, sorted.
  std::vector<std::vector<int>> candidates;
};

TemporalSplit temporal_split(const PaperCorpus& corpus, const SplitSpec& spec);

// Shared-circle counts over the union of all egos' detected circles.
class CircleMembershipIndex {
 public:
  CircleMembershipIndex() = default;
  explicit CircleMembershipIndex(const std::vector<EgoDetection>& detections);
  // One entry per circle: the member author ids.
  explicit CircleMembershipIndex(
      const std::vector<std::vector<std::string>>& circle_members);

  int common_circles(const std::string& x, const std::string& y) const;
  int max_common() const { return max_common_; }

 private:
  void add_circle(const std::vector<std::string>& members);

  std::map<std::pair<std::string, std::string>, int> counts_;
  int max_common_ = 0;
};

struct PairSample {
  int source = 0;
  int target = 0;
  std::vector<double> features;
  int label = 0;
};

std::vector<double> pair_features(const SnapshotStats& stats,
                                  const std::string& x, const std::string& y,
                                  FeatureMode mode,
                                  const CircleMembershipIndex* circles);

struct LrConfig {
  double learning_rate = 0.5;
  int epochs = 400;
  double l2 = 1e-4;
};

struct LrModel {
  std::vector<double> weights;
  double bias = 0.0;
  double score(const std::vector<double>& features) const;
};

// L2-regularized logistic regression by full-batch gradient descent.
LrModel train_lr(const std::vector<PairSample>& samples, const LrConfig& config);

// Probability that a random positive outranks a random negative; ties 0.5.
double auc(const std::vector<double>& scores, const std::vector<int>& labels);

// Mean over sources of hits-in-top-k / min(k, candidates). Entries per
// source are (score, label); order of equal scores follows input order.
double prec_at_k(
    const std::vector<std::vector<std::pair<double, int>>>& per_source, int k);

struct SrwConfig {
  double restart = 0.15;
  double tolerance = 1e-9;
  int max_power_iters = 500;
  double learning_rate = 1.0;
  int epochs = 25;
  double fd_step = 1e-4;
  double margin = 0.0;
};

// Symmetric per-edge feature vectors keyed (min, max).
using EdgeFeatures = std::map<std::pair<int, int>, std::vector<double>>;

// Personalized random walk where the transition along (u,v) is proportional
// to logistic(w . psi_uv) over u's incident edges. Returns the stationary
// distribution (sums to 1).
std::vector<double> srw_scores(const CoauthorGraph& graph,
                               const EdgeFeatures& psi,
                               const std::vector<double>& weights, int source,
                               const SrwConfig& config);

struct SrwTrainData {
  int source = 0;
  std::vector<int> positives;
  std::vector<int> negatives;
};

struct SrwTrainResult {
  std::vector<double> weights;
  std::vector<double> loss_trace;  // loss before training, then per epoch
};

// Gradient descent on a pairwise squared hinge over (positive, negative)
// score pairs per source; gradients by central finite differences.
SrwTrainResult srw_train(const CoauthorGraph& graph, const EdgeFeatures& psi,
                         const std::vector<SrwTrainData>& data, int dim,
                         const SrwConfig& config);

struct PredictConfig {
  enum class Model { kLr, kSrw };
  SplitSpec split;
  FeatureMode mode = FeatureMode::kNE;
  Model model = Model::kLr;
  std::uint64_t seed = 0;
  int neg_per_pos = 5;
  LrConfig lr;
  SrwConfig srw;
};

struct PredictReport {
  double auc = 0.0;
  double prec_at_20 = 0.0;
  long long fit_positives = 0;
  long long fit_negatives = 0;
  long long eval_positives = 0;
  long long eval_negatives = 0;
  long long sources_evaluated = 0;
};

// Full task: temporal split, per-node fit/eval partition by seeded hash,
// model fit on fit-node pairs, AUC and Prec@20 on eval-node pairs. The
// circle index must come from circles detected on the training snapshot.
PredictReport run_prediction(const PaperCorpus& corpus,
                             const CircleMembershipIndex& circle_index,
                             const PredictConfig& config);

}  // namespace circles
