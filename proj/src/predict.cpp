#include "circles/predict.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "circles/rng.hpp"

namespace circles {

FeatureMode parse_feature_mode(const std::string& name) {
  if (name == "N") return FeatureMode::kN;
  if (name == "E") return FeatureMode::kE;
  if (name == "NE") return FeatureMode::kNE;
  if (name == "NEB") return FeatureMode::kNEB;
  if (name == "NEBC") return FeatureMode::kNEBC;
  throw std::invalid_argument("unknown feature mode: " + name);
}

std::string to_string(FeatureMode mode) {
  switch (mode) {
    case FeatureMode::kN: return "N";
    case FeatureMode::kE: return "E";
    case FeatureMode::kNE: return "NE";
    case FeatureMode::kNEB: return "NEB";
    case FeatureMode::kNEBC: return "NEBC";
  }
  return "?";
}

namespace {

constexpr int kNodeDims = 33;  // citations, h, coauthors, 24 fields, papers, 5 decades
constexpr int kEdgeDims = 8;   // 5 co-decades, common coauthors, 2 cross-field fractions

}  // namespace

int feature_dim(FeatureMode mode) {
  switch (mode) {
    case FeatureMode::kN: return 2 * kNodeDims;
    case FeatureMode::kE: return kEdgeDims;
    case FeatureMode::kNE: return 2 * kNodeDims + kEdgeDims;
    case FeatureMode::kNEB: return 2 * kNodeDims + kEdgeDims + 1;
    case FeatureMode::kNEBC: return 2 * kNodeDims + kEdgeDims + 2;
  }
  return 0;
}

TemporalSplit temporal_split(const PaperCorpus& corpus, const SplitSpec& spec) {
  if (spec.window_start <= spec.train_end || spec.window_end < spec.window_start)
    throw std::invalid_argument("temporal_split: window must follow train_end");

  TemporalSplit split;
  split.train_corpus = snapshot(corpus, spec.train_end);
  if (split.train_corpus.size() == 0)
    throw std::runtime_error("temporal_split: empty train graph");
  split.train_graph = build_graph(split.train_corpus);
  const auto& g = split.train_graph;

  for (const auto& rec : corpus.papers()) {
    if (rec.year < spec.window_start || rec.year > spec.window_end) continue;
    for (std::size_t i = 0; i < rec.author_ids.size(); ++i) {
      for (std::size_t j = i + 1; j < rec.author_ids.size(); ++j) {
        int a = g.index_of(rec.author_ids[i]);
        int b = g.index_of(rec.author_ids[j]);
        if (a < 0 || b < 0) continue;  // authors without training history
        if (a > b) std::swap(a, b);
        if (g.has_edge(a, b)) continue;
        split.positive_set.insert({a, b});
      }
    }
  }
  split.positives.assign(split.positive_set.begin(), split.positive_set.end());

  split.candidates.resize(g.node_count());
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    std::set<int> reach;
    for (int v : g.adjacency[u])
      for (int w : g.adjacency[v]) reach.insert(w);
    reach.erase(static_cast<int>(u));
    for (int v : g.adjacency[u]) reach.erase(v);
    split.candidates[u].assign(reach.begin(), reach.end());
  }
  return split;
}

CircleMembershipIndex::CircleMembershipIndex(
    const std::vector<EgoDetection>& detections) {
  std::vector<std::string> members;
  for (const auto& det : detections) {
    for (const auto& c : det.circles) {
      members.clear();
      for (int y : c.members) members.push_back(det.net.alters[y]);
      add_circle(members);
    }
  }
}

CircleMembershipIndex::CircleMembershipIndex(
    const std::vector<std::vector<std::string>>& circle_members) {
  for (const auto& members : circle_members) add_circle(members);
}

void CircleMembershipIndex::add_circle(
    const std::vector<std::string>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      std::string a = members[i];
      std::string b = members[j];
      if (b < a) std::swap(a, b);
      const int count = ++counts_[{a, b}];
      max_common_ = std::max(max_common_, count);
    }
  }
}

int CircleMembershipIndex::common_circles(const std::string& x,
                                          const std::string& y) const {
  const auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
  const auto it = counts_.find(key);
  return it == counts_.end() ? 0 : it->second;
}

namespace {

void append_node_features(const SnapshotStats& stats, const std::string& author,
                          std::vector<double>& out) {
  const auto& st = stats.stats(author);
  const auto& norms = stats.norms();
  const auto norm = [](double v, double m) { return m > 0 ? v / m : 0.0; };
  out.push_back(norm(static_cast<double>(st.citations), norms.max_citations));
  out.push_back(norm(st.h_index, norms.max_h_index));
  out.push_back(norm(st.coauthor_count, norms.max_coauthors));
  for (int f = 0; f < kFieldCount; ++f)
    out.push_back(static_cast<double>(st.field_counts[f]) / st.paper_count);
  out.push_back(norm(st.paper_count, norms.max_papers));
  for (int d = 0; d < kDecadeCount; ++d)
    out.push_back(static_cast<double>(st.decade_counts[d]) / st.paper_count);
}

void append_edge_features(const SnapshotStats& stats, const std::string& x,
                          const std::string& y, std::vector<double>& out) {
  std::array<int, kDecadeCount> by_decade{};
  std::array<int, kFieldCount> by_field{};
  int total = 0;
  stats.shared_paper_counts(x, y, by_decade, by_field, total);
  for (int d = 0; d < kDecadeCount; ++d)
    out.push_back(total > 0 ? static_cast<double>(by_decade[d]) / total : 0.0);
  const auto& norms = stats.norms();
  const double common = stats.common_coauthor_count(x, y);
  out.push_back(norms.max_common_coauthors > 0
                    ? common / norms.max_common_coauthors
                    : 0.0);
  out.push_back(stats.fraction_in_field(x, stats.stats(y).major_field));
  out.push_back(stats.fraction_in_field(y, stats.stats(x).major_field));
}

}  // namespace

std::vector<double> pair_features(const SnapshotStats& stats,
                                  const std::string& x, const std::string& y,
                                  FeatureMode mode,
                                  const CircleMembershipIndex* circles) {
  const std::string& lo = x < y ? x : y;
  const std::string& hi = x < y ? y : x;

  std::vector<double> out;
  out.reserve(feature_dim(mode));
  const bool want_n = mode != FeatureMode::kE;
  const bool want_e = mode != FeatureMode::kN;
  if (want_n) {
    append_node_features(stats, lo, out);
    append_node_features(stats, hi, out);
  }
  if (want_e) append_edge_features(stats, lo, hi, out);

  if (mode == FeatureMode::kNEB || mode == FeatureMode::kNEBC) {
    if (circles == nullptr)
      throw std::invalid_argument("pair_features: circle data required for " +
                                  to_string(mode));
    const int common = circles->common_circles(lo, hi);
    out.push_back(common > 0 ? 1.0 : 0.0);
    if (mode == FeatureMode::kNEBC)
      out.push_back(circles->max_common() > 0
                        ? static_cast<double>(common) / circles->max_common()
                        : 0.0);
  }
  return out;
}

double LrModel::score(const std::vector<double>& features) const {
  double z = bias;
  for (std::size_t i = 0; i < features.size(); ++i) z += weights[i] * features[i];
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

LrModel train_lr(const std::vector<PairSample>& samples, const LrConfig& config) {
  if (samples.empty()) throw std::invalid_argument("train_lr: no samples");
  bool any_pos = false, any_neg = false;
  for (const auto& s : samples) (s.label ? any_pos : any_neg) = true;
  if (!any_pos || !any_neg)
    throw std::invalid_argument("train_lr: need both classes");

  const std::size_t dim = samples.front().features.size();
  for (const auto& s : samples)
    if (s.features.size() != dim)
      throw std::invalid_argument("train_lr: inconsistent feature lengths");

  LrModel model;
  model.weights.assign(dim, 0.0);
  std::vector<double> grad(dim);
  const double inv_m = 1.0 / static_cast<double>(samples.size());

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::fill(grad.begin(), grad.end(), 0.0);
    double grad_bias = 0.0;
    for (const auto& s : samples) {
      const double err = model.score(s.features) - s.label;
      for (std::size_t i = 0; i < dim; ++i) grad[i] += err * s.features[i];
      grad_bias += err;
    }
    for (std::size_t i = 0; i < dim; ++i) {
      grad[i] = grad[i] * inv_m + 2.0 * config.l2 * model.weights[i];
      model.weights[i] -= config.learning_rate * grad[i];
    }
    model.bias -= config.learning_rate * grad_bias * inv_m;
  }
  return model;
}

double auc(const std::vector<double>& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size())
    throw std::invalid_argument("auc: size mismatch");
  long long positives = 0, negatives = 0;
  for (int l : labels) (l ? positives : negatives) += 1;
  if (positives == 0 || negatives == 0)
    throw std::invalid_argument("auc: need both classes");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });

  // Average ranks across tied scores, then the Mann-Whitney statistic.
  double rank_sum_pos = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
    const double avg_rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (std::size_t k = i; k <= j; ++k)
      if (labels[order[k]]) rank_sum_pos += avg_rank;
    i = j + 1;
  }
  const double p = static_cast<double>(positives);
  return (rank_sum_pos - p * (p + 1) / 2.0) /
         (p * static_cast<double>(negatives));
}

double prec_at_k(
    const std::vector<std::vector<std::pair<double, int>>>& per_source, int k) {
  if (per_source.empty())
    throw std::invalid_argument("prec_at_k: no sources");
  if (k <= 0) throw std::invalid_argument("prec_at_k: k must be positive");

  double total = 0.0;
  for (const auto& entries : per_source) {
    if (entries.empty())
      throw std::invalid_argument("prec_at_k: empty candidate set");
    std::vector<std::size_t> order(entries.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return entries[a].first > entries[b].first;
                     });
    const int take = std::min<int>(k, static_cast<int>(entries.size()));
    int hits = 0;
    for (int i = 0; i < take; ++i) hits += entries[order[i]].second ? 1 : 0;
    total += static_cast<double>(hits) / take;
  }
  return total / static_cast<double>(per_source.size());
}

namespace {

double logistic(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double edge_strength(const EdgeFeatures& psi, const std::vector<double>& w,
                     int u, int v) {
  const auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  const auto it = psi.find(key);
  if (it == psi.end())
    throw std::runtime_error("srw: missing edge features for edge");
  double z = 0.0;
  const auto& f = it->second;
  for (std::size_t i = 0; i < f.size(); ++i) z += w[i] * f[i];
  return logistic(z);
}

}  // namespace

std::vector<double> srw_scores(const CoauthorGraph& graph,
                               const EdgeFeatures& psi,
                               const std::vector<double>& weights, int source,
                               const SrwConfig& config) {
  const std::size_t n = graph.node_count();
  if (source < 0 || static_cast<std::size_t>(source) >= n)
    throw std::invalid_argument("srw_scores: bad source");

  // Row-normalized transition strengths.
  std::vector<std::vector<double>> trans(n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto& nbrs = graph.adjacency[u];
    trans[u].resize(nbrs.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      trans[u][i] = edge_strength(psi, weights, static_cast<int>(u), nbrs[i]);
      sum += trans[u][i];
    }
    if (sum > 0)
      for (auto& t : trans[u]) t /= sum;
  }

  std::vector<double> p(n, 0.0), next(n);
  p[source] = 1.0;
  for (int iter = 0; iter < config.max_power_iters; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    double dangling = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      if (p[u] == 0.0) continue;
      const auto& nbrs = graph.adjacency[u];
      if (nbrs.empty()) {
        dangling += p[u];  // isolated mass returns to the source
        continue;
      }
      const double share = (1.0 - config.restart) * p[u];
      for (std::size_t i = 0; i < nbrs.size(); ++i)
        next[nbrs[i]] += share * trans[u][i];
      dangling += config.restart * p[u];
    }
    next[source] += dangling;

    double delta = 0.0;
    for (std::size_t v = 0; v < n; ++v)
      delta = std::max(delta, std::abs(next[v] - p[v]));
    p.swap(next);
    if (delta < config.tolerance) break;
  }
  return p;
}

namespace {

double srw_loss(const CoauthorGraph& graph, const EdgeFeatures& psi,
                const std::vector<double>& w,
                const std::vector<SrwTrainData>& data, const SrwConfig& config) {
  double loss = 0.0;
  for (const auto& d : data) {
    const auto scores = srw_scores(graph, psi, w, d.source, config);
    for (int pos : d.positives) {
      for (int neg : d.negatives) {
        const double gap = scores[neg] - scores[pos] + config.margin;
        if (gap > 0) loss += gap * gap;
      }
    }
  }
  return loss;
}

}  // namespace

SrwTrainResult srw_train(const CoauthorGraph& graph, const EdgeFeatures& psi,
                         const std::vector<SrwTrainData>& data, int dim,
                         const SrwConfig& config) {
  if (data.empty()) throw std::invalid_argument("srw_train: no training data");
  for (const auto& d : data)
    if (d.positives.empty() || d.negatives.empty())
      throw std::invalid_argument("srw_train: source without both classes");

  SrwTrainResult result;
  result.weights.assign(dim, 0.0);
  result.loss_trace.push_back(srw_loss(graph, psi, result.weights, data, config));

  std::vector<double> grad(dim);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    for (int i = 0; i < dim; ++i) {
      std::vector<double> w_hi = result.weights;
      std::vector<double> w_lo = result.weights;
      w_hi[i] += config.fd_step;
      w_lo[i] -= config.fd_step;
      grad[i] = (srw_loss(graph, psi, w_hi, data, config) -
                 srw_loss(graph, psi, w_lo, data, config)) /
                (2.0 * config.fd_step);
    }
    for (int i = 0; i < dim; ++i)
      result.weights[i] -= config.learning_rate * grad[i];
    result.loss_trace.push_back(
        srw_loss(graph, psi, result.weights, data, config));
  }
  return result;
}

namespace {

struct SampleUniverse {
  std::vector<std::pair<int, int>> fit_pos, eval_pos;
  std::vector<std::pair<int, int>> fit_neg, eval_neg;
};

// Candidate pairs (deduplicated, i < j) that did not become edges.
std::vector<std::pair<int, int>> negative_pool(const TemporalSplit& split) {
  std::vector<std::pair<int, int>> pool;
  for (std::size_t u = 0; u < split.candidates.size(); ++u) {
    for (int v : split.candidates[u]) {
      if (static_cast<int>(u) >= v) continue;
      const std::pair<int, int> key{static_cast<int>(u), v};
      if (!split.positive_set.count(key)) pool.push_back(key);
    }
  }
  return pool;
}

}  // namespace

PredictReport run_prediction(const PaperCorpus& corpus,
                             const CircleMembershipIndex& circle_index,
                             const PredictConfig& config) {
  TemporalSplit split = temporal_split(corpus, config.split);
  const auto& g = split.train_graph;
  SnapshotStats stats(split.train_corpus, g);
  const bool needs_circles = config.mode == FeatureMode::kNEB ||
                             config.mode == FeatureMode::kNEBC;
  const CircleMembershipIndex* circles = needs_circles ? &circle_index : nullptr;

  // Seeded per-node fit/eval split. A pair belongs to a side only when both
  // endpoints do, which keeps evaluation pairs out of training.
  const auto is_eval = [&](int node) {
    return ((fnv1a64(g.nodes[node]) ^ config.seed) & 1ULL) == 1ULL;
  };

  SampleUniverse uni;
  for (const auto& p : split.positives) {
    const bool e1 = is_eval(p.first), e2 = is_eval(p.second);
    if (!e1 && !e2) uni.fit_pos.push_back(p);
    if (e1 && e2) uni.eval_pos.push_back(p);
  }

  SplitMix64 rng(config.seed ^ 0x9E3779B97F4A7C15ULL);
  auto pool = negative_pool(split);
  {
    std::vector<std::pair<int, int>> fit_pool, eval_pool;
    for (const auto& p : pool) {
      const bool e1 = is_eval(p.first), e2 = is_eval(p.second);
      if (!e1 && !e2) fit_pool.push_back(p);
      if (e1 && e2) eval_pool.push_back(p);
    }
    const auto draw = [&](std::vector<std::pair<int, int>>& from,
                          std::size_t want) {
      std::vector<std::pair<int, int>> out;
      want = std::min(want, from.size());
      for (std::size_t i = 0; i < want; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.next_below(from.size() - i));
        std::swap(from[i], from[j]);
        out.push_back(from[i]);
      }
      return out;
    };
    uni.fit_neg = draw(fit_pool,
                       uni.fit_pos.size() * static_cast<std::size_t>(config.neg_per_pos));
    uni.eval_neg = draw(eval_pool,
                        uni.eval_pos.size() * static_cast<std::size_t>(config.neg_per_pos));
  }

  const auto features_of = [&](const std::pair<int, int>& p) {
    return pair_features(stats, g.nodes[p.first], g.nodes[p.second],
                         config.mode, circles);
  };

  PredictReport report;
  report.fit_positives = static_cast<long long>(uni.fit_pos.size());
  report.fit_negatives = static_cast<long long>(uni.fit_neg.size());
  report.eval_positives = static_cast<long long>(uni.eval_pos.size());
  report.eval_negatives = static_cast<long long>(uni.eval_neg.size());

  if (uni.fit_pos.empty() || uni.fit_neg.empty() || uni.eval_pos.empty() ||
      uni.eval_neg.empty())
    throw std::runtime_error("run_prediction: a sample class is empty; "
                             "corpus too small for the split");

  // Scorer shared by the AUC samples and the per-source rankings.
  std::function<double(int, int)> pair_score;
  LrModel lr_model;
  std::map<int, std::vector<double>> walk_cache;
  EdgeFeatures psi;

  if (config.model == PredictConfig::Model::kLr) {
    std::vector<PairSample> train_samples;
    for (const auto& p : uni.fit_pos)
      train_samples.push_back({p.first, p.second, features_of(p), 1});
    for (const auto& p : uni.fit_neg)
      train_samples.push_back({p.first, p.second, features_of(p), 0});
    lr_model = train_lr(train_samples, config.lr);
    pair_score = [&](int a, int b) {
      return lr_model.score(features_of({std::min(a, b), std::max(a, b)}));
    };
  } else {
    for (const auto& [edge, info] : g.edge_info)
      psi[edge] = pair_features(stats, g.nodes[edge.first],
                                g.nodes[edge.second], config.mode, circles);

    std::map<int, SrwTrainData> by_source;
    for (const auto& p : uni.fit_pos) {
      by_source[p.first].positives.push_back(p.second);
      by_source[p.second].positives.push_back(p.first);
    }
    for (const auto& p : uni.fit_neg) {
      by_source[p.first].negatives.push_back(p.second);
      by_source[p.second].negatives.push_back(p.first);
    }
    std::vector<SrwTrainData> data;
    for (auto& [source, d] : by_source) {
      if (d.positives.empty() || d.negatives.empty()) continue;
      d.source = source;
      data.push_back(d);
    }
    const auto trained =
        srw_train(g, psi, data, feature_dim(config.mode), config.srw);
    const std::vector<double> w = trained.weights;
    pair_score = [&, w](int a, int b) {
      const int source = std::min(a, b);
      const int target = std::max(a, b);
      auto it = walk_cache.find(source);
      if (it == walk_cache.end())
        it = walk_cache.emplace(source, srw_scores(g, psi, w, source, config.srw)).first;
      return it->second[target];
    };
  }

  // AUC over the held-out pairs.
  std::vector<double> scores;
  std::vector<int> labels;
  for (const auto& p : uni.eval_pos) {
    scores.push_back(pair_score(p.first, p.second));
    labels.push_back(1);
  }
  for (const auto& p : uni.eval_neg) {
    scores.push_back(pair_score(p.first, p.second));
    labels.push_back(0);
  }
  report.auc = auc(scores, labels);

  // Prec@20 over held-out sources with non-empty candidate sets.
  std::vector<std::vector<std::pair<double, int>>> per_source;
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    if (!is_eval(static_cast<int>(u)) || split.candidates[u].empty()) continue;
    std::vector<std::pair<double, int>> entries;
    for (int v : split.candidates[u]) {
      const std::pair<int, int> key{std::min<int>(static_cast<int>(u), v),
                                    std::max<int>(static_cast<int>(u), v)};
      entries.emplace_back(pair_score(key.first, key.second),
                           split.positive_set.count(key) ? 1 : 0);
    }
    per_source.push_back(std::move(entries));
  }
  report.sources_evaluated = static_cast<long long>(per_source.size());
  if (!per_source.empty()) report.prec_at_20 = prec_at_k(per_source, 20);
  return report;
}

}  // namespace circles
