#include "circles/synth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "circles/profiles.hpp"
#include "circles/rng.hpp"

namespace circles {

namespace {

std::string padded_id(const char* prefix, int i, int width) {
  std::string digits = std::to_string(i);
  while (static_cast<int>(digits.size()) < width) digits.insert(0, "0");
  return prefix + digits;
}

}  // namespace

SyntheticEgo generate_ego(const PlantedEgoSpec& spec) {
  if (spec.sizes.empty())
    throw std::invalid_argument("generate_ego: no circle sizes");
  for (int s : spec.sizes)
    if (s < 2) throw std::invalid_argument("generate_ego: circle size < 2");
  if (spec.p_out > spec.p_in || spec.p_in > 1.0 || spec.p_out < 0.0)
    throw std::invalid_argument("generate_ego: need 0 <= p_out <= p_in <= 1");

  SplitMix64 rng(spec.seed);

  // Lay circles over a shared node pool; each circle reuses the tail of the
  // previous one for the requested overlap.
  PlantedTruth truth;
  int next_node = 0;
  std::vector<int> prev;
  for (std::size_t c = 0; c < spec.sizes.size(); ++c) {
    const int size = spec.sizes[c];
    std::vector<int> members;
    if (c > 0) {
      int shared = static_cast<int>(std::floor(spec.overlap_fraction * size));
      shared = std::min<int>(shared, static_cast<int>(prev.size()));
      members.insert(members.end(), prev.end() - shared, prev.end());
    }
    while (static_cast<int>(members.size()) < size) members.push_back(next_node++);
    std::sort(members.begin(), members.end());
    truth.circles.push_back(members);
    prev = members;
  }
  const int n = next_node;
  if (n < spec.sizes.front())
    throw std::invalid_argument("generate_ego: sizes infeasible");

  // Circle centroids on mutually orthogonal random directions around the
  // cube center, pairwise distance sigma_between (up to clipping at the cube
  // walls, which only matters for separations beyond ~3).
  const int k_circles = static_cast<int>(truth.circles.size());
  if (k_circles > spec.dims)
    throw std::invalid_argument("generate_ego: more circles than dimensions");
  std::vector<std::vector<double>> directions;
  for (int c = 0; c < k_circles; ++c) {
    std::vector<double> v(spec.dims);
    for (auto& x : v) x = rng.next_gaussian(0.0, 1.0);
    for (const auto& prev : directions) {
      double dot = 0.0;
      for (int i = 0; i < spec.dims; ++i) dot += v[i] * prev[i];
      for (int i = 0; i < spec.dims; ++i) v[i] -= dot * prev[i];
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < 1e-12) throw std::runtime_error("generate_ego: degenerate direction");
    for (auto& x : v) x /= norm;
    directions.push_back(std::move(v));
  }
  const double radius = spec.sigma_between / std::sqrt(2.0);
  std::vector<std::vector<double>> centroids;
  for (int c = 0; c < k_circles; ++c) {
    std::vector<double> centroid(spec.dims);
    for (int i = 0; i < spec.dims; ++i)
      centroid[i] =
          std::min(1.0, std::max(0.0, 0.5 + radius * directions[c][i]));
    centroids.push_back(std::move(centroid));
  }

  // Member profile: mean of the owning centroids plus clipped noise.
  std::vector<std::vector<int>> owners(n);
  for (std::size_t c = 0; c < truth.circles.size(); ++c)
    for (int y : truth.circles[c]) owners[y].push_back(static_cast<int>(c));

  std::vector<std::vector<double>> profiles(n, std::vector<double>(spec.dims, 0.0));
  for (int y = 0; y < n; ++y) {
    if (owners[y].empty())
      throw std::logic_error("generate_ego: uncovered node");
    auto& p = profiles[y];
    for (int c : owners[y])
      for (int i = 0; i < spec.dims; ++i) p[i] += centroids[c][i];
    for (int i = 0; i < spec.dims; ++i) {
      p[i] /= static_cast<double>(owners[y].size());
      p[i] += rng.next_gaussian(0.0, spec.sigma_within);
      p[i] = std::min(1.0, std::max(0.0, p[i]));
    }
  }

  // Edges: p_in when the pair shares a circle, p_out otherwise.
  SyntheticEgo out;
  out.truth = std::move(truth);
  out.profiles = std::move(profiles);
  out.net.ego_id = "ego";
  const int width = n > 100 ? 3 : 2;
  for (int y = 0; y < n; ++y) out.net.alters.push_back(padded_id("a", y, width));
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      bool shared = false;
      for (const auto& c : out.truth.circles) {
        if (std::binary_search(c.begin(), c.end(), x) &&
            std::binary_search(c.begin(), c.end(), y)) {
          shared = true;
          break;
        }
      }
      const double p = shared ? spec.p_in : spec.p_out;
      if (rng.next_double() < p) out.net.edges.emplace_back(x, y);
    }
  }
  return out;
}

PaperCorpus generate_temporal_corpus(const TemporalCorpusSpec& spec) {
  if (spec.clusters < 2 || spec.authors_per_cluster < 3)
    throw std::invalid_argument("generate_temporal_corpus: too few authors");
  if (spec.window_start <= spec.train_end || spec.window_end < spec.window_start)
    throw std::invalid_argument("generate_temporal_corpus: bad year layout");

  SplitMix64 rng(spec.seed);
  const int n = spec.clusters * spec.authors_per_cluster;
  const int width = n > 100 ? 3 : 2;

  std::vector<std::string> authors(n);
  std::vector<int> cluster_of(n);
  for (int i = 0; i < n; ++i) {
    authors[i] = padded_id("v", i, width);
    cluster_of[i] = i / spec.authors_per_cluster;
  }

  // Cluster field signature. Major fields collide across clusters (mod 2),
  // so the pairwise cross-field features only separate half of the
  // cross-cluster pairs; the cluster identity sits in a minor field and in a
  // preferred publication window, both of which the full profile resolves.
  const auto field_of = [&](int cluster, SplitMix64& r) {
    const double u = r.next_double();
    const int major = cluster % 2;
    const int minor = 2 + cluster % 22;
    if (u < 0.45) return major;
    if (u < 0.90) return minor;
    return 2 + static_cast<int>(r.next_below(22));
  };

  const int train_span_years = spec.train_end - spec.first_year;
  const auto train_year_of = [&](int cluster, SplitMix64& r) {
    const int band = cluster % 3;
    const int band_span = train_span_years / 3;
    return spec.first_year + band * band_span +
           static_cast<int>(r.next_below(band_span + 1));
  };

  std::vector<PaperRecord> papers;
  int paper_no = 0;
  const auto add_paper = [&](int year, int field,
                             std::vector<std::string> author_ids) {
    PaperRecord rec;
    rec.paper_id = padded_id("p", paper_no++, 4);
    rec.year = year;
    rec.field_id = field;
    rec.citation_count = static_cast<long long>(rng.next_below(160));
    rec.author_ids = std::move(author_ids);
    papers.push_back(std::move(rec));
  };

  const int train_span = spec.train_end - spec.first_year;

  // Every author gets one solo paper so snapshot statistics always exist.
  for (int i = 0; i < n; ++i)
    add_paper(train_year_of(cluster_of[i], rng), field_of(cluster_of[i], rng),
              {authors[i]});

  std::set<std::pair<int, int>> train_edges;
  const auto add_pair_paper = [&](int a, int b, int year, int field) {
    add_paper(year, field, {authors[std::min(a, b)], authors[std::max(a, b)]});
    train_edges.insert({std::min(a, b), std::max(a, b)});
  };

  // Sparse intra-cluster training collaborations.
  for (int c = 0; c < spec.clusters; ++c) {
    const int base = c * spec.authors_per_cluster;
    for (int p = 0; p < spec.train_papers_per_cluster; ++p) {
      const int a = base + static_cast<int>(rng.next_below(spec.authors_per_cluster));
      int b = base + static_cast<int>(rng.next_below(spec.authors_per_cluster));
      while (b == a)
        b = base + static_cast<int>(rng.next_below(spec.authors_per_cluster));
      add_pair_paper(a, b, train_year_of(c, rng), field_of(c, rng));
    }
  }

  // Cross-cluster bridges so distance-2 candidates exist across clusters.
  for (int p = 0; p < spec.bridge_papers; ++p) {
    const int a = static_cast<int>(rng.next_below(n));
    int b = static_cast<int>(rng.next_below(n));
    while (b == a || cluster_of[b] == cluster_of[a])
      b = static_cast<int>(rng.next_below(n));
    const int year = spec.first_year + static_cast<int>(rng.next_below(train_span + 1));
    const int field = rng.next_double() < 0.5 ? field_of(cluster_of[a], rng)
                                              : field_of(cluster_of[b], rng);
    add_pair_paper(a, b, year, field);
  }

  // Future edges close triangles: with probability signal_strength the new
  // pair is a same-cluster distance-2 pair of the training graph, otherwise
  // any non-edge.
  std::vector<std::set<int>> adj(n);
  for (const auto& [a, b] : train_edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  const int window_span = spec.window_end - spec.window_start;
  std::set<std::pair<int, int>> future;
  int guard = spec.future_edges * 400;
  while (static_cast<int>(future.size()) < spec.future_edges && guard-- > 0) {
    int a, b;
    if (rng.next_double() < spec.signal_strength) {
      a = static_cast<int>(rng.next_below(n));
      if (adj[a].empty()) continue;
      std::vector<int> hop1(adj[a].begin(), adj[a].end());
      const int via = hop1[rng.next_below(hop1.size())];
      if (adj[via].empty()) continue;
      std::vector<int> hop2(adj[via].begin(), adj[via].end());
      b = hop2[rng.next_below(hop2.size())];
      if (cluster_of[a] != cluster_of[b]) continue;
    } else {
      a = static_cast<int>(rng.next_below(n));
      b = static_cast<int>(rng.next_below(n));
    }
    if (a == b) continue;
    const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
    if (train_edges.count(key) || future.count(key)) continue;
    future.insert(key);
    const int year = spec.window_start + static_cast<int>(rng.next_below(window_span + 1));
    const int field = rng.next_double() < 0.5 ? field_of(cluster_of[a], rng)
                                              : field_of(cluster_of[b], rng);
    add_paper(year, field, {authors[key.first], authors[key.second]});
  }

  return PaperCorpus(std::move(papers), CorpusConfig::defaults());
}

namespace {

double pair_f1(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t inter = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++inter;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return 2.0 * static_cast<double>(inter) /
         static_cast<double>(a.size() + b.size());
}

double directional_f1(const std::vector<std::vector<int>>& from,
                      const std::vector<std::vector<int>>& to) {
  if (from.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& f : from) {
    double best = 0.0;
    for (const auto& t : to) best = std::max(best, pair_f1(f, t));
    sum += best;
  }
  return sum / static_cast<double>(from.size());
}

// Pair co-membership counts for the omega index.
std::map<std::pair<int, int>, int> comembership_counts(
    const std::vector<std::vector<int>>& cover) {
  std::map<std::pair<int, int>, int> counts;
  for (const auto& c : cover)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) ++counts[{c[i], c[j]}];
  return counts;
}

}  // namespace

std::pair<double, double> recovery_score(
    const std::vector<std::vector<int>>& detected, const PlantedTruth& truth) {
  const double f1 = 0.5 * (directional_f1(truth.circles, detected) +
                           directional_f1(detected, truth.circles));

  // Omega index over all node pairs of the union of both covers.
  std::set<int> nodes;
  for (const auto& c : detected) nodes.insert(c.begin(), c.end());
  for (const auto& c : truth.circles) nodes.insert(c.begin(), c.end());
  const long long n = static_cast<long long>(nodes.size());
  const long long total_pairs = n * (n - 1) / 2;
  double omega = 0.0;
  if (total_pairs > 0) {
    const auto cd = comembership_counts(detected);
    const auto ct = comembership_counts(truth.circles);

    std::map<int, long long> hist_d, hist_t;
    long long agree = 0;
    std::vector<int> node_list(nodes.begin(), nodes.end());
    for (std::size_t i = 0; i < node_list.size(); ++i) {
      for (std::size_t j = i + 1; j < node_list.size(); ++j) {
        const std::pair<int, int> key{node_list[i], node_list[j]};
        const auto dit = cd.find(key);
        const auto tit = ct.find(key);
        const int kd = dit == cd.end() ? 0 : dit->second;
        const int kt = tit == ct.end() ? 0 : tit->second;
        ++hist_d[kd];
        ++hist_t[kt];
        if (kd == kt) ++agree;
      }
    }
    const double observed = static_cast<double>(agree) / total_pairs;
    double expected = 0.0;
    for (const auto& [k, count_d] : hist_d) {
      const auto it = hist_t.find(k);
      if (it == hist_t.end()) continue;
      expected += static_cast<double>(count_d) * it->second /
                  (static_cast<double>(total_pairs) * total_pairs);
    }
    if (1.0 - expected < 1e-12)
      omega = observed >= 1.0 - 1e-12 ? 1.0 : 0.0;
    else
      omega = (observed - expected) / (1.0 - expected);
  }
  return {f1, omega};
}

std::vector<std::vector<int>> circle_member_sets(
    const std::vector<Circle>& circles) {
  std::vector<std::vector<int>> out;
  out.reserve(circles.size());
  for (const auto& c : circles) out.push_back(c.members);
  return out;
}

}  // namespace circles
