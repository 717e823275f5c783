#include "circles/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace circles {

std::vector<std::string> profile_column_names() {
  std::vector<std::string> names = {"citations", "citations_per_paper",
                                    "h_index", "coauthor_count"};
  for (int i = 0; i < kFieldCount; ++i)
    names.push_back("versatility_" + std::to_string(i));
  names.push_back("paper_count");
  for (int i = 0; i < kDecadeCount; ++i)
    names.push_back("persistence_" + std::to_string(i));
  names.push_back("major_field");
  for (int i = 0; i < kDecadeCount; ++i)
    names.push_back("co_decade_" + std::to_string(i));
  for (int i = 0; i < kFieldCount; ++i)
    names.push_back("co_field_" + std::to_string(i));
  names.push_back("common_coauthors");
  names.push_back("alter_in_ego_major");
  names.push_back("ego_in_alter_major");
  return names;
}

int h_index(std::vector<long long> citation_counts) {
  std::sort(citation_counts.begin(), citation_counts.end(),
            std::greater<long long>());
  int h = 0;
  for (std::size_t i = 0; i < citation_counts.size(); ++i) {
    if (citation_counts[i] >= static_cast<long long>(i) + 1)
      h = static_cast<int>(i) + 1;
    else
      break;
  }
  return h;
}

namespace {

double normalized(double value, double max_value) {
  return max_value > 0 ? value / max_value : 0.0;
}

int argmax_lowest(const std::array<int, kFieldCount>& counts) {
  int best = 0;
  for (int i = 1; i < kFieldCount; ++i)
    if (counts[i] > counts[best]) best = i;
  return best;
}

}  // namespace

SnapshotStats::SnapshotStats(const PaperCorpus& snapshot,
                             const CoauthorGraph& graph)
    : corpus_(&snapshot), graph_(&graph) {
  std::map<std::string, std::vector<long long>> citations_per_paper;
  const auto& papers = snapshot.papers();
  for (std::size_t p = 0; p < papers.size(); ++p) {
    const auto& rec = papers[p];
    const int bin = snapshot.decade_bin_of(rec.year);
    for (const auto& author : rec.author_ids) {
      auto& st = stats_[author];
      ++st.paper_count;
      st.citations += rec.citation_count;
      ++st.field_counts[rec.field_id];
      if (bin >= 0) ++st.decade_counts[bin];
      citations_per_paper[author].push_back(rec.citation_count);
      papers_by_author_[author].push_back(static_cast<int>(p));
    }
  }

  for (auto& [author, st] : stats_) {
    st.h_index = h_index(citations_per_paper[author]);
    const int idx = graph.index_of(author);
    st.coauthor_count = idx >= 0 ? graph.degree(idx) : 0;
    st.major_field = argmax_lowest(st.field_counts);

    norms_.max_citations =
        std::max(norms_.max_citations, static_cast<double>(st.citations));
    norms_.max_citations_per_paper =
        std::max(norms_.max_citations_per_paper,
                 static_cast<double>(st.citations) / st.paper_count);
    norms_.max_h_index =
        std::max(norms_.max_h_index, static_cast<double>(st.h_index));
    norms_.max_coauthors =
        std::max(norms_.max_coauthors, static_cast<double>(st.coauthor_count));
    norms_.max_papers =
        std::max(norms_.max_papers, static_cast<double>(st.paper_count));
    for (int d = 0; d < kDecadeCount; ++d)
      norms_.max_papers_per_decade[d] =
          std::max(norms_.max_papers_per_decade[d],
                   static_cast<double>(st.decade_counts[d]));
  }

  for (const auto& [edge, info] : graph.edge_info) {
    const int c = common_coauthor_count(graph.nodes[edge.first],
                                        graph.nodes[edge.second]);
    norms_.max_common_coauthors =
        std::max(norms_.max_common_coauthors, static_cast<double>(c));
  }
}

const AuthorStats& SnapshotStats::stats(const std::string& author) const {
  const auto it = stats_.find(author);
  if (it == stats_.end())
    throw std::runtime_error("no statistics for author: " + author);
  return it->second;
}

bool SnapshotStats::has_author(const std::string& author) const {
  return stats_.count(author) > 0;
}

int SnapshotStats::common_coauthor_count(const std::string& x,
                                         const std::string& y) const {
  const int xi = graph_->index_of(x);
  const int yi = graph_->index_of(y);
  if (xi < 0 || yi < 0) return 0;
  const auto& a = graph_->adjacency[xi];
  const auto& b = graph_->adjacency[yi];
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      if (a[i] != xi && a[i] != yi) ++count;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

void SnapshotStats::shared_paper_counts(const std::string& x,
                                        const std::string& y,
                                        std::array<int, kDecadeCount>& by_decade,
                                        std::array<int, kFieldCount>& by_field,
                                        int& total) const {
  by_decade.fill(0);
  by_field.fill(0);
  total = 0;
  const auto xit = papers_by_author_.find(x);
  const auto yit = papers_by_author_.find(y);
  if (xit == papers_by_author_.end() || yit == papers_by_author_.end()) return;
  const auto& a = xit->second;
  const auto& b = yit->second;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      const auto& rec = corpus_->papers()[a[i]];
      ++total;
      ++by_field[rec.field_id];
      const int bin = corpus_->decade_bin_of(rec.year);
      if (bin >= 0) ++by_decade[bin];
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
}

double SnapshotStats::fraction_in_field(const std::string& author,
                                        int field) const {
  const auto& st = stats(author);
  if (st.paper_count == 0) return 0.0;
  return static_cast<double>(st.field_counts[field]) / st.paper_count;
}

std::vector<double> versatility(const PaperCorpus& corpus,
                                const std::string& author) {
  std::array<int, kFieldCount> counts{};
  int total = 0;
  for (const auto& rec : corpus.papers()) {
    if (std::find(rec.author_ids.begin(), rec.author_ids.end(), author) !=
        rec.author_ids.end()) {
      ++counts[rec.field_id];
      ++total;
    }
  }
  if (total == 0)
    throw std::runtime_error("versatility: author has no papers: " + author);
  std::vector<double> out(kFieldCount, 0.0);
  for (int i = 0; i < kFieldCount; ++i)
    out[i] = static_cast<double>(counts[i]) / total;
  return out;
}

int major_field(const PaperCorpus& corpus, const std::string& author) {
  std::array<int, kFieldCount> counts{};
  int total = 0;
  for (const auto& rec : corpus.papers()) {
    if (std::find(rec.author_ids.begin(), rec.author_ids.end(), author) !=
        rec.author_ids.end()) {
      ++counts[rec.field_id];
      ++total;
    }
  }
  if (total == 0)
    throw std::runtime_error("major_field: author has no papers: " + author);
  return argmax_lowest(counts);
}

std::vector<double> general_profile(const SnapshotStats& stats,
                                    const std::string& author) {
  const auto& st = stats.stats(author);
  const auto& norms = stats.norms();
  std::vector<double> v(kGeneralDims, 0.0);
  v[kOffCitations] = normalized(static_cast<double>(st.citations), norms.max_citations);
  v[kOffCitationsPerPaper] =
      normalized(static_cast<double>(st.citations) / st.paper_count,
                 norms.max_citations_per_paper);
  v[kOffHIndex] = normalized(st.h_index, norms.max_h_index);
  v[kOffCoauthorCount] = normalized(st.coauthor_count, norms.max_coauthors);
  for (int i = 0; i < kFieldCount; ++i)
    v[kOffVersatility + i] =
        static_cast<double>(st.field_counts[i]) / st.paper_count;
  v[kOffPaperCount] = normalized(st.paper_count, norms.max_papers);
  for (int d = 0; d < kDecadeCount; ++d)
    v[kOffPersistence + d] =
        normalized(st.decade_counts[d], norms.max_papers_per_decade[d]);
  v[kOffMajorField] = static_cast<double>(st.major_field) / (kFieldCount - 1);
  return v;
}

std::vector<double> profile(const SnapshotStats& stats, const std::string& ego,
                            const std::string& alter) {
  std::vector<double> v = general_profile(stats, alter);
  v.resize(kProfileDims, 0.0);

  std::array<int, kDecadeCount> co_decade{};
  std::array<int, kFieldCount> co_field{};
  int shared_total = 0;
  stats.shared_paper_counts(ego, alter, co_decade, co_field, shared_total);
  if (shared_total > 0) {
    for (int d = 0; d < kDecadeCount; ++d)
      v[kOffCoDecade + d] = static_cast<double>(co_decade[d]) / shared_total;
    for (int i = 0; i < kFieldCount; ++i)
      v[kOffCoField + i] = static_cast<double>(co_field[i]) / shared_total;
  }

  v[kOffCommonCoauthors] =
      normalized(stats.common_coauthor_count(ego, alter),
                 stats.norms().max_common_coauthors);
  v[kOffAlterInEgoMajor] =
      stats.fraction_in_field(alter, stats.stats(ego).major_field);
  v[kOffEgoInAlterMajor] =
      stats.fraction_in_field(ego, stats.stats(alter).major_field);
  return v;
}

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("distance: length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double similarity(const std::vector<double>& a, const std::vector<double>& b) {
  const double d = distance(a, b);
  return std::min(1.0 / std::max(d, kSimEpsilon), kSimCap);
}

std::vector<SimilarityBin> similarity_edge_stats(
    const CoauthorGraph& graph,
    const std::map<std::string, std::vector<double>>& profiles,
    double bin_width) {
  if (bin_width <= 0) throw std::invalid_argument("bin_width must be > 0");

  std::map<long long, SimilarityBin> bins;
  std::vector<const std::vector<double>*> vecs(graph.node_count(), nullptr);
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    const auto it = profiles.find(graph.nodes[i]);
    if (it != profiles.end()) vecs[i] = &it->second;
  }

  for (std::size_t x = 0; x < graph.node_count(); ++x) {
    if (!vecs[x]) continue;
    for (std::size_t y = x + 1; y < graph.node_count(); ++y) {
      if (!vecs[y]) continue;
      const double sim = similarity(*vecs[x], *vecs[y]);
      const long long key = static_cast<long long>(std::floor(sim / bin_width));
      auto& bin = bins[key];
      ++bin.pair_count;
      if (graph.has_edge(static_cast<int>(x), static_cast<int>(y)))
        ++bin.edge_count;
    }
  }

  std::vector<SimilarityBin> out;
  for (auto& [key, bin] : bins) {
    bin.bin_low = static_cast<double>(key) * bin_width;
    bin.bin_high = bin.bin_low + bin_width;
    bin.conditional_edge_probability =
        bin.pair_count > 0
            ? static_cast<double>(bin.edge_count) / bin.pair_count
            : 0.0;
    out.push_back(bin);
  }
  return out;
}

}  // namespace circles
