#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "circles/corpus.hpp"

namespace circles {

inline constexpr int kFieldCount = 24;
inline constexpr int kDecadeCount = 5;
inline constexpr int kGeneralDims = 35;
inline constexpr int kProfileDims = 67;

inline constexpr double kSimEpsilon = 1e-6;
inline constexpr double kSimCap = 1e6;

// Frozen profile layout. Offsets into the 67-entry vector:
//   [0]      citations
//   [1]      citations per paper
//   [2]      h-index
//   [3]      coauthor count
//   [4..27]  versatility (fraction of papers per field)
//   [28]     paper count
//   [29..33] persistence (papers per decade, normalized per bin)
//   [34]     major field index / 23
//   [35..39] fraction of coauthored papers per decade
//   [40..63] fraction of coauthored papers per field
//   [64]     common coauthors with the ego
//   [65]     fraction of alter's papers in the ego's major field
//   [66]     fraction of ego's papers in the alter's major field
inline constexpr int kOffCitations = 0;
inline constexpr int kOffCitationsPerPaper = 1;
inline constexpr int kOffHIndex = 2;
inline constexpr int kOffCoauthorCount = 3;
inline constexpr int kOffVersatility = 4;
inline constexpr int kOffPaperCount = 28;
inline constexpr int kOffPersistence = 29;
inline constexpr int kOffMajorField = 34;
inline constexpr int kOffCoDecade = 35;
inline constexpr int kOffCoField = 40;
inline constexpr int kOffCommonCoauthors = 64;
inline constexpr int kOffAlterInEgoMajor = 65;
inline constexpr int kOffEgoInAlterMajor = 66;

// Column names matching the frozen layout, for the optional profile dump.
std::vector<std::string> profile_column_names();

// Largest h with at least h papers of h or more citations each.
int h_index(std::vector<long long> citation_counts);

// Per-author aggregates over one corpus snapshot.
struct AuthorStats {
  int paper_count = 0;
  long long citations = 0;
  int h_index = 0;
  int coauthor_count = 0;
  std::array<int, kFieldCount> field_counts{};
  std::array<int, kDecadeCount> decade_counts{};
  int major_field = 0;  // argmax of field_counts, lowest index on ties
};

// Dataset-global maxima used to scale features into [0,1]. Computed once per
// snapshot and persisted next to the results so runs can be reproduced.
struct NormalizationTable {
  double max_citations = 0;
  double max_citations_per_paper = 0;
  double max_h_index = 0;
  double max_coauthors = 0;
  double max_papers = 0;
  std::array<double, kDecadeCount> max_papers_per_decade{};
  double max_common_coauthors = 0;
};

// Author statistics, pair statistics and the normalization table for one
// snapshot; the raw material behind profiles and prediction features.
class SnapshotStats {
 public:
  SnapshotStats(const PaperCorpus& snapshot, const CoauthorGraph& graph);

  const NormalizationTable& norms() const { return norms_; }
  const AuthorStats& stats(const std::string& author) const;
  const std::map<std::string, AuthorStats>& all_stats() const { return stats_; }
  bool has_author(const std::string& author) const;
  const CoauthorGraph& graph() const { return *graph_; }
  const PaperCorpus& corpus() const { return *corpus_; }

  int common_coauthor_count(const std::string& x, const std::string& y) const;
  // Counts over papers shared by the pair: per decade bin and per field.
  void shared_paper_counts(const std::string& x, const std::string& y,
                           std::array<int, kDecadeCount>& by_decade,
                           std::array<int, kFieldCount>& by_field,
                           int& total) const;
  double fraction_in_field(const std::string& author, int field) const;

 private:
  const PaperCorpus* corpus_;
  const CoauthorGraph* graph_;
  std::map<std::string, AuthorStats> stats_;
  std::map<std::string, std::vector<int>> papers_by_author_;
  NormalizationTable norms_;
};

// 24 fractions of the author's papers per field; entries sum to 1.
std::vector<double> versatility(const PaperCorpus& corpus,
                                const std::string& author);

// Field with the most publications; lowest index wins ties.
int major_field(const PaperCorpus& corpus, const std::string& author);

// The 67-entry profile of `alter` within `ego`'s network.
std::vector<double> profile(const SnapshotStats& stats, const std::string& ego,
                            const std::string& alter);

// First 35 entries only; used where no ego is in play (e.g. pairwise
// similarity scans over the whole graph).
std::vector<double> general_profile(const SnapshotStats& stats,
                                    const std::string& author);

double distance(const std::vector<double>& a, const std::vector<double>& b);

// Reciprocal distance, clamped to kSimCap when the profiles coincide.
double similarity(const std::vector<double>& a, const std::vector<double>& b);

struct SimilarityBin {
  double bin_low = 0;
  double bin_high = 0;
  long long pair_count = 0;
  long long edge_count = 0;
  double conditional_edge_probability = 0;
};

// P(edge | similarity bin) over all node pairs of the graph, plus raw edge
// counts per bin.
std::vector<SimilarityBin> similarity_edge_stats(
    const CoauthorGraph& graph,
    const std::map<std::string, std::vector<double>>& profiles,
    double bin_width);

}  // namespace circles
