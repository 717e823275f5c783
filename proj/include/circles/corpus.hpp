#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace circles {

struct PaperRecord {
  std::string paper_id;
  int year = 0;
  int field_id = 0;
  long long citation_count = 0;
  std::vector<std::string> author_ids;
};

struct DecadeBin {
  int first_year = 0;
  int last_year = 0;
};

// Field list and decade bins shared by every feature computation. The profile
// layout is frozen at 24 fields and 5 decade bins; the config may rename the
// fields but not change the counts.
struct CorpusConfig {
  std::vector<std::string> field_names;
  std::vector<DecadeBin> decade_bins;
  int min_year = 1960;
  int max_year = 2009;

  static CorpusConfig defaults();
  // INI-style file with [fields] names=..., [decades] bins=..., [years] range=...
  static CorpusConfig from_file(const std::string& path);
  void validate() const;
};

class PaperCorpus {
 public:
  PaperCorpus() : config_(CorpusConfig::defaults()) {}
  PaperCorpus(std::vector<PaperRecord> papers, CorpusConfig config);

  const std::vector<PaperRecord>& papers() const { return papers_; }
  const CorpusConfig& config() const { return config_; }
  std::size_t size() const { return papers_.size(); }

  // Index of the decade bin containing `year`, or -1 when outside all bins.
  int decade_bin_of(int year) const;

 private:
  std::vector<PaperRecord> papers_;
  CorpusConfig config_;
};

enum class CorpusFormat { kCsv, kJsonl };

// CSV columns: paper_id,year,field_id,citation_count,author_ids with the
// author list semicolon-separated. JSONL carries the same keys per line.
PaperCorpus load_corpus(const std::string& path, CorpusFormat format,
                        const CorpusConfig& config = CorpusConfig::defaults());

PaperCorpus parse_corpus_csv(const std::string& text, const CorpusConfig& config);

void save_corpus_csv(const PaperCorpus& corpus, const std::string& path);

// Papers with year <= cutoff_year, in corpus order.
PaperCorpus snapshot(const PaperCorpus& corpus, int cutoff_year);

struct CoauthorGraph {
  struct EdgeInfo {
    int first_year = 0;
    int paper_count = 0;
  };

  std::vector<std::string> nodes;            // sorted author ids
  std::vector<std::vector<int>> adjacency;   // sorted neighbor indices
  std::map<std::pair<int, int>, EdgeInfo> edge_info;  // keyed (min,max)

  int index_of(const std::string& author) const;
  bool has_edge(int x, int y) const;
  std::size_t node_count() const { return nodes.size(); }
  std::size_t edge_count() const { return edge_info.size(); }
  int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
};

// Simple graph over authors; an edge per pair that shares at least one paper.
CoauthorGraph build_graph(const PaperCorpus& corpus);

}  // namespace circles
