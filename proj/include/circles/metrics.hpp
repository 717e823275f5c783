#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circles/ego.hpp"
#include "circles/model.hpp"

namespace circles {

// Extended modularity with belonging coefficients 1/(O_i O_j), the usual
// overlapping generalization of Newman's Q: the inner sum runs over all
// ordered member pairs of a circle including i = j, so a disjoint cover
// reproduces the classic value. Nodes outside every circle are skipped and
// an edgeless network scores 0.
double overlapping_modularity(const EgoNetwork& net,
                              const std::vector<Circle>& circles);

// Within-circle edge density. Circles of fewer than two members carry no
// density and are excluded rather than failed.
std::optional<double> cliquishness(const EgoNetwork& net, const Circle& circle);

// 1 / (1 - sum F log F) over the member major-field fractions, natural log.
double homogeneity_from_fields(const std::vector<int>& member_fields);
double homogeneity(const EgoNetwork& net, const Circle& circle,
                   const std::map<std::string, int>& major_fields);

// Modal major field of the members; lowest index wins ties.
int field_label_from_fields(const std::vector<int>& member_fields);
int field_label(const EgoNetwork& net, const Circle& circle,
                const std::map<std::string, int>& major_fields);

// Citation bands: more than 100 highly cited, 30..100 medium, below 30 low.
enum class CitationBand { kLow = 0, kMedium = 1, kHigh = 2 };
CitationBand citation_band(long long citations);

// Finer four-zone split used for the homogeneity breakdown.
int homogeneity_zone(long long citations);  // 0: >200, 1: 101-200, 2: 31-100, 3: <=30

struct EgoDetection {
  EgoNetwork net;
  std::vector<Circle> circles;
  double log_likelihood = 0.0;
  long long iterations = 0;
};

struct BandAggregate {
  long long egos = 0;
  double mean_circle_count = 0;
  double mean_circle_size = 0;
  double mean_cliquishness = 0;
  double mean_memberships = 0;
};

struct SummaryTables {
  // One row per ego: the data behind the author-specific plots.
  struct AuthorRow {
    std::string author;
    long long citations = 0;
    int circle_count = 0;
    double mean_size = 0;
    double mean_cliquishness = 0;  // over circles of size >= 2
    int memberships = 0;           // circles of other egos containing the author
    double mean_homogeneity = 0;
    double mean_field_cliquishness = 0;  // circles formed from major fields
  };
  std::vector<AuthorRow> author_rows;

  std::map<int, long long> size_distribution;            // circle size -> count
  std::map<int, long long> cliquishness_histogram;       // bin of width 0.05 -> count
  std::map<int, std::pair<double, long long>> cliquishness_by_size;
  std::map<int, long long> circles_per_ego;              // k circles -> egos

  BandAggregate bands[3];
  double mean_homogeneity_by_zone[4] = {0, 0, 0, 0};
  long long zone_circle_counts[4] = {0, 0, 0, 0};

  // Per ego: fraction of circles labeled with each field (heat-map data).
  struct FieldFractionRow {
    std::string author;
    CitationBand band = CitationBand::kLow;
    std::vector<double> fractions;  // kFieldCount entries
  };
  std::vector<FieldFractionRow> field_fractions;

  double mean_qov = 0.0;        // over egos with at least one circle
  long long egos_total = 0;
  long long egos_with_circles = 0;
};

// Descriptive statistics over a batch of detections. citations and
// major_fields are per-author lookups from the snapshot the detections were
// computed on.
SummaryTables summarize(const std::vector<EgoDetection>& detections,
                        const std::map<std::string, long long>& citations,
                        const std::map<std::string, int>& major_fields);

}  // namespace circles
