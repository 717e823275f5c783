#include "circles/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "circles/profiles.hpp"

namespace circles {

double overlapping_modularity(const EgoNetwork& net,
                              const std::vector<Circle>& circles) {
  const int n = net.alter_count();
  const double m = net.edge_count();
  if (m == 0 || circles.empty()) return 0.0;

  std::vector<int> degree(n, 0);
  std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
  for (const auto& [a, b] : net.edges) {
    ++degree[a];
    ++degree[b];
    adj[a][b] = adj[b][a] = 1;
  }

  std::vector<int> memberships(n, 0);
  for (const auto& c : circles)
    for (int y : c.members) ++memberships[y];

  const double two_m = 2.0 * m;
  double q = 0.0;
  for (const auto& c : circles) {
    for (int i : c.members) {
      for (int j : c.members) {
        const double a_ij = i == j ? 0.0 : static_cast<double>(adj[i][j]);
        q += (a_ij - degree[i] * degree[j] / two_m) /
             (static_cast<double>(memberships[i]) * memberships[j]);
      }
    }
  }
  return q / two_m;
}

std::optional<double> cliquishness(const EgoNetwork& net,
                                   const Circle& circle) {
  const int s = circle.size();
  if (s < 2) return std::nullopt;
  int within = 0;
  for (const auto& [a, b] : net.edges)
    if (circle.contains(a) && circle.contains(b)) ++within;
  return static_cast<double>(within) / (s * (s - 1) / 2.0);
}

double homogeneity_from_fields(const std::vector<int>& member_fields) {
  if (member_fields.empty())
    throw std::invalid_argument("homogeneity: empty circle");
  std::map<int, int> counts;
  for (int f : member_fields) ++counts[f];
  double entropy = 0.0;
  const double total = static_cast<double>(member_fields.size());
  for (const auto& [field, count] : counts) {
    const double frac = count / total;
    entropy -= frac * std::log(frac);
  }
  return 1.0 / (1.0 + entropy);
}

int field_label_from_fields(const std::vector<int>& member_fields) {
  if (member_fields.empty())
    throw std::invalid_argument("field_label: empty circle");
  std::map<int, int> counts;
  for (int f : member_fields) ++counts[f];
  int best_field = counts.begin()->first;
  int best_count = counts.begin()->second;
  for (const auto& [field, count] : counts) {
    if (count > best_count) {  // map order gives lowest index on ties
      best_field = field;
      best_count = count;
    }
  }
  return best_field;
}

namespace {

std::vector<int> fields_of(const EgoNetwork& net, const Circle& circle,
                           const std::map<std::string, int>& major_fields) {
  std::vector<int> fields;
  fields.reserve(circle.members.size());
  for (int y : circle.members) {
    const auto it = major_fields.find(net.alters[y]);
    if (it == major_fields.end())
      throw std::runtime_error("no major field for alter " + net.alters[y]);
    fields.push_back(it->second);
  }
  return fields;
}

}  // namespace

double homogeneity(const EgoNetwork& net, const Circle& circle,
                   const std::map<std::string, int>& major_fields) {
  return homogeneity_from_fields(fields_of(net, circle, major_fields));
}

int field_label(const EgoNetwork& net, const Circle& circle,
                const std::map<std::string, int>& major_fields) {
  return field_label_from_fields(fields_of(net, circle, major_fields));
}

CitationBand citation_band(long long citations) {
  if (citations > 100) return CitationBand::kHigh;
  if (citations >= 30) return CitationBand::kMedium;
  return CitationBand::kLow;
}

int homogeneity_zone(long long citations) {
  if (citations > 200) return 0;
  if (citations > 100) return 1;
  if (citations > 30) return 2;
  return 3;
}

SummaryTables summarize(const std::vector<EgoDetection>& detections,
                        const std::map<std::string, long long>& citations,
                        const std::map<std::string, int>& major_fields) {
  if (detections.empty())
    throw std::invalid_argument("summarize: no detections");

  SummaryTables t;
  t.egos_total = static_cast<long long>(detections.size());

  // How many circles (over every detection) each author is a member of.
  std::map<std::string, int> membership_counts;
  for (const auto& det : detections)
    for (const auto& c : det.circles)
      for (int y : c.members) ++membership_counts[det.net.alters[y]];

  const auto citations_of = [&](const std::string& author) -> long long {
    const auto it = citations.find(author);
    return it == citations.end() ? 0 : it->second;
  };

  double qov_sum = 0.0;
  long long band_count[3] = {0, 0, 0};
  double band_circles[3] = {0, 0, 0}, band_size[3] = {0, 0, 0};
  double band_cliq[3] = {0, 0, 0}, band_members[3] = {0, 0, 0};
  long long band_cliq_n[3] = {0, 0, 0}, band_size_n[3] = {0, 0, 0};
  double zone_h[4] = {0, 0, 0, 0};

  for (const auto& det : detections) {
    SummaryTables::AuthorRow row;
    row.author = det.net.ego_id;
    row.citations = citations_of(det.net.ego_id);
    row.circle_count = static_cast<int>(det.circles.size());
    const auto mit = membership_counts.find(det.net.ego_id);
    row.memberships = mit == membership_counts.end() ? 0 : mit->second;

    const int band = static_cast<int>(citation_band(row.citations));
    const int zone = homogeneity_zone(row.citations);
    ++band_count[band];
    band_circles[band] += row.circle_count;
    band_members[band] += row.memberships;
    ++t.circles_per_ego[row.circle_count];

    if (!det.circles.empty()) {
      ++t.egos_with_circles;
      qov_sum += overlapping_modularity(det.net, det.circles);
    }

    double size_sum = 0.0, cliq_sum = 0.0, h_sum = 0.0;
    long long cliq_n = 0;
    for (const auto& c : det.circles) {
      size_sum += c.size();
      ++t.size_distribution[c.size()];
      const auto cq = cliquishness(det.net, c);
      if (cq) {
        cliq_sum += *cq;
        ++cliq_n;
        const int bin = std::min(19, static_cast<int>(*cq / 0.05));
        ++t.cliquishness_histogram[bin];
        auto& by_size = t.cliquishness_by_size[c.size()];
        by_size.first += *cq;
        ++by_size.second;
      }
      const double h = homogeneity(det.net, c, major_fields);
      h_sum += h;
      zone_h[zone] += h;
      ++t.zone_circle_counts[zone];
    }
    if (!det.circles.empty()) {
      row.mean_size = size_sum / det.circles.size();
      row.mean_homogeneity = h_sum / det.circles.size();
      band_size[band] += row.mean_size;
      ++band_size_n[band];
    }
    if (cliq_n > 0) {
      row.mean_cliquishness = cliq_sum / cliq_n;
      band_cliq[band] += row.mean_cliquishness;
      ++band_cliq_n[band];
    }

    // Baseline grouping by major research field, for the comparison table.
    {
      std::map<int, Circle> by_field;
      for (int y = 0; y < det.net.alter_count(); ++y) {
        const auto it = major_fields.find(det.net.alters[y]);
        if (it != major_fields.end()) by_field[it->second].members.push_back(y);
      }
      double sum = 0.0;
      long long count = 0;
      for (const auto& [field, circle] : by_field) {
        const auto cq = cliquishness(det.net, circle);
        if (cq) {
          sum += *cq;
          ++count;
        }
      }
      row.mean_field_cliquishness = count > 0 ? sum / count : 0.0;
    }

    // Fraction of this ego's circles labeled with each field.
    if (!det.circles.empty()) {
      SummaryTables::FieldFractionRow fr;
      fr.author = det.net.ego_id;
      fr.band = citation_band(row.citations);
      fr.fractions.assign(kFieldCount, 0.0);
      for (const auto& c : det.circles)
        fr.fractions[field_label(det.net, c, major_fields)] += 1.0;
      for (auto& f : fr.fractions) f /= static_cast<double>(det.circles.size());
      t.field_fractions.push_back(std::move(fr));
    }

    t.author_rows.push_back(std::move(row));
  }

  for (int b = 0; b < 3; ++b) {
    auto& agg = t.bands[b];
    agg.egos = band_count[b];
    if (band_count[b] > 0) {
      agg.mean_circle_count = band_circles[b] / band_count[b];
      agg.mean_memberships = band_members[b] / band_count[b];
    }
    if (band_size_n[b] > 0) agg.mean_circle_size = band_size[b] / band_size_n[b];
    if (band_cliq_n[b] > 0) agg.mean_cliquishness = band_cliq[b] / band_cliq_n[b];
  }
  for (int z = 0; z < 4; ++z)
    if (t.zone_circle_counts[z] > 0)
      t.mean_homogeneity_by_zone[z] = zone_h[z] / t.zone_circle_counts[z];

  t.mean_qov = t.egos_with_circles > 0 ? qov_sum / t.egos_with_circles : 0.0;
  return t;
}

}  // namespace circles
