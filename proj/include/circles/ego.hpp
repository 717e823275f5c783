#pragma once

#include <string>
#include <utility>
#include <vector>

#include "circles/corpus.hpp"

namespace circles {

// Induced subgraph on one author's neighbors. The ego itself is excluded, so
// edges only connect alters that also coauthored with each other.
struct EgoNetwork {
  std::string ego_id;
  std::vector<std::string> alters;           // sorted author ids
  std::vector<std::pair<int, int>> edges;    // (i, j) alter indices, i < j

  int alter_count() const { return static_cast<int>(alters.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

EgoNetwork ego_network(const CoauthorGraph& graph, const std::string& ego);

// One network per node with at least min_alters neighbors, in node-id order.
std::vector<EgoNetwork> enumerate_egos(const CoauthorGraph& graph,
                                       int min_alters);

}  // namespace circles
