#include "circles/ego.hpp"

#include <algorithm>
#include <stdexcept>

namespace circles {

namespace {

EgoNetwork extract(const CoauthorGraph& graph, int ego_index) {
  EgoNetwork net;
  net.ego_id = graph.nodes[ego_index];
  const auto& nbrs = graph.adjacency[ego_index];

  // Neighbor lists are sorted by node index and nodes are sorted by id, so
  // the alters come out in lexicographic id order.
  std::vector<int> alter_nodes(nbrs.begin(), nbrs.end());
  net.alters.reserve(alter_nodes.size());
  for (int v : alter_nodes) net.alters.push_back(graph.nodes[v]);

  for (std::size_t i = 0; i < alter_nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < alter_nodes.size(); ++j) {
      if (graph.has_edge(alter_nodes[i], alter_nodes[j]))
        net.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return net;
}

}  // namespace

EgoNetwork ego_network(const CoauthorGraph& graph, const std::string& ego) {
  const int idx = graph.index_of(ego);
  if (idx < 0) throw std::runtime_error("unknown ego id: " + ego);
  return extract(graph, idx);
}

std::vector<EgoNetwork> enumerate_egos(const CoauthorGraph& graph,
                                       int min_alters) {
  if (min_alters < 0) throw std::invalid_argument("min_alters must be >= 0");
  std::vector<EgoNetwork> out;
  for (std::size_t v = 0; v < graph.node_count(); ++v) {
    if (graph.degree(static_cast<int>(v)) < min_alters) continue;
    out.push_back(extract(graph, static_cast<int>(v)));
  }
  return out;
}

}  // namespace circles
