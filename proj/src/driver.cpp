#include "circles/driver.hpp"

#include <atomic>
#include <thread>

#include "circles/ego.hpp"
#include "circles/rng.hpp"

namespace circles {

std::vector<EgoDetection> detect_circles(const CoauthorGraph& graph,
                                         const SnapshotStats& stats,
                                         int min_alters,
                                         const OptimizerConfig& base_config,
                                         std::uint64_t seed, int threads) {
  const auto egos = enumerate_egos(graph, min_alters);
  std::vector<EgoDetection> detections(egos.size());

  std::atomic<std::size_t> cursor{0};
  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= egos.size()) return;
      const auto& net = egos[i];
      std::vector<std::vector<double>> profiles;
      profiles.reserve(net.alters.size());
      for (const auto& alter : net.alters)
        profiles.push_back(profile(stats, net.ego_id, alter));

      OptimizerConfig config = base_config;
      config.rng_seed = seed ^ fnv1a64(net.ego_id);
      config.record_trace = false;
      const auto result = detect(net, profiles, config);
      detections[i] = EgoDetection{net, result.circles, result.log_likelihood,
                                   result.iterations};
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return detections;
}

}  // namespace circles
