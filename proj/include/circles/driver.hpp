#pragma once

#include <cstdint>
#include <vector>

#include "circles/corpus.hpp"
#include "circles/metrics.hpp"
#include "circles/optimizer.hpp"
#include "circles/profiles.hpp"

namespace circles {

// Detection across a whole snapshot: one optimizer run per ego network with
// at least min_alters alters. Per-ego seeds are seed ^ fnv1a64(ego_id), so
// results do not depend on scheduling; threads > 1 fans the egos out over a
// small worker pool.
std::vector<EgoDetection> detect_circles(const CoauthorGraph& graph,
                                         const SnapshotStats& stats,
                                         int min_alters,
                                         const OptimizerConfig& base_config,
                                         std::uint64_t seed, int threads = 1);

}  // namespace circles
