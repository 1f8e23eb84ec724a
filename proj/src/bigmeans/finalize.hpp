#pragma once

#include <functional>

#include "bigmeans/algorithms.hpp"

namespace bigmeans::detail {

using WorkerFn = std::function<WorkerRun(const mssc::Dataset&, const BigMeansConfig&, int, BestBoard*)>;

/// Runs cfg.workers copies of `worker` on the pool, takes the board's best
/// centroids and labels the full dataset.
ClusteringResult run_keep_the_best(const mssc::Dataset& data, const BigMeansConfig& cfg,
                                   const WorkerFn& worker);

/// Full-data labeling and objectives for the chosen centroids.
void label_full_data(const mssc::Dataset& data, ClusteringResult& result);

} // namespace bigmeans::detail
