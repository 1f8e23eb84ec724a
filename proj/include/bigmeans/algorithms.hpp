#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bigmeans/board.hpp"
#include "bigmeans/config.hpp"
#include "mssc/centroids.hpp"
#include "mssc/kmeans.hpp"
#include "mssc/matrix.hpp"
#include "vls/run_record.hpp"
#include "vls/types.hpp"

namespace bigmeans {

struct ImprovementRecord {
    std::int64_t t = 0;
    std::size_t sample_size = 0;
    double objective = 0.0;
};
using ImprovementHistory = std::vector<ImprovementRecord>;

/// Rows of a trace where the incumbent improved.
ImprovementHistory improvement_history(const vls::RunRecord& record);

/// Sample size occurring most often across all improvement histories; ties
/// go to the larger size. Returns `fallback` when every history is empty.
std::size_t select_s_opt(std::span<const ImprovementHistory> histories, std::size_t fallback);

/// Final state of one worker.
struct WorkerRun {
    mssc::CentroidSet centroids;
    double f_hat = 0.0;
    vls::RunRecord record;
};

struct ClusteringResult {
    Algorithm algorithm = Algorithm::bigmeans;
    mssc::CentroidSet centroids;
    /// Nearest-centroid labels for every row of the full dataset.
    mssc::LabelAssignment labels;
    /// f(C, full data).
    double objective = 0.0;
    /// Within-cluster sum of squares of `labels` around their own means.
    double partition_objective = 0.0;
    int best_worker = 0;
    /// Trace of the selected worker.
    vls::RunRecord record;
    /// Per-worker traces; empty for failed workers.
    std::vector<vls::RunRecord> worker_records;
    std::vector<WorkerFailure> failures;
    BoardSnapshot board;
    /// Sample size of the final evaluation landscape (bigoptima only).
    std::size_t s_opt = 0;
    std::vector<std::string> notes;
    double wall_ms = 0.0;
};

/// Big-means: keep-the-best K-means over fresh uniform samples of size s,
/// repairing degenerate centroids with K-means++ before each local search,
/// then labels the full dataset.
ClusteringResult big_means(const mssc::Dataset& data, const BigMeansConfig& cfg);

/// BigOptimaS3: W BVLS workers over sample sizes in [s_min, s_max]. Each data
/// phase opens with a shake over the whole size range and continues at that
/// size; the final centroids come from the worker that scores best on one
/// landscape of the most productive sample size.
ClusteringResult big_optima_s3(const mssc::Dataset& data, const BigMeansConfig& cfg);

/// BigVNSClust: Big-means plus a solution shake that re-seeds k incumbent
/// centroids on the current sample, k advancing cyclically every iteration.
ClusteringResult big_vns_clust(const mssc::Dataset& data, const BigMeansConfig& cfg);

/// Dispatch on cfg.algorithm.
ClusteringResult cluster(const mssc::Dataset& data, const BigMeansConfig& cfg);

/// One Big-means worker, written directly as the sample/repair/K-means/keep
/// loop. Publishes every acceptance to `board` when given.
WorkerRun big_means_worker(const mssc::Dataset& data, const BigMeansConfig& cfg, int worker,
                           BestBoard* board = nullptr);

/// One Big-means worker expressed as a BVLS run with s_min = s_max = s,
/// K^1 = [0, 0] and S = (1, 0).
WorkerRun big_means_via_bvls(const mssc::Dataset& data, const BigMeansConfig& cfg, int worker);

/// Engine configuration for the Big-means parameter block.
vls::VlsConfig bigmeans_vls_config(const BigMeansConfig& cfg);
/// Engine configuration for one BigOptimaS3 worker.
vls::VlsConfig bigoptima_vls_config(const BigMeansConfig& cfg);

/// One BigOptimaS3 worker (a BVLS run).
WorkerRun big_optima_worker(const mssc::Dataset& data, const BigMeansConfig& cfg, int worker,
                            BestBoard* board = nullptr);

/// BigVNSClust solution shake: flags k centroids chosen uniformly without
/// replacement as degenerate and re-seeds them with K-means++ on X. k = 0
/// leaves the set unchanged and draws nothing.
mssc::SeedingReport shake_solution(mssc::CentroidSet& centroids, mssc::MatrixView X, int k, vls::Rng& rng);

/// One BigVNSClust worker.
WorkerRun big_vns_worker(const mssc::Dataset& data, const BigMeansConfig& cfg, int worker,
                         BestBoard* board = nullptr);

} // namespace bigmeans
