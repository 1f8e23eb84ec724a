#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "bigmeans/config.hpp"
#include "dataio/result.hpp"
#include "mssc/matrix.hpp"

namespace cli {

struct BenchOptions {
    /// Algorithm under test; `seed` is replaced per run.
    bigmeans::BigMeansConfig algorithm;
    /// Runs use seeds seed_base, seed_base + 1, ...
    int runs = 10;
    std::uint64_t seed_base = 1;
    /// Full-data K-means++ restarts per baseline run.
    int restarts = 10;
};

struct BenchRow {
    std::uint64_t seed = 0;
    double algorithm_objective = 0.0;
    double algorithm_ms = 0.0;
    double baseline_objective = 0.0;
    double baseline_ms = 0.0;
    /// (algorithm - baseline) / baseline.
    double relative_gap = 0.0;
    std::vector<dataio::HistoryRow> history;
};

struct BenchSummary {
    double algorithm_median = 0.0;
    double algorithm_best = 0.0;
    double algorithm_median_ms = 0.0;
    double baseline_median = 0.0;
    double baseline_best = 0.0;
    double baseline_median_ms = 0.0;
    double median_gap = 0.0;
};

struct BenchReport {
    std::string algorithm;
    std::vector<BenchRow> rows;
    BenchSummary summary;
};

double median(std::vector<double> values);

/// Best objective over `restarts` full-data K-means runs from K-means++ seeds
/// drawn on the init streams of workers 0..restarts-1 under `seed`.
double best_of_restarts(const mssc::Dataset& data, std::size_t clusters, int restarts, std::uint64_t seed,
                        const mssc::KMeansOptions& kmeans = {});

BenchReport run_benchmark(const mssc::Dataset& data, const BenchOptions& options);

/// Plain-text comparison table.
std::string format_table(const BenchReport& report);

/// Writes `bench_table.csv` and one `run_<seed>.history.csv` per run into `dir`.
void write_bench_artifacts(const BenchReport& report, const std::filesystem::path& dir);

} // namespace cli
