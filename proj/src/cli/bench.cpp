#include "cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "bigmeans/algorithms.hpp"
#include "dataio/csv.hpp"
#include "mssc/kmeans.hpp"
#include "vls/rng.hpp"

namespace cli {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

} // namespace

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of an empty list");
    std::sort(values.begin(), values.end());
    const auto mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

double best_of_restarts(const mssc::Dataset& data, std::size_t clusters, int restarts, std::uint64_t seed,
                        const mssc::KMeansOptions& kmeans) {
    if (restarts < 1) throw std::invalid_argument("need at least one restart");
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        auto rng = vls::make_stream(seed, static_cast<std::uint64_t>(r), vls::Stream::init);
        const auto init = mssc::kmeanspp_init(data.view(), clusters, rng);
        best = std::min(best, mssc::kmeans(data.view(), init, kmeans).objective);
    }
    return best;
}

BenchReport run_benchmark(const mssc::Dataset& data, const BenchOptions& options) {
    if (options.runs < 1) throw std::invalid_argument("need at least one run");
    BenchReport report;
    report.algorithm = bigmeans::to_string(options.algorithm.algorithm);
    for (int r = 0; r < options.runs; ++r) {
        BenchRow row;
        row.seed = options.seed_base + static_cast<std::uint64_t>(r);

        auto cfg = options.algorithm;
        cfg.seed = row.seed;
        auto start = Clock::now();
        const auto result = bigmeans::cluster(data, cfg);
        row.algorithm_ms = ms_since(start);
        row.algorithm_objective = result.objective;
        row.history = dataio::history_rows(result.record);

        start = Clock::now();
        row.baseline_objective = best_of_restarts(data, cfg.clusters, options.restarts, row.seed, cfg.kmeans);
        row.baseline_ms = ms_since(start);
        row.relative_gap = (row.algorithm_objective - row.baseline_objective) / row.baseline_objective;
        report.rows.push_back(std::move(row));
    }

    std::vector<double> alg, alg_ms, base, base_ms, gap;
    for (const auto& row : report.rows) {
        alg.push_back(row.algorithm_objective);
        alg_ms.push_back(row.algorithm_ms);
        base.push_back(row.baseline_objective);
        base_ms.push_back(row.baseline_ms);
        gap.push_back(row.relative_gap);
    }
    auto& s = report.summary;
    s.algorithm_median = median(alg);
    s.algorithm_best = *std::min_element(alg.begin(), alg.end());
    s.algorithm_median_ms = median(alg_ms);
    s.baseline_median = median(base);
    s.baseline_best = *std::min_element(base.begin(), base.end());
    s.baseline_median_ms = median(base_ms);
    s.median_gap = median(gap);
    return report;
}

std::string format_table(const BenchReport& report) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-8s %16s %12s %16s %12s %12s\n", "seed", report.algorithm.c_str(), "ms",
                  "baseline", "ms", "rel_gap");
    out << line;
    for (const auto& r : report.rows) {
        std::snprintf(line, sizeof line, "%-8llu %16.6f %12.3f %16.6f %12.3f %12.3e\n",
                      static_cast<unsigned long long>(r.seed), r.algorithm_objective, r.algorithm_ms,
                      r.baseline_objective, r.baseline_ms, r.relative_gap);
        out << line;
    }
    const auto& s = report.summary;
    std::snprintf(line, sizeof line, "%-8s %16.6f %12.3f %16.6f %12.3f %12.3e\n", "median", s.algorithm_median,
                  s.algorithm_median_ms, s.baseline_median, s.baseline_median_ms, s.median_gap);
    out << line;
    std::snprintf(line, sizeof line, "%-8s %16.6f %12s %16.6f %12s %12s\n", "best", s.algorithm_best, "",
                  s.baseline_best, "", "");
    out << line;
    return out.str();
}

void write_bench_artifacts(const BenchReport& report, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::ofstream table(dir / "bench_table.csv");
    if (!table) throw std::runtime_error("cannot write " + (dir / "bench_table.csv").string());
    table << "seed,algorithm_objective,algorithm_ms,baseline_objective,baseline_ms,relative_gap\n";
    for (const auto& r : report.rows) {
        table << r.seed << ',' << dataio::format_double(r.algorithm_objective) << ','
              << dataio::format_double(r.algorithm_ms) << ',' << dataio::format_double(r.baseline_objective)
              << ',' << dataio::format_double(r.baseline_ms) << ',' << dataio::format_double(r.relative_gap)
              << '\n';
        dataio::write_history_csv(r.history, dir / ("run_" + std::to_string(r.seed) + ".history.csv"));
    }
}

} // namespace cli
