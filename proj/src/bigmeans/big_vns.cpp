#include <chrono>
#include <limits>
#include <stdexcept>

#include "bigmeans/algorithms.hpp"
#include "finalize.hpp"
#include "mssc/kernels.hpp"
#include "mssc/kmeans.hpp"
#include "mssc/sample.hpp"
#include "vls/neighborhood.hpp"

namespace bigmeans {

mssc::SeedingReport shake_solution(mssc::CentroidSet& centroids, mssc::MatrixView X, int k, vls::Rng& rng) {
    if (k < 0 || static_cast<std::size_t>(k) > centroids.size())
        throw std::invalid_argument("solution shake power outside [0, p]");
    if (k == 0) return {};
    for (const auto j : mssc::draw_indices(centroids.size(), static_cast<std::size_t>(k), rng))
        centroids.mark_degenerate(j);
    return mssc::reseed_degenerate(centroids, X, rng);
}

WorkerRun big_vns_worker(const mssc::Dataset& data, const BigMeansConfig& cfg, int worker,
                         BestBoard* board) {
    using Clock = std::chrono::steady_clock;
    const auto w = static_cast<std::uint64_t>(worker);
    vls::Rng sample_rng = vls::make_stream(cfg.seed, w, vls::Stream::data_shake);
    vls::Rng init_rng = vls::make_stream(cfg.seed, w, vls::Stream::init);
    vls::Rng shake_rng = vls::make_stream(cfg.seed, w, vls::Stream::solution_shake);

    WorkerRun run;
    run.centroids = mssc::CentroidSet::degenerate(cfg.clusters, data.cols());
    run.f_hat = std::numeric_limits<double>::infinity();
    run.record.worker = w;

    const auto start = Clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    };

    int k = cfg.shake_min;
    for (std::int64_t t = 0; t < cfg.iterations; ++t) {
        if (cfg.max_seconds && elapsed_ms() >= *cfg.max_seconds * 1000.0) break;

        const auto sample = mssc::resolve(data, mssc::draw_sample(data, cfg.sample_size, sample_rng));
        const auto X = sample.view();
        if (mssc::reseed_degenerate(run.centroids, X, init_rng).used_fallback)
            ++run.record.seeding_fallbacks;

        mssc::CentroidSet start_point = run.centroids;
        if (shake_solution(start_point, X, k, shake_rng).used_fallback) ++run.record.seeding_fallbacks;

        auto result = mssc::kmeans(X, start_point, cfg.kmeans);
        const double reference = cfg.reevaluate_incumbent
                                     ? mssc::omp::objective(X, run.centroids.view())
                                     : run.f_hat;
        const bool improved = result.objective < reference;
        if (improved) {
            run.centroids = std::move(result.centroids);
            run.f_hat = result.objective;
            if (board) board->publish(run.centroids, run.f_hat, worker);
        } else {
            ++run.record.unsuccessful;
        }

        vls::IterationRecord rec;
        rec.t = t;
        rec.phase = vls::Phase::data;
        rec.k = k;
        k = vls::neighborhood_change_cyclic(k, cfg.shake_min, cfg.shake_max);
        rec.k_next = k;
        rec.sample_size = sample.size();
        rec.candidate_objective = result.objective;
        rec.objective = run.f_hat;
        rec.improved = improved;
        rec.elapsed_ms = elapsed_ms();
        run.record.iterations.push_back(rec);
    }
    run.record.wall_ms = elapsed_ms();
    return run;
}

ClusteringResult big_vns_clust(const mssc::Dataset& data, const BigMeansConfig& cfg) {
    if (cfg.algorithm != Algorithm::bigvns) throw std::invalid_argument("big_vns_clust: algorithm tag mismatch");
    validate(cfg, data.rows());
    return detail::run_keep_the_best(
        data, cfg, [](const mssc::Dataset& d, const BigMeansConfig& c, int w, BestBoard* b) {
            return big_vns_worker(d, c, w, b);
        });
}

} // namespace bigmeans
