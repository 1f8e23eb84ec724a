#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "bigmeans/algorithms.hpp"
#include "finalize.hpp"
#include "mssc/kernels.hpp"
#include "mssc/kmeans.hpp"
#include "mssc/problem.hpp"
#include "mssc/sample.hpp"
#include "vls/engine.hpp"

namespace bigmeans {

using Clock = std::chrono::steady_clock;

ImprovementHistory improvement_history(const vls::RunRecord& record) {
    ImprovementHistory out;
    for (const auto& it : record.iterations)
        if (it.improved) out.push_back({it.t, it.sample_size, it.objective});
    return out;
}

std::size_t select_s_opt(std::span<const ImprovementHistory> histories, std::size_t fallback) {
    std::map<std::size_t, std::size_t> counts;
    for (const auto& h : histories)
        for (const auto& r : h) ++counts[r.sample_size];
    if (counts.empty()) return fallback;
    std::size_t best_size = 0;
    std::size_t best_count = 0;
    for (const auto& [size, count] : counts) {
        // Ascending sizes, so >= lets the larger size win ties.
        if (count >= best_count) {
            best_count = count;
            best_size = size;
        }
    }
    return best_size;
}

WorkerRun big_means_worker(const mssc::Dataset& data, const BigMeansConfig& cfg, int worker,
                           BestBoard* board) {
    const auto w = static_cast<std::uint64_t>(worker);
    vls::Rng sample_rng = vls::make_stream(cfg.seed, w, vls::Stream::data_shake);
    vls::Rng init_rng = vls::make_stream(cfg.seed, w, vls::Stream::init);

    WorkerRun run;
    run.centroids = mssc::CentroidSet::degenerate(cfg.clusters, data.cols());
    run.f_hat = std::numeric_limits<double>::infinity();
    run.record.worker = w;

    const auto start = Clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    };

    for (std::int64_t t = 0; t < cfg.iterations; ++t) {
        if (cfg.max_seconds && elapsed_ms() >= *cfg.max_seconds * 1000.0) break;

        const auto sample = mssc::resolve(data, mssc::draw_sample(data, cfg.sample_size, sample_rng));
        const auto X = sample.view();
        if (mssc::reseed_degenerate(run.centroids, X, init_rng).used_fallback)
            ++run.record.seeding_fallbacks;

        auto result = mssc::kmeans(X, run.centroids, cfg.kmeans);
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
        rec.k = 0;
        rec.k_next = 0;
        rec.sample_size = sample.size();
        rec.formulation_id = 0;
        rec.candidate_objective = result.objective;
        rec.objective = run.f_hat;
        rec.improved = improved;
        rec.elapsed_ms = elapsed_ms();
        run.record.iterations.push_back(rec);
    }
    run.record.wall_ms = elapsed_ms();
    return run;
}

vls::VlsConfig bigmeans_vls_config(const BigMeansConfig& cfg) {
    vls::VlsConfig vc;
    vc.powers = {vls::PowerRange{0, 0}, vls::PowerRange{0, 0}};
    vc.quotas = {1, 0};
    vc.max_iterations = cfg.iterations;
    vc.max_seconds = cfg.max_seconds;
    vc.seed = cfg.seed;
    vc.workers = cfg.workers;
    vc.reference = cfg.reevaluate_incumbent ? vls::IncumbentReference::shaken_landscape
                                            : vls::IncumbentReference::recorded_best;
    return vc;
}

WorkerRun big_means_via_bvls(const mssc::Dataset& data, const BigMeansConfig& cfg, int worker) {
    validate(cfg, data.rows());
    mssc::MsscProblem problem(data, mssc::SampleNeighborhood::fixed(data.rows(), cfg.sample_size),
                              cfg.kmeans);
    vls::FormulationSpace space;
    const auto& formulation = space.registry.add_mssc(static_cast<int>(cfg.clusters));
    auto L0 = mssc::evaluate_landscape(data, mssc::prefix_sample(data, cfg.sample_size), formulation,
                                       space.registry);
    auto result = vls::run_bvls(problem, mssc::CentroidSet::degenerate(cfg.clusters, data.cols()),
                                std::move(L0), space, bigmeans_vls_config(cfg),
                                static_cast<std::uint64_t>(worker));
    result.record.seeding_fallbacks = problem.seeding_fallbacks();
    return WorkerRun{std::move(result.x), result.f_hat, std::move(result.record)};
}

namespace detail {

void label_full_data(const mssc::Dataset& data, ClusteringResult& result) {
    const auto X = data.view();
    const auto C = result.centroids.view();
    for (const double v : C.values)
        if (!std::isfinite(v)) throw std::runtime_error("final centroids are not initialized");
    result.labels.labels.assign(data.rows(), 0);
    result.objective = mssc::omp::assign(X, C, result.labels.labels);
    result.partition_objective = mssc::partition_objective(X, result.labels, result.centroids.size());
}

ClusteringResult run_keep_the_best(const mssc::Dataset& data, const BigMeansConfig& cfg,
                                   const WorkerFn& worker) {
    const auto start = Clock::now();
    auto pool = worker_pool(cfg.workers, cfg.seed, [&](WorkerContext& ctx) {
        return worker(data, cfg, ctx.worker, &ctx.board);
    });

    ClusteringResult result;
    result.algorithm = cfg.algorithm;
    result.failures = pool.failures;
    result.board = pool.board;
    for (auto& o : pool.outcomes) result.worker_records.push_back(o ? o->record : vls::RunRecord{});
    if (pool.board.best) {
        result.best_worker = pool.board.best->owner;
        result.centroids = pool.board.best->centroids;
    } else {
        // Nothing was ever accepted (possible only when re-evaluating the
        // incumbent); fall back to the first surviving worker's state.
        const auto it = std::find_if(pool.outcomes.begin(), pool.outcomes.end(),
                                     [](const auto& o) { return o.has_value(); });
        if (it == pool.outcomes.end())
            throw std::runtime_error("all workers failed: " + pool.failures.front().message);
        result.best_worker = static_cast<int>(it - pool.outcomes.begin());
        result.centroids = (*it)->centroids;
    }
    result.record = result.worker_records[static_cast<std::size_t>(result.best_worker)];
    if (cfg.clusters > cfg.sample_size)
        result.notes.push_back("p exceeds the sample size; some centroids were seeded with replacement");
    label_full_data(data, result);
    result.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return result;
}

} // namespace detail

ClusteringResult big_means(const mssc::Dataset& data, const BigMeansConfig& cfg) {
    if (cfg.algorithm != Algorithm::bigmeans) throw std::invalid_argument("big_means: algorithm tag mismatch");
    validate(cfg, data.rows());
    return detail::run_keep_the_best(
        data, cfg, [](const mssc::Dataset& d, const BigMeansConfig& c, int w, BestBoard* b) {
            return big_means_worker(d, c, w, b);
        });
}

ClusteringResult cluster(const mssc::Dataset& data, const BigMeansConfig& cfg) {
    switch (cfg.algorithm) {
    case Algorithm::bigmeans: return big_means(data, cfg);
    case Algorithm::bigoptima: return big_optima_s3(data, cfg);
    case Algorithm::bigvns: return big_vns_clust(data, cfg);
    }
    throw std::invalid_argument("unknown algorithm");
}

} // namespace bigmeans
