#include <chrono>
#include <stdexcept>
#include <string>

#include "bigmeans/algorithms.hpp"
#include "finalize.hpp"
#include "mssc/kernels.hpp"
#include "mssc/problem.hpp"
#include "mssc/sample.hpp"
#include "vls/engine.hpp"

namespace bigmeans {

vls::VlsConfig bigoptima_vls_config(const BigMeansConfig& cfg) {
    vls::VlsConfig vc;
    vc.powers = {vls::PowerRange{0, 0}, vls::PowerRange{0, 0}};
    vc.quotas = {cfg.phase_iterations, 0};
    // First shake of each data phase spans [s_min, s_max]; later ones keep the size.
    vc.entry_power = {vls::kUnboundedPower, std::nullopt};
    // The size drawn at phase entry holds for the whole phase, accepted or not.
    vc.shake_origin[0] = vls::ShakeOrigin::previous_shake;
    vc.max_iterations = cfg.iterations;
    vc.max_seconds = cfg.max_seconds;
    vc.seed = cfg.seed;
    vc.workers = cfg.workers;
    vc.reference = cfg.reevaluate_incumbent ? vls::IncumbentReference::shaken_landscape
                                            : vls::IncumbentReference::recorded_best;
    return vc;
}

WorkerRun big_optima_worker(const mssc::Dataset& data, const BigMeansConfig& cfg, int worker,
                            BestBoard* board) {
    using Problem = mssc::MsscProblem;
    Problem problem(data,
                    mssc::SampleNeighborhood(data.rows(), cfg.sample_min, cfg.sample_max,
                                             vls::NeighborhoodSpec::linear(vls::Axis::data, 0, 0, "abs-size")),
                    cfg.kmeans);
    vls::FormulationSpace space;
    const auto& formulation = space.registry.add_mssc(static_cast<int>(cfg.clusters));
    auto L0 = mssc::evaluate_landscape(data, mssc::prefix_sample(data, cfg.sample_max), formulation,
                                       space.registry);

    vls::BvlsObserver<Problem> observer;
    if (board) {
        observer = [board, worker](const vls::EngineState<Problem>& st, const vls::IterationRecord& rec) {
            if (rec.improved) board->publish(st.x, st.f_hat, worker);
        };
    }
    auto result = vls::run_bvls(problem, mssc::CentroidSet::degenerate(cfg.clusters, data.cols()),
                                std::move(L0), space, bigoptima_vls_config(cfg),
                                static_cast<std::uint64_t>(worker), observer);
    result.record.seeding_fallbacks = problem.seeding_fallbacks();
    return WorkerRun{std::move(result.x), result.f_hat, std::move(result.record)};
}

ClusteringResult big_optima_s3(const mssc::Dataset& data, const BigMeansConfig& cfg) {
    using Clock = std::chrono::steady_clock;
    if (cfg.algorithm != Algorithm::bigoptima) throw std::invalid_argument("big_optima_s3: algorithm tag mismatch");
    validate(cfg, data.rows());
    const auto start = Clock::now();

    auto search = worker_pool(cfg.workers, cfg.seed, [&](WorkerContext& ctx) {
        return big_optima_worker(data, cfg, ctx.worker, &ctx.board);
    });

    ClusteringResult result;
    result.algorithm = cfg.algorithm;
    result.failures = search.failures;
    std::vector<ImprovementHistory> histories;
    for (auto& o : search.outcomes) {
        result.worker_records.push_back(o ? o->record : vls::RunRecord{});
        if (o) histories.push_back(improvement_history(o->record));
    }
    if (histories.empty())
        throw std::runtime_error("all workers failed: " + search.failures.front().message);

    result.s_opt = select_s_opt(histories, cfg.sample_max);
    bool any_improvement = false;
    for (const auto& h : histories) any_improvement = any_improvement || !h.empty();
    if (!any_improvement)
        result.notes.push_back("empty improvement history; s_opt falls back to s_max = " +
                               std::to_string(cfg.sample_max));
    if (cfg.clusters > cfg.sample_min)
        result.notes.push_back("p exceeds s_min; some centroids may be seeded with replacement");

    // One realization of the s_opt landscape, scored by every surviving worker.
    vls::Rng final_rng = vls::make_stream(cfg.seed, 0, vls::Stream::final_selection);
    const auto final_sample = mssc::resolve(data, mssc::draw_sample(data, result.s_opt, final_rng));
    auto selection = worker_pool(cfg.workers, cfg.seed, [&](WorkerContext& ctx) {
        const auto& outcome = search.outcomes[static_cast<std::size_t>(ctx.worker)];
        if (!outcome) throw std::runtime_error("worker failed during search");
        const double f = final_sample.size() == 0
                             ? 0.0
                             : mssc::omp::objective(final_sample.view(), outcome->centroids.view());
        ctx.board.publish(outcome->centroids, f, ctx.worker);
        return f;
    });

    result.board = selection.board;
    if (!selection.board.best) throw std::runtime_error("no worker could be scored on the s_opt landscape");
    result.best_worker = selection.board.best->owner;
    result.centroids = selection.board.best->centroids;
    result.record = result.worker_records[static_cast<std::size_t>(result.best_worker)];
    detail::label_full_data(data, result);
    result.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return result;
}

} // namespace bigmeans
