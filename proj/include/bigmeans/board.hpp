#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "mssc/centroids.hpp"

namespace bigmeans {

struct BoardEntry {
    mssc::CentroidSet centroids;
    double objective = std::numeric_limits<double>::infinity();
    int owner = -1;
};

struct BoardSnapshot {
    std::optional<BoardEntry> best;
    /// Every strictly better value the board accepted, in acceptance order.
    std::vector<double> accepted;
};

/// Shared best-solution cell. A publish replaces the stored entry when its
/// objective is strictly lower, or equal with a lower owner id, so the final
/// entry does not depend on thread timing.
class BestBoard {
public:
    bool publish(const mssc::CentroidSet& centroids, double objective, int owner);
    double objective() const;
    BoardSnapshot snapshot() const;

private:
    mutable std::mutex mutex_;
    std::optional<BoardEntry> best_;
    std::vector<double> accepted_;
};

struct WorkerContext {
    int worker = 0;
    std::uint64_t seed = 0;
    BestBoard& board;
};

struct WorkerFailure {
    int worker = 0;
    std::string message;
};

template <class Outcome>
struct PoolResult {
    /// Empty for workers that failed.
    std::vector<std::optional<Outcome>> outcomes;
    std::vector<WorkerFailure> failures;
    BoardSnapshot board;
};

/// Runs `run(ctx)` for workers 0..W-1 on an OpenMP team, one worker per
/// thread. Workers share nothing but the board. A worker that throws is
/// recorded as failed; the others run to completion.
template <class Closure>
auto worker_pool(int workers, std::uint64_t seed, Closure&& run)
    -> PoolResult<std::invoke_result_t<Closure&, WorkerContext&>> {
    using Outcome = std::invoke_result_t<Closure&, WorkerContext&>;
    if (workers < 1) throw std::invalid_argument("worker pool needs W >= 1");

    BestBoard board;
    PoolResult<Outcome> result;
    result.outcomes.resize(static_cast<std::size_t>(workers));
    std::mutex failure_mutex;

#pragma omp parallel for schedule(static, 1) num_threads(workers)
    for (int w = 0; w < workers; ++w) {
        WorkerContext ctx{w, seed, board};
        try {
            result.outcomes[static_cast<std::size_t>(w)].emplace(run(ctx));
        } catch (const std::exception& e) {
            std::lock_guard lock(failure_mutex);
            result.failures.push_back({w, e.what()});
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            result.failures.push_back({w, "unknown error"});
        }
    }

    std::sort(result.failures.begin(), result.failures.end(),
              [](const WorkerFailure& a, const WorkerFailure& b) { return a.worker < b.worker; });
    result.board = board.snapshot();
    return result;
}

} // namespace bigmeans
