#pragma once

#include <cstddef>
#include <utility>

namespace vls {

struct LocalSearchStats {
    std::size_t improving_steps = 0;
};

/// Best-improvement descent. `best_neighbor(x)` returns the best solution in
/// the plug-in's neighborhood N_S(x); the search stops as soon as that
/// neighbor is not strictly better, so the result satisfies
/// f(x) <= min { f(y) : y in N_S(x) }.
template <class Solution, class Objective, class BestNeighbor>
Solution best_improvement_local_search(Solution x, Objective&& objective,
                                       BestNeighbor&& best_neighbor,
                                       LocalSearchStats* stats = nullptr) {
    double fx = objective(x);
    for (;;) {
        Solution y = best_neighbor(x);
        const double fy = objective(y);
        if (!(fy < fx)) return x;
        x = std::move(y);
        fx = fy;
        if (stats) ++stats->improving_steps;
    }
}

} // namespace vls
