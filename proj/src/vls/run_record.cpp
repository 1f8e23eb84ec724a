#include "vls/run_record.hpp"

namespace vls {

bool same_iteration(const IterationRecord& a, const IterationRecord& b) {
    return a.t == b.t && a.phase == b.phase && a.k == b.k && a.k_next == b.k_next &&
           a.sample_size == b.sample_size && a.formulation_id == b.formulation_id &&
           a.candidate_objective == b.candidate_objective && a.objective == b.objective &&
           a.improved == b.improved;
}

bool same_acceptance_trace(const RunRecord& a, const RunRecord& b) {
    if (a.iterations.size() != b.iterations.size()) return false;
    for (std::size_t i = 0; i < a.iterations.size(); ++i)
        if (!same_iteration(a.iterations[i], b.iterations[i])) return false;
    return true;
}

} // namespace vls
