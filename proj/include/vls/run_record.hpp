#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vls/types.hpp"

namespace vls {

struct IterationRecord {
    std::int64_t t = 0;
    Phase phase = Phase::data;
    /// Shake power used in this iteration.
    int k = 0;
    /// Shake power after the neighborhood change step.
    int k_next = 0;
    std::size_t sample_size = 0;
    int formulation_id = 0;
    /// Candidate objective on the shaken landscape.
    double candidate_objective = 0.0;
    /// Incumbent objective f_hat after this iteration.
    double objective = 0.0;
    bool improved = false;
    double elapsed_ms = 0.0;
};

struct RunRecord {
    std::uint64_t worker = 0;
    std::vector<IterationRecord> iterations;
    /// Non-improving iterations (n). Bookkeeping only.
    std::int64_t unsuccessful = 0;
    /// Seeding draws that fell back to uniform sampling with replacement.
    std::size_t seeding_fallbacks = 0;
    double wall_ms = 0.0;
};

/// Equality of two traces ignoring wall-clock fields.
bool same_acceptance_trace(const RunRecord& a, const RunRecord& b);
bool same_iteration(const IterationRecord& a, const IterationRecord& b);

} // namespace vls
