#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mssc/matrix.hpp"

namespace cli {

struct TinyInstance {
    std::string name;
    mssc::Matrix points;
    std::size_t clusters = 1;
};

/// The bundled 20-instance suite. Fixed content; includes p = s cases.
std::vector<TinyInstance> tiny_suite();

struct VerifyOptions {
    std::int64_t bigmeans_iterations = 50;
    std::uint64_t seed = 0;
    /// Test hook: raises the oracle value of the named instance.
    std::optional<std::string> corrupt_instance;
};

struct InstanceCheck {
    std::string name;
    double oracle = 0.0;
    /// Best K-means objective over all distinct data-point seedings.
    double best_seeded_kmeans = 0.0;
    double bigmeans = 0.0;
    std::vector<std::string> violations;
};

struct VerifyReport {
    std::vector<InstanceCheck> instances;
    bool ok() const;
};

/// Oracle-dominance checks: every K-means run from distinct data-point seeds
/// and every big_means run stays at or above the exact optimum (1e-9
/// relative), K-means started at the optimal centroids reproduces it, and
/// p = s instances reach 0.
VerifyReport run_verify(const std::vector<TinyInstance>& suite, const VerifyOptions& options = {});

} // namespace cli
