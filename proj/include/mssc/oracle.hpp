#pragma once

#include <cstddef>

#include "mssc/centroids.hpp"
#include "mssc/matrix.hpp"

namespace mssc {

inline constexpr std::size_t kOracleMaxPoints = 12;
inline constexpr std::size_t kOracleMaxClusters = 3;

struct OracleResult {
    /// Means of the optimal clusters. When the optimum uses fewer than p
    /// nonempty clusters the unused slots are flagged degenerate.
    CentroidSet centroids;
    LabelAssignment labels;
    double value = 0.0;
};

/// Exact MSSC optimum by enumerating every partition of X into at most p
/// nonempty clusters. Limited to s <= 12 points and p <= 3.
OracleResult brute_force_mssc(MatrixView points, std::size_t p);

} // namespace mssc
