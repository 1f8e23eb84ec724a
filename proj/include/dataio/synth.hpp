#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mssc/matrix.hpp"

namespace dataio {

struct Mixture {
    mssc::Dataset data;
    /// Index of the generating center for each row.
    std::vector<int> labels;
    mssc::Matrix centers;
};

/// Isotropic Gaussian blobs, rows grouped by center. Deterministic in `seed`.
/// Throws std::invalid_argument for sigma <= 0, no centers or zero points.
Mixture gen_gaussian_mixture(const mssc::Matrix& centers, double sigma, std::size_t points_per_center,
                             std::uint64_t seed);

/// First `count` points of the 2-D integer grid, filled row by row, three per row.
mssc::Matrix unit_grid_centers(std::size_t count);

} // namespace dataio
