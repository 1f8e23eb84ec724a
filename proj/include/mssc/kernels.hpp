#pragma once

// Data-parallel MSSC kernels.
//
// Two implementations with identical contracts live here: `serial` is the
// plain reference kept for testing, `omp` is what the algorithms call. The
// OpenMP versions reduce over a fixed block partition that depends only on
// the row count, so their results do not depend on the thread count or the
// schedule. They agree with the serial versions up to summation order.
//
// All kernels treat every centroid row as live; degenerate flags are the
// caller's concern.

#include <cstddef>
#include <span>
#include <utility>

#include "mssc/matrix.hpp"

namespace mssc {

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
    double d = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double diff = a[j] - b[j];
        d += diff * diff;
    }
    return d;
}

/// Nearest centroid to `x`; ties go to the lowest index.
inline std::pair<int, double> nearest_centroid(std::span<const double> x, MatrixView centroids) {
    int best = 0;
    double best_d = squared_distance(x, centroids.row(0));
    for (std::size_t j = 1; j < centroids.rows; ++j) {
        const double d = squared_distance(x, centroids.row(j));
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(j);
        }
    }
    return {best, best_d};
}

namespace serial {

/// Writes nearest-centroid labels and returns the sum of their squared distances.
double assign(MatrixView points, MatrixView centroids, std::span<int> labels);
double objective(MatrixView points, MatrixView centroids);
/// Per-cluster coordinate sums (p x n, row-major) and point counts.
void accumulate(MatrixView points, std::span<const int> labels, std::span<double> sums,
                std::span<std::size_t> counts);
/// min_dist[i] = min(min_dist[i], ||x_i - c||^2).
void update_min_distance(MatrixView points, std::span<const double> centroid,
                         std::span<double> min_dist);

} // namespace serial

namespace omp {

double assign(MatrixView points, MatrixView centroids, std::span<int> labels);
double objective(MatrixView points, MatrixView centroids);
void accumulate(MatrixView points, std::span<const int> labels, std::span<double> sums,
                std::span<std::size_t> counts);
void update_min_distance(MatrixView points, std::span<const double> centroid,
                         std::span<double> min_dist);

/// Number of reduction blocks used for `rows` points.
std::size_t block_count(std::size_t rows);

} // namespace omp

} // namespace mssc
