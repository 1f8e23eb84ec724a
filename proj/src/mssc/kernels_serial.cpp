#include <algorithm>
#include <stdexcept>

#include "mssc/kernels.hpp"

namespace mssc::serial {

double assign(MatrixView points, MatrixView centroids, std::span<int> labels) {
    if (labels.size() != points.rows) throw std::invalid_argument("assign: label buffer size");
    if (points.rows > 0 && centroids.rows == 0) throw std::invalid_argument("assign: no centroids");
    double total = 0.0;
    for (std::size_t i = 0; i < points.rows; ++i) {
        const auto [label, d] = nearest_centroid(points.row(i), centroids);
        labels[i] = label;
        total += d;
    }
    return total;
}

double objective(MatrixView points, MatrixView centroids) {
    if (points.rows > 0 && centroids.rows == 0) throw std::invalid_argument("objective: no centroids");
    double total = 0.0;
    for (std::size_t i = 0; i < points.rows; ++i) total += nearest_centroid(points.row(i), centroids).second;
    return total;
}

void accumulate(MatrixView points, std::span<const int> labels, std::span<double> sums,
                std::span<std::size_t> counts) {
    const std::size_t n = points.cols;
    std::fill(sums.begin(), sums.end(), 0.0);
    std::fill(counts.begin(), counts.end(), std::size_t{0});
    for (std::size_t i = 0; i < points.rows; ++i) {
        const auto c = static_cast<std::size_t>(labels[i]);
        const auto x = points.row(i);
        for (std::size_t j = 0; j < n; ++j) sums[c * n + j] += x[j];
        ++counts[c];
    }
}

void update_min_distance(MatrixView points, std::span<const double> centroid,
                         std::span<double> min_dist) {
    for (std::size_t i = 0; i < points.rows; ++i)
        min_dist[i] = std::min(min_dist[i], squared_distance(points.row(i), centroid));
}

} // namespace mssc::serial
