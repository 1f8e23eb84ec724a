#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mssc/kernels.hpp"

namespace mssc::omp {
namespace {

constexpr std::size_t kRowsPerBlock = 1024;
constexpr std::size_t kMaxBlocks = 256;

struct Block {
    std::size_t begin;
    std::size_t end;
};

Block block_range(std::size_t b, std::size_t blocks, std::size_t rows) {
    return {b * rows / blocks, (b + 1) * rows / blocks};
}

} // namespace

std::size_t block_count(std::size_t rows) {
    const std::size_t wanted = (rows + kRowsPerBlock - 1) / kRowsPerBlock;
    return std::clamp<std::size_t>(wanted, 1, kMaxBlocks);
}

double assign(MatrixView points, MatrixView centroids, std::span<int> labels) {
    if (labels.size() != points.rows) throw std::invalid_argument("assign: label buffer size");
    if (points.rows > 0 && centroids.rows == 0) throw std::invalid_argument("assign: no centroids");
    const std::size_t blocks = block_count(points.rows);
    std::vector<double> partial(blocks, 0.0);
    const auto nb = static_cast<long>(blocks);

#pragma omp parallel for schedule(static) if (nb > 1)
    for (long b = 0; b < nb; ++b) {
        const auto r = block_range(static_cast<std::size_t>(b), blocks, points.rows);
        double acc = 0.0;
        for (std::size_t i = r.begin; i < r.end; ++i) {
            const auto [label, d] = nearest_centroid(points.row(i), centroids);
            labels[i] = label;
            acc += d;
        }
        partial[static_cast<std::size_t>(b)] = acc;
    }

    double total = 0.0;
    for (const double v : partial) total += v;
    return total;
}

double objective(MatrixView points, MatrixView centroids) {
    if (points.rows > 0 && centroids.rows == 0) throw std::invalid_argument("objective: no centroids");
    const std::size_t blocks = block_count(points.rows);
    std::vector<double> partial(blocks, 0.0);
    const auto nb = static_cast<long>(blocks);

#pragma omp parallel for schedule(static) if (nb > 1)
    for (long b = 0; b < nb; ++b) {
        const auto r = block_range(static_cast<std::size_t>(b), blocks, points.rows);
        double acc = 0.0;
        for (std::size_t i = r.begin; i < r.end; ++i)
            acc += nearest_centroid(points.row(i), centroids).second;
        partial[static_cast<std::size_t>(b)] = acc;
    }

    double total = 0.0;
    for (const double v : partial) total += v;
    return total;
}

void accumulate(MatrixView points, std::span<const int> labels, std::span<double> sums,
                std::span<std::size_t> counts) {
    const std::size_t n = points.cols;
    const std::size_t p = counts.size();
    const std::size_t blocks = block_count(points.rows);
    std::vector<double> block_sums(blocks * p * n, 0.0);
    std::vector<std::size_t> block_counts(blocks * p, 0);
    const auto nb = static_cast<long>(blocks);

#pragma omp parallel for schedule(static) if (nb > 1)
    for (long b = 0; b < nb; ++b) {
        const auto bi = static_cast<std::size_t>(b);
        const auto r = block_range(bi, blocks, points.rows);
        double* s = block_sums.data() + bi * p * n;
        std::size_t* c = block_counts.data() + bi * p;
        for (std::size_t i = r.begin; i < r.end; ++i) {
            const auto k = static_cast<std::size_t>(labels[i]);
            const auto x = points.row(i);
            for (std::size_t j = 0; j < n; ++j) s[k * n + j] += x[j];
            ++c[k];
        }
    }

    std::fill(sums.begin(), sums.end(), 0.0);
    std::fill(counts.begin(), counts.end(), std::size_t{0});
    for (std::size_t b = 0; b < blocks; ++b) {
        for (std::size_t v = 0; v < p * n; ++v) sums[v] += block_sums[b * p * n + v];
        for (std::size_t k = 0; k < p; ++k) counts[k] += block_counts[b * p + k];
    }
}

void update_min_distance(MatrixView points, std::span<const double> centroid,
                         std::span<double> min_dist) {
    const auto rows = static_cast<long>(points.rows);
    const bool parallel = block_count(points.rows) > 1;

#pragma omp parallel for schedule(static) if (parallel)
    for (long i = 0; i < rows; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        min_dist[ii] = std::min(min_dist[ii], squared_distance(points.row(ii), centroid));
    }
}

} // namespace mssc::omp
