#include "mssc/oracle.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mssc {
namespace {

// Within-cluster sum of squares computed from scratch, independent of the
// kernels it is used to check.
double partition_cost(MatrixView points, const std::vector<int>& labels, std::size_t p) {
    const std::size_t n = points.cols;
    std::vector<double> mean(p * n, 0.0);
    std::vector<std::size_t> count(p, 0);
    for (std::size_t i = 0; i < points.rows; ++i) {
        const auto k = static_cast<std::size_t>(labels[i]);
        for (std::size_t j = 0; j < n; ++j) mean[k * n + j] += points(i, j);
        ++count[k];
    }
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t j = 0; j < n; ++j)
            if (count[k] > 0) mean[k * n + j] /= static_cast<double>(count[k]);
    double cost = 0.0;
    for (std::size_t i = 0; i < points.rows; ++i) {
        const auto k = static_cast<std::size_t>(labels[i]);
        for (std::size_t j = 0; j < n; ++j) {
            const double d = points(i, j) - mean[k * n + j];
            cost += d * d;
        }
    }
    return cost;
}

struct Enumerator {
    MatrixView points;
    std::size_t p;
    std::vector<int> labels;
    std::vector<int> best_labels;
    double best = std::numeric_limits<double>::infinity();

    // Restricted growth strings: labels[i] <= max(labels[0..i-1]) + 1, so each
    // set partition is visited exactly once.
    void visit(std::size_t i, int used) {
        if (i == points.rows) {
            const double cost = partition_cost(points, labels, p);
            if (cost < best) {
                best = cost;
                best_labels = labels;
            }
            return;
        }
        const int limit = std::min<int>(used + 1, static_cast<int>(p));
        for (int c = 0; c < limit; ++c) {
            labels[i] = c;
            visit(i + 1, std::max(used, c + 1));
        }
    }
};

} // namespace

OracleResult brute_force_mssc(MatrixView points, std::size_t p) {
    if (p < 1) throw std::invalid_argument("oracle: need p >= 1");
    if (points.rows > kOracleMaxPoints || p > kOracleMaxClusters)
        throw std::invalid_argument("oracle: instance above enumeration bound (s <= " +
                                    std::to_string(kOracleMaxPoints) + ", p <= " +
                                    std::to_string(kOracleMaxClusters) + ")");

    OracleResult out;
    out.centroids = CentroidSet::degenerate(p, points.cols);
    if (points.rows == 0) return out;

    Enumerator e{points, p, std::vector<int>(points.rows, 0), {}};
    e.visit(0, 0);

    const std::size_t n = points.cols;
    std::vector<double> sum(p * n, 0.0);
    std::vector<std::size_t> count(p, 0);
    for (std::size_t i = 0; i < points.rows; ++i) {
        const auto k = static_cast<std::size_t>(e.best_labels[i]);
        for (std::size_t j = 0; j < n; ++j) sum[k * n + j] += points(i, j);
        ++count[k];
    }
    std::vector<double> mean(n);
    for (std::size_t k = 0; k < p; ++k) {
        if (count[k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) mean[j] = sum[k * n + j] / static_cast<double>(count[k]);
        out.centroids.set(k, mean);
    }
    out.labels.labels = std::move(e.best_labels);
    out.value = e.best;
    return out;
}

} // namespace mssc
