#include "mssc/kmeans.hpp"

#include <stdexcept>

#include "mssc/kernels.hpp"

namespace mssc {
namespace {

void recenter(MatrixView points, const std::vector<int>& labels, CentroidSet& centroids,
              std::vector<double>& sums, std::vector<std::size_t>& counts) {
    const std::size_t n = points.cols;
    omp::accumulate(points, labels, sums, counts);
    std::vector<double> mean(n);
    for (std::size_t k = 0; k < centroids.size(); ++k) {
        if (counts[k] == 0) {
            centroids.mark_degenerate(k);
            continue;
        }
        const double inv = static_cast<double>(counts[k]);
        for (std::size_t j = 0; j < n; ++j) mean[j] = sums[k * n + j] / inv;
        centroids.set(k, mean);
    }
}

} // namespace

double mssc_objective(const CentroidSet& centroids, MatrixView points) {
    if (centroids.any_degenerate()) throw DegenerateCentroidError();
    if (points.rows == 0) return 0.0;
    if (centroids.size() == 0) throw std::invalid_argument("objective: no centroids");
    return omp::objective(points, centroids.view());
}

LabelAssignment assign_labels(const CentroidSet& centroids, MatrixView points) {
    if (centroids.any_degenerate()) throw DegenerateCentroidError();
    LabelAssignment out;
    out.labels.resize(points.rows);
    if (points.rows > 0) omp::assign(points, centroids.view(), out.labels);
    return out;
}

double partition_objective(MatrixView points, const LabelAssignment& labels, std::size_t p) {
    if (labels.labels.size() != points.rows) throw std::invalid_argument("partition: label count");
    const std::size_t n = points.cols;
    std::vector<double> sums(p * n);
    std::vector<std::size_t> counts(p);
    omp::accumulate(points, labels.labels, sums, counts);
    for (std::size_t k = 0; k < p; ++k)
        if (counts[k] > 0)
            for (std::size_t j = 0; j < n; ++j) sums[k * n + j] /= static_cast<double>(counts[k]);
    double total = 0.0;
    for (std::size_t i = 0; i < points.rows; ++i) {
        const auto k = static_cast<std::size_t>(labels.labels[i]);
        total += squared_distance(points.row(i), std::span<const double>(sums).subspan(k * n, n));
    }
    return total;
}

KMeansResult kmeans(MatrixView points, const CentroidSet& init, const KMeansOptions& options) {
    if (points.rows == 0) throw std::invalid_argument("kmeans: empty sample");
    if (init.size() == 0) throw std::invalid_argument("kmeans: no centroids");
    if (init.any_degenerate()) throw DegenerateCentroidError();
    if (init.dims() != points.cols) throw std::invalid_argument("kmeans: dimension mismatch");

    const std::size_t p = init.size();
    KMeansResult result;
    result.centroids = init;
    std::vector<int> labels(points.rows, 0);
    std::vector<int> previous;
    std::vector<double> sums(p * points.cols);
    std::vector<std::size_t> counts(p);

    double f = omp::assign(points, result.centroids.view(), labels);
    if (options.record_trace) result.trace.push_back(f);
    int iteration = 0;
    while (iteration < options.max_iterations) {
        recenter(points, labels, result.centroids, sums, counts);
        previous.swap(labels);
        labels.resize(points.rows);
        const double f_next = omp::assign(points, result.centroids.view(), labels);
        ++iteration;
        if (options.record_trace) result.trace.push_back(f_next);
        const double f_prev = f;
        f = f_next;
        if (labels == previous) break;
        if (f_prev <= 0.0 || (f_prev - f_next) / f_prev < options.tolerance) break;
    }

    // Flags reflect the final assignment: a centroid emptied earlier may have
    // regained points.
    std::vector<std::size_t> owned(p, 0);
    for (const int l : labels) ++owned[static_cast<std::size_t>(l)];
    for (std::size_t k = 0; k < p; ++k) {
        if (owned[k] == 0) result.centroids.mark_degenerate(k);
        else result.centroids.clear_degenerate(k);
    }

    result.labels.labels = std::move(labels);
    result.objective = f;
    result.iterations = iteration;
    return result;
}

CentroidSet lloyd_step(MatrixView points, const CentroidSet& centroids) {
    if (points.rows == 0) throw std::invalid_argument("lloyd_step: empty sample");
    CentroidSet next = centroids;
    std::vector<int> labels(points.rows);
    std::vector<double> sums(centroids.size() * points.cols);
    std::vector<std::size_t> counts(centroids.size());
    omp::assign(points, centroids.view(), labels);
    recenter(points, labels, next, sums, counts);
    for (std::size_t k = 0; k < next.size(); ++k) next.clear_degenerate(k);
    return next;
}

} // namespace mssc
