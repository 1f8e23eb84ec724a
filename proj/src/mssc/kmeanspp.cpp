#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "mssc/kernels.hpp"
#include "mssc/kmeans.hpp"

namespace mssc {

SeedingReport reseed_degenerate(CentroidSet& centroids, MatrixView points, vls::Rng& rng) {
    SeedingReport report;
    if (!centroids.any_degenerate()) return report;
    if (points.rows == 0) throw std::invalid_argument("cannot seed centroids from an empty sample");
    if (centroids.dims() != points.cols) throw std::invalid_argument("seeding: dimension mismatch");

    std::vector<double> min_dist(points.rows, std::numeric_limits<double>::infinity());
    bool have_live = false;
    for (std::size_t j = 0; j < centroids.size(); ++j) {
        if (centroids.is_degenerate(j)) continue;
        omp::update_min_distance(points, centroids.row(j), min_dist);
        have_live = true;
    }

    const auto last_row = static_cast<std::int64_t>(points.rows) - 1;
    for (std::size_t j = 0; j < centroids.size(); ++j) {
        if (!centroids.is_degenerate(j)) continue;
        std::size_t pick = 0;
        if (!have_live) {
            pick = static_cast<std::size_t>(vls::uniform_int(rng, 0, last_row));
        } else {
            double total = 0.0;
            for (const double d : min_dist) total += d;
            if (total > 0.0) {
                std::discrete_distribution<std::size_t> d2(min_dist.begin(), min_dist.end());
                pick = d2(rng);
            } else {
                // Every point coincides with a live centroid.
                pick = static_cast<std::size_t>(vls::uniform_int(rng, 0, last_row));
                report.used_fallback = true;
            }
        }
        centroids.set(j, points.row(pick));
        omp::update_min_distance(points, centroids.row(j), min_dist);
        have_live = true;
        ++report.seeded;
    }
    return report;
}

CentroidSet kmeanspp_init(MatrixView points, std::size_t p, vls::Rng& rng, SeedingReport* report) {
    if (p == 0) throw std::invalid_argument("kmeans++: need at least one centroid");
    auto centroids = CentroidSet::degenerate(p, points.cols);
    const auto r = reseed_degenerate(centroids, points, rng);
    if (report) *report = r;
    return centroids;
}

} // namespace mssc
