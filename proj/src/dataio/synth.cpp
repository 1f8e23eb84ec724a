#include "dataio/synth.hpp"

#include <random>
#include <stdexcept>

namespace dataio {

Mixture gen_gaussian_mixture(const mssc::Matrix& centers, double sigma, std::size_t points_per_center,
                             std::uint64_t seed) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
    if (centers.rows() == 0 || centers.cols() == 0) throw std::invalid_argument("need at least one center");
    if (points_per_center == 0) throw std::invalid_argument("points_per_center must be positive");

    const std::size_t n = centers.cols();
    const std::size_t m = centers.rows() * points_per_center;
    std::vector<double> values;
    values.reserve(m * n);
    std::vector<int> labels;
    labels.reserve(m);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, sigma);
    for (std::size_t c = 0; c < centers.rows(); ++c) {
        for (std::size_t i = 0; i < points_per_center; ++i) {
            for (std::size_t j = 0; j < n; ++j) values.push_back(centers(c, j) + noise(rng));
            labels.push_back(static_cast<int>(c));
        }
    }
    return Mixture{mssc::Dataset(m, n, std::move(values)), std::move(labels), centers};
}

mssc::Matrix unit_grid_centers(std::size_t count) {
    mssc::Matrix centers(count, 2);
    for (std::size_t c = 0; c < count; ++c) {
        centers(c, 0) = static_cast<double>(c % 3);
        centers(c, 1) = static_cast<double>(c / 3);
    }
    return centers;
}

} // namespace dataio
