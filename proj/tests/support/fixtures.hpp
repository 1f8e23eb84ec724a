#pragma once

#include <initializer_list>
#include <vector>

#include "mssc/centroids.hpp"
#include "mssc/matrix.hpp"
#include "vls/rng.hpp"

namespace fixtures {

inline mssc::Matrix rows(std::size_t n, std::initializer_list<double> values) {
    std::vector<double> v(values);
    const std::size_t count = v.size() / n;
    return mssc::Matrix(count, n, std::move(v));
}

/// {(0,0),(0,2),(10,0),(10,2)}: optimum 4 with p = 2, Lloyd trap at 100.
inline mssc::Matrix four_points() { return rows(2, {0, 0, 0, 2, 10, 0, 10, 2}); }

inline mssc::CentroidSet centroids(std::size_t n, std::initializer_list<double> values) {
    return mssc::CentroidSet::from_matrix(rows(n, values));
}

inline mssc::Matrix random_points(vls::Rng& rng, std::size_t s, std::size_t n, double lo = -10.0,
                                  double hi = 10.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    mssc::Matrix m(s, n);
    for (auto& v : m.values()) v = u(rng);
    return m;
}

/// Coordinates on a half-integer grid, so ties and duplicates occur.
inline mssc::Matrix grid_points(vls::Rng& rng, std::size_t s, std::size_t n) {
    mssc::Matrix m(s, n);
    for (auto& v : m.values()) v = 0.5 * static_cast<double>(vls::uniform_int(rng, 0, 12));
    return m;
}

/// Chi-square statistic of observed counts against equal expected counts.
inline double chi_square_uniform(const std::vector<std::size_t>& counts) {
    double total = 0.0;
    for (const auto c : counts) total += static_cast<double>(c);
    const double expected = total / static_cast<double>(counts.size());
    double chi = 0.0;
    for (const auto c : counts) {
        const double d = static_cast<double>(c) - expected;
        chi += d * d / expected;
    }
    return chi;
}

} // namespace fixtures
