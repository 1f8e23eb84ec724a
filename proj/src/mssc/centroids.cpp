#include "mssc/centroids.hpp"

#include <algorithm>
#include <limits>

namespace mssc {

CentroidSet CentroidSet::degenerate(std::size_t p, std::size_t n) {
    CentroidSet c;
    c.coords_ = Matrix(p, n, std::numeric_limits<double>::quiet_NaN());
    c.degenerate_.assign(p, 1);
    return c;
}

CentroidSet CentroidSet::from_matrix(Matrix coords) {
    CentroidSet c;
    c.degenerate_.assign(coords.rows(), 0);
    c.coords_ = std::move(coords);
    return c;
}

std::size_t CentroidSet::degenerate_count() const {
    return static_cast<std::size_t>(std::count(degenerate_.begin(), degenerate_.end(), 1));
}

void CentroidSet::set(std::size_t j, std::span<const double> point) {
    if (point.size() != dims()) throw std::invalid_argument("centroid: dimension mismatch");
    std::copy(point.begin(), point.end(), coords_.row(j).begin());
    degenerate_[j] = 0;
}

void CentroidSet::truncate(std::size_t p) {
    if (p >= size()) return;
    std::vector<double> kept(coords_.values().begin(),
                             coords_.values().begin() + static_cast<std::ptrdiff_t>(p * dims()));
    coords_ = Matrix(p, dims(), std::move(kept));
    degenerate_.resize(p);
}

void CentroidSet::pad(std::size_t p) {
    if (p <= size()) return;
    std::vector<double> grown(coords_.values().begin(), coords_.values().end());
    grown.resize(p * dims(), std::numeric_limits<double>::quiet_NaN());
    coords_ = Matrix(p, dims(), std::move(grown));
    degenerate_.resize(p, 1);
}

} // namespace mssc
