#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mssc/matrix.hpp"

namespace mssc {

class DegenerateCentroidError : public std::domain_error {
public:
    DegenerateCentroidError() : std::domain_error("objective undefined on degenerate centroids") {}
};

/// p centroids in R^n, each with a degenerate flag (owns no points, or was
/// never initialized). Uninitialized coordinates are NaN.
class CentroidSet {
public:
    CentroidSet() = default;
    /// All p centroids degenerate.
    static CentroidSet degenerate(std::size_t p, std::size_t n);
    /// Non-degenerate centroids from a p x n coordinate matrix.
    static CentroidSet from_matrix(Matrix coords);

    std::size_t size() const { return coords_.rows(); }
    std::size_t dims() const { return coords_.cols(); }

    const Matrix& coords() const { return coords_; }
    MatrixView view() const { return coords_.view(); }
    std::span<const double> row(std::size_t j) const { return coords_.row(j); }

    bool is_degenerate(std::size_t j) const { return degenerate_[j] != 0; }
    std::size_t degenerate_count() const;
    bool any_degenerate() const { return degenerate_count() > 0; }

    /// Sets coordinates of centroid j and clears its flag.
    void set(std::size_t j, std::span<const double> point);
    void mark_degenerate(std::size_t j) { degenerate_[j] = 1; }
    void clear_degenerate(std::size_t j) { degenerate_[j] = 0; }

    /// Keeps the first p centroids.
    void truncate(std::size_t p);
    /// Appends degenerate centroids until size() == p.
    void pad(std::size_t p);

    friend bool operator==(const CentroidSet&, const CentroidSet&) = default;

private:
    Matrix coords_;
    std::vector<std::uint8_t> degenerate_;
};

/// labels[i] in [0, p) for every point.
struct LabelAssignment {
    std::vector<int> labels;
    friend bool operator==(const LabelAssignment&, const LabelAssignment&) = default;
};

} // namespace mssc
