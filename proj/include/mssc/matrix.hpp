#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mssc {

/// Non-owning row-major view.
struct MatrixView {
    std::span<const double> values;
    std::size_t rows = 0;
    std::size_t cols = 0;

    std::span<const double> row(std::size_t i) const { return values.subspan(i * cols, cols); }
    double operator()(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
};

/// Owning row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), values_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }

    std::span<const double> row(std::size_t i) const {
        return std::span<const double>(values_).subspan(i * cols_, cols_);
    }
    std::span<double> row(std::size_t i) { return std::span<double>(values_).subspan(i * cols_, cols_); }
    double& operator()(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }

    MatrixView view() const { return MatrixView{values_, rows_, cols_}; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

using DatasetId = std::uint64_t;

/// Immutable m x n data matrix with finite entries. Each instance gets a
/// process-unique id that samples carry to refer back to it.
class Dataset {
public:
    /// Throws std::invalid_argument on m == 0, n == 0, size mismatch or
    /// non-finite values.
    Dataset(std::size_t rows, std::size_t cols, std::vector<double> values);
    explicit Dataset(Matrix values);

    DatasetId id() const { return id_; }
    std::size_t rows() const { return values_.rows(); }
    std::size_t cols() const { return values_.cols(); }
    MatrixView view() const { return values_.view(); }
    const Matrix& matrix() const { return values_; }

private:
    Matrix values_;
    DatasetId id_;
};

} // namespace mssc
