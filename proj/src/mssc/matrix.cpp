#include "mssc/matrix.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mssc {
namespace {

DatasetId next_dataset_id() {
    static std::atomic<DatasetId> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (values_.size() != rows_ * cols_)
        throw std::invalid_argument("matrix: value count does not match shape");
}

Dataset::Dataset(std::size_t rows, std::size_t cols, std::vector<double> values)
    : Dataset(Matrix(rows, cols, std::move(values))) {}

Dataset::Dataset(Matrix values) : values_(std::move(values)), id_(next_dataset_id()) {
    if (values_.rows() == 0 || values_.cols() == 0)
        throw std::invalid_argument("dataset: need m >= 1 and n >= 1");
    const auto v = values_.values();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!std::isfinite(v[i]))
            throw std::invalid_argument("dataset: non-finite value at row " +
                                        std::to_string(i / values_.cols()));
}

} // namespace mssc
