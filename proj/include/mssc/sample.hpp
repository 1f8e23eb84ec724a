#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "mssc/matrix.hpp"
#include "vls/rng.hpp"

namespace mssc {

/// Sorted, distinct row indices into one dataset.
struct SampleRef {
    DatasetId dataset_id = 0;
    std::vector<std::size_t> indices;

    std::size_t size() const { return indices.size(); }
    friend bool operator==(const SampleRef&, const SampleRef&) = default;
};

/// Uniform s-subset of {0..m-1} without replacement, returned sorted.
std::vector<std::size_t> draw_indices(std::size_t m, std::size_t s, vls::Rng& rng);

SampleRef draw_sample(const Dataset& data, std::size_t s, vls::Rng& rng);
SampleRef full_sample(const Dataset& data);
/// The first s rows; used where a sample of given size is needed without
/// spending randomness.
SampleRef prefix_sample(const Dataset& data, std::size_t s);

/// Throws std::invalid_argument if the reference does not belong to `data`
/// or is malformed.
void check_sample(const Dataset& data, const SampleRef& ref);

/// Copy of the referenced rows, in index order.
Matrix gather(const Dataset& data, const SampleRef& ref);

/// A resolved sample: reference plus its materialized points. Cheap to copy.
struct Sample {
    SampleRef ref;
    std::shared_ptr<const Matrix> points;

    std::size_t size() const { return ref.size(); }
    MatrixView view() const { return points->view(); }
};

Sample resolve(const Dataset& data, SampleRef ref);

} // namespace mssc
