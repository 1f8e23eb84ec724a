#pragma once

#include <cstddef>
#include <utility>

#include "mssc/centroids.hpp"
#include "mssc/kmeans.hpp"
#include "mssc/matrix.hpp"
#include "mssc/sample.hpp"
#include "vls/rng.hpp"
#include "vls/types.hpp"

namespace mssc {

/// Data-axis neighborhood on uniform samples:
///   N_k(X^s) = { X^{s'} ~ U(data, s') : s_min <= s' <= s_max, |s - s'| <= Phi_k }.
/// A shake draws s' uniformly from the admissible sizes, then a fresh uniform
/// sample of that size.
class SampleNeighborhood {
public:
    SampleNeighborhood(std::size_t rows, std::size_t s_min, std::size_t s_max,
                       vls::NeighborhoodSpec spec);

    /// s_min = s_max = s with the single power k = 0.
    static SampleNeighborhood fixed(std::size_t rows, std::size_t s);
    /// Phi_k = k over [k_min, k_max].
    static SampleNeighborhood ranged(std::size_t rows, std::size_t s_min, std::size_t s_max,
                                     int k_min, int k_max);

    std::size_t s_min() const { return s_min_; }
    std::size_t s_max() const { return s_max_; }
    const vls::NeighborhoodSpec& spec() const { return spec_; }

    /// Inclusive range of admissible sizes around s for power k. Throws
    /// vls::DegenerateNeighborhood when empty.
    std::pair<std::size_t, std::size_t> admissible_sizes(std::size_t s, int k) const;

    SampleRef draw(const Dataset& data, std::size_t current_size, int k, vls::Rng& rng) const;

private:
    std::size_t rows_;
    std::size_t s_min_;
    std::size_t s_max_;
    vls::NeighborhoodSpec spec_;
};

using MsscLandscape = vls::Landscape<Sample>;

/// L(X, F) for MSSC. Checks that the sample belongs to `data` and that the
/// formulation is registered.
MsscLandscape evaluate_landscape(const Dataset& data, SampleRef sample,
                                 const vls::Formulation& formulation,
                                 const vls::FormulationRegistry& registry);

/// MSSC plug-in for the VLS engine: uniform-sample landscapes, K-means local
/// search, and a transition operator that truncates, pads and repairs
/// degenerate centroids with K-means++ on the target sample.
class MsscProblem {
public:
    using Data = Sample;
    using Solution = CentroidSet;

    MsscProblem(const Dataset& data, SampleNeighborhood neighborhood, KMeansOptions kmeans = {});

    Sample shake_data(const Sample& current, int k, vls::Rng& rng) const;
    CentroidSet transition(const CentroidSet& x, const MsscLandscape& from,
                           const MsscLandscape& to, vls::Rng& rng);
    CentroidSet local_search(const CentroidSet& x, const MsscLandscape& landscape) const;
    /// f(C, X) on the landscape's sample; degenerate flags are ignored.
    double objective(const MsscLandscape& landscape, const CentroidSet& x) const;
    std::size_t data_size(const Sample& sample) const { return sample.size(); }

    const Dataset& dataset() const { return *data_; }
    const SampleNeighborhood& neighborhood() const { return neighborhood_; }
    std::size_t seeding_fallbacks() const { return fallbacks_; }

private:
    const Dataset* data_;
    SampleNeighborhood neighborhood_;
    KMeansOptions kmeans_;
    std::size_t fallbacks_ = 0;
};

} // namespace mssc
