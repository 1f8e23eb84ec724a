#include "mssc/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mssc/kernels.hpp"

namespace mssc {

SampleNeighborhood::SampleNeighborhood(std::size_t rows, std::size_t s_min, std::size_t s_max,
                                       vls::NeighborhoodSpec spec)
    : rows_(rows), s_min_(s_min), s_max_(s_max), spec_(std::move(spec)) {
    if (spec_.axis() != vls::Axis::data)
        throw std::invalid_argument("sample neighborhood needs a data-axis spec");
    if (s_min_ > s_max_) throw std::invalid_argument("sample neighborhood: s_min > s_max");
    if (s_max_ > rows_) throw std::invalid_argument("sample neighborhood: s_max exceeds m");
}

SampleNeighborhood SampleNeighborhood::fixed(std::size_t rows, std::size_t s) {
    return SampleNeighborhood(rows, s, s, vls::NeighborhoodSpec::linear(vls::Axis::data, 0, 0, "abs-size"));
}

SampleNeighborhood SampleNeighborhood::ranged(std::size_t rows, std::size_t s_min,
                                              std::size_t s_max, int k_min, int k_max) {
    return SampleNeighborhood(rows, s_min, s_max,
                              vls::NeighborhoodSpec::linear(vls::Axis::data, k_min, k_max, "abs-size"));
}

std::pair<std::size_t, std::size_t> SampleNeighborhood::admissible_sizes(std::size_t s, int k) const {
    const double radius = spec_.radius(k);
    std::size_t lo = s_min_;
    std::size_t hi = s_max_;
    if (std::isfinite(radius)) {
        const auto r = static_cast<std::size_t>(std::floor(radius));
        lo = std::max(lo, s > r ? s - r : std::size_t{0});
        hi = std::min(hi, s + r);
    }
    if (lo > hi)
        throw vls::DegenerateNeighborhood("no admissible sample size within radius " +
                                          std::to_string(radius) + " of " + std::to_string(s));
    return {lo, hi};
}

SampleRef SampleNeighborhood::draw(const Dataset& data, std::size_t current_size, int k,
                                   vls::Rng& rng) const {
    const auto [lo, hi] = admissible_sizes(current_size, k);
    const auto size = static_cast<std::size_t>(
        vls::uniform_int(rng, static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
    return draw_sample(data, size, rng);
}

MsscLandscape evaluate_landscape(const Dataset& data, SampleRef sample,
                                 const vls::Formulation& formulation,
                                 const vls::FormulationRegistry& registry) {
    if (formulation.kind != vls::FormulationKind::mssc)
        throw std::invalid_argument("formulation is not MSSC");
    return vls::evaluate_landscape(resolve(data, std::move(sample)), formulation, registry);
}

MsscProblem::MsscProblem(const Dataset& data, SampleNeighborhood neighborhood, KMeansOptions kmeans)
    : data_(&data), neighborhood_(std::move(neighborhood)), kmeans_(kmeans) {}

Sample MsscProblem::shake_data(const Sample& current, int k, vls::Rng& rng) const {
    return resolve(*data_, neighborhood_.draw(*data_, current.size(), k, rng));
}

CentroidSet MsscProblem::transition(const CentroidSet& x, const MsscLandscape& /*from*/,
                                    const MsscLandscape& to, vls::Rng& rng) {
    CentroidSet y = x;
    const auto p = static_cast<std::size_t>(to.formulation().cluster_count);
    if (y.size() > p) y.truncate(p);
    else if (y.size() < p) y.pad(p);
    if (y.any_degenerate()) {
        if (to.data().size() == 0) throw std::invalid_argument("cannot pad on empty sample");
        if (reseed_degenerate(y, to.data().view(), rng).used_fallback) ++fallbacks_;
    }
    return y;
}

CentroidSet MsscProblem::local_search(const CentroidSet& x, const MsscLandscape& landscape) const {
    return kmeans(landscape.data().view(), x, kmeans_).centroids;
}

double MsscProblem::objective(const MsscLandscape& landscape, const CentroidSet& x) const {
    const auto points = landscape.data().view();
    if (points.rows == 0) return 0.0;
    return omp::objective(points, x.view());
}

} // namespace mssc
