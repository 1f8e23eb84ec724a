#include "vls/types.hpp"

#include <cmath>

namespace vls {

const char* to_string(Phase p) {
    return p == Phase::data ? "data" : "formulation";
}

const Formulation& FormulationRegistry::add_mssc(int cluster_count) {
    if (cluster_count < 1) throw std::invalid_argument("MSSC formulation needs p >= 1");
    Formulation f;
    f.id = static_cast<int>(formulations_.size());
    f.kind = FormulationKind::mssc;
    f.cluster_count = cluster_count;
    formulations_.push_back(f);
    return formulations_.back();
}

const Formulation& FormulationRegistry::at(int id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= formulations_.size())
        throw std::out_of_range("unknown formulation id " + std::to_string(id));
    return formulations_[static_cast<std::size_t>(id)];
}

bool FormulationRegistry::contains(const Formulation& f) const {
    return f.id >= 0 && static_cast<std::size_t>(f.id) < formulations_.size() &&
           formulations_[static_cast<std::size_t>(f.id)] == f;
}

NeighborhoodSpec::NeighborhoodSpec(Axis axis, int k_min, int k_max, std::vector<double> radii,
                                   std::string distance)
    : axis_(axis), k_min_(k_min), k_max_(k_max), radii_(std::move(radii)),
      distance_(std::move(distance)) {
    if (k_min_ > k_max_) throw std::invalid_argument("neighborhood: k_min > k_max");
    if (radii_.size() != static_cast<std::size_t>(k_max_ - k_min_) + 1)
        throw std::invalid_argument("neighborhood: need exactly one radius per shake power");
    for (std::size_t i = 0; i < radii_.size(); ++i) {
        if (!(radii_[i] >= 0.0)) throw std::invalid_argument("neighborhood: negative radius");
        if (i > 0 && !(radii_[i - 1] < radii_[i]))
            throw std::invalid_argument("neighborhood: radii must be strictly increasing");
    }
}

NeighborhoodSpec NeighborhoodSpec::linear(Axis axis, int k_min, int k_max, std::string distance) {
    if (k_min < 0) throw std::invalid_argument("neighborhood: linear radii need k_min >= 0");
    if (k_min > k_max) throw std::invalid_argument("neighborhood: k_min > k_max");
    std::vector<double> radii;
    for (int k = k_min; k <= k_max; ++k) radii.push_back(static_cast<double>(k));
    return NeighborhoodSpec(axis, k_min, k_max, std::move(radii), std::move(distance));
}

double NeighborhoodSpec::radius(int k) const {
    if (k == kUnboundedPower) return std::numeric_limits<double>::infinity();
    if (k < k_min_ || k > k_max_)
        throw std::out_of_range("shake power " + std::to_string(k) + " outside [" +
                                std::to_string(k_min_) + ", " + std::to_string(k_max_) + "]");
    return radii_[static_cast<std::size_t>(k - k_min_)];
}

void VlsConfig::validate() const {
    for (const auto& r : powers)
        if (r.min > r.max) throw std::invalid_argument("config: K_min > K_max");
    if (quotas[0] < 0 || quotas[1] < 0) throw std::invalid_argument("config: negative phase quota");
    if (quotas[0] + quotas[1] < 1) throw std::invalid_argument("config: S1 + S2 must be >= 1");
    if (max_iterations <= 0) throw std::invalid_argument("config: iteration budget must be > 0");
    if (max_seconds && !(*max_seconds > 0.0))
        throw std::invalid_argument("config: time budget must be > 0");
    if (workers < 1) throw std::invalid_argument("config: workers must be >= 1");
    if (max_nonimproving_per_phase && *max_nonimproving_per_phase < 1)
        throw std::invalid_argument("config: non-improving limit must be >= 1");
    if (acceptance == AcceptanceRule::lexicographic &&
        reference == IncumbentReference::recorded_best)
        throw std::invalid_argument("config: lexicographic acceptance needs shaken-landscape reference");
}

} // namespace vls
