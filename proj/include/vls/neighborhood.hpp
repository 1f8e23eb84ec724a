#pragma once

#include <utility>
#include <vector>

#include "vls/rng.hpp"
#include "vls/types.hpp"

namespace vls {

/// Shake power after a sequential change step: reset on improvement,
/// otherwise advance and wrap past k_max.
inline int next_power_sequential(bool improved, int k, int k_min, int k_max) {
    if (improved || k >= k_max) return k_min;
    return k + 1;
}

/// Cyclic change: advance every iteration regardless of improvement.
inline int neighborhood_change_cyclic(int k, int k_min, int k_max) {
    if (k >= k_max) return k_min;
    return k + 1;
}

/// Sequential neighborhood change. Both objective values are taken on the
/// shaken landscape L'. Returns true when the incumbent moved.
template <class Solution, class LandscapeT>
bool neighborhood_change_sequential(Solution& x, Solution x_candidate, LandscapeT& L,
                                    const LandscapeT& L_shaken, int& k, int k_min, int k_max,
                                    double f_candidate, double f_incumbent) {
    const bool improved = f_candidate < f_incumbent;
    if (improved) {
        x = std::move(x_candidate);
        L = L_shaken;
    }
    k = next_power_sequential(improved, k, k_min, k_max);
    return improved;
}

/// Neighborhood structure on the formulation space.
class FormulationNeighborhood {
public:
    enum class Kind {
        /// N_k(F) = { F' : |id(F) - id(F')| <= Phi_k }.
        radius,
        /// N_k(F) = { F_k }, independent of F.
        indexed,
    };

    FormulationNeighborhood(Kind kind, NeighborhoodSpec spec);

    /// Radius neighborhood with Phi_k = k over [0, 0]; a singleton around F.
    static FormulationNeighborhood singleton();
    /// N_k = {F_k} for k in [0, r-1].
    static FormulationNeighborhood indexed(const FormulationRegistry& registry);

    Kind kind() const { return kind_; }
    const NeighborhoodSpec& spec() const { return spec_; }

    std::vector<Formulation> members(const Formulation& current, int k,
                                     const FormulationRegistry& registry) const;

    /// Uniform draw from members(); a singleton consumes no randomness.
    Formulation draw(const Formulation& current, int k, const FormulationRegistry& registry,
                     Rng& rng) const;

private:
    Kind kind_;
    NeighborhoodSpec spec_;
};

} // namespace vls
