#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

#include "vls/types.hpp"

namespace vls {

/// Lexicographic acceptance over precomputed objective vectors: walk the
/// formulations in order; the first strict difference decides. Full tie
/// rejects.
inline bool accept_values(std::span<const double> incumbent, std::span<const double> candidate) {
    if (incumbent.size() != candidate.size())
        throw std::invalid_argument("accept: objective vectors differ in length");
    for (std::size_t i = 0; i < incumbent.size(); ++i) {
        if (candidate[i] < incumbent[i]) return true;
        if (candidate[i] > incumbent[i]) return false;
    }
    return false;
}

/// Accept(x, x', r). `evaluate(formulation, solution)` returns f_i of the
/// solution; formulations are evaluated lazily in registry order.
template <class Solution, class Evaluate>
bool accept(const Solution& incumbent, const Solution& candidate,
            const FormulationRegistry& registry, Evaluate&& evaluate) {
    for (const auto& f : registry.all()) {
        const double fc = evaluate(f, candidate);
        const double fi = evaluate(f, incumbent);
        if (fc < fi) return true;
        if (fc > fi) return false;
    }
    return false;
}

} // namespace vls
