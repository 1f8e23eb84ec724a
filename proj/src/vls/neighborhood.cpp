#include "vls/neighborhood.hpp"

#include <cmath>

namespace vls {

FormulationNeighborhood::FormulationNeighborhood(Kind kind, NeighborhoodSpec spec)
    : kind_(kind), spec_(std::move(spec)) {
    if (spec_.axis() != Axis::formulation)
        throw std::invalid_argument("formulation neighborhood needs a formulation-axis spec");
}

FormulationNeighborhood FormulationNeighborhood::singleton() {
    return FormulationNeighborhood(Kind::radius,
                                   NeighborhoodSpec::linear(Axis::formulation, 0, 0, "index"));
}

FormulationNeighborhood FormulationNeighborhood::indexed(const FormulationRegistry& registry) {
    if (registry.empty()) throw std::invalid_argument("indexed neighborhood over empty registry");
    const int last = static_cast<int>(registry.size()) - 1;
    return FormulationNeighborhood(Kind::indexed,
                                   NeighborhoodSpec::linear(Axis::formulation, 0, last, "index"));
}

std::vector<Formulation> FormulationNeighborhood::members(const Formulation& current, int k,
                                                          const FormulationRegistry& registry) const {
    if (!registry.contains(current))
        throw std::invalid_argument("unknown formulation id " + std::to_string(current.id));
    std::vector<Formulation> out;
    if (kind_ == Kind::indexed) {
        if (!spec_.admits(k) || k == kUnboundedPower || k < 0 ||
            static_cast<std::size_t>(k) >= registry.size())
            throw DegenerateNeighborhood("no formulation F_" + std::to_string(k));
        out.push_back(registry.at(k));
        return out;
    }
    const double radius = spec_.radius(k);
    for (const auto& f : registry.all())
        if (std::abs(static_cast<double>(f.id - current.id)) <= radius) out.push_back(f);
    if (out.empty()) throw DegenerateNeighborhood("empty formulation neighborhood");
    return out;
}

Formulation FormulationNeighborhood::draw(const Formulation& current, int k,
                                          const FormulationRegistry& registry, Rng& rng) const {
    const auto candidates = members(current, k, registry);
    const auto pick = uniform_int(rng, 0, static_cast<std::int64_t>(candidates.size()) - 1);
    return candidates[static_cast<std::size_t>(pick)];
}

} // namespace vls
