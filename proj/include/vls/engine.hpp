#pragma once

#include <chrono>
#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <utility>

#include "vls/accept.hpp"
#include "vls/neighborhood.hpp"
#include "vls/rng.hpp"
#include "vls/run_record.hpp"
#include "vls/types.hpp"

namespace vls {

/// What a problem must supply to be searched by the engine.
///
///   shake_data(X, k, rng)       draw X' from N_k^1(X)
///   transition(x, L, L', rng)   T_{L,L'}: make x feasible on L'
///   local_search(x, L')         move x to a local minimum of L'
///   objective(L, x)             f on landscape L
///   data_size(X)                size reported in traces
template <class P>
concept LandscapeProblem =
    requires(P& p, const typename P::Data& data, const typename P::Solution& x,
             const Landscape<typename P::Data>& L, Rng& rng, int k) {
        { p.shake_data(data, k, rng) } -> std::same_as<typename P::Data>;
        { p.transition(x, L, L, rng) } -> std::same_as<typename P::Solution>;
        { p.local_search(x, L) } -> std::same_as<typename P::Solution>;
        { p.objective(L, x) } -> std::convertible_to<double>;
        { p.data_size(data) } -> std::convertible_to<std::size_t>;
    };

struct FormulationSpace {
    FormulationRegistry registry;
    FormulationNeighborhood neighborhood = FormulationNeighborhood::singleton();
};

/// Shake the landscape along exactly one axis: data when phase is data,
/// formulation otherwise.
template <LandscapeProblem P>
Landscape<typename P::Data> shake_landscape(P& problem, const Landscape<typename P::Data>& L,
                                            const FormulationSpace& formulations, int k,
                                            Phase phase, Rng& data_rng, Rng& formulation_rng) {
    auto [data, formulation] = L.origin();
    if (phase == Phase::data) {
        auto shaken = problem.shake_data(data, k, data_rng);
        return Landscape<typename P::Data>(std::move(shaken), formulation);
    }
    const Formulation next =
        formulations.neighborhood.draw(formulation, k, formulations.registry, formulation_rng);
    return Landscape<typename P::Data>(std::move(data), next);
}

template <LandscapeProblem P>
struct EngineState {
    typename P::Solution x;
    Landscape<typename P::Data> L;
    double f_hat = std::numeric_limits<double>::infinity();
    std::int64_t t = 0;
    Phase phase = Phase::data;
    int phase_iteration = 0;
    int k = 0;
};

template <LandscapeProblem P>
struct BvlsResult {
    typename P::Solution x;
    Landscape<typename P::Data> L;
    double f_hat;
    RunRecord record;
};

/// Optional hook invoked after every iteration with the engine state and the
/// record just appended.
template <LandscapeProblem P>
using BvlsObserver = std::function<void(const EngineState<P>&, const IterationRecord&)>;

/// Basic Variable Landscape Search.
///
/// Alternates between the data phase and the formulation phase. Each phase
/// resets the shake power and runs its quota of
/// shake -> transition -> local search -> neighborhood change iterations, then
/// hands over to the other phase. A phase with a zero quota is skipped. The
/// iteration budget is checked before every iteration.
template <LandscapeProblem P>
BvlsResult<P> run_bvls(P& problem, typename P::Solution x0, Landscape<typename P::Data> L0,
                       const FormulationSpace& formulations, const VlsConfig& config,
                       std::uint64_t worker = 0, const BvlsObserver<P>& observer = {}) {
    using Clock = std::chrono::steady_clock;
    config.validate();

    Rng data_rng = make_stream(config.seed, worker, Stream::data_shake);
    Rng formulation_rng = make_stream(config.seed, worker, Stream::formulation_shake);
    Rng init_rng = make_stream(config.seed, worker, Stream::init);

    EngineState<P> st{std::move(x0), std::move(L0)};
    RunRecord record;
    record.worker = worker;

    const auto start = Clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    };
    auto budget_left = [&] {
        if (st.t >= config.max_iterations) return false;
        if (config.max_seconds && elapsed_ms() >= *config.max_seconds * 1000.0) return false;
        return true;
    };

    while (budget_left()) {
        const int i = phase_index(st.phase);
        const PowerRange range = config.powers[static_cast<std::size_t>(i)];
        const ChangeScheme scheme = config.change[static_cast<std::size_t>(i)];
        const int quota = config.quotas[static_cast<std::size_t>(i)];

        st.k = config.entry_power[static_cast<std::size_t>(i)].value_or(range.min);
        st.phase_iteration = 0;
        int nonimproving = 0;
        const bool chain = config.shake_origin[static_cast<std::size_t>(i)] == ShakeOrigin::previous_shake;
        std::optional<Landscape<typename P::Data>> last_shaken;
        auto in_phase = [&] {
            if (quota == 0) return false;
            if (config.max_nonimproving_per_phase)
                return nonimproving < *config.max_nonimproving_per_phase;
            return st.phase_iteration < quota;
        };

        while (in_phase() && budget_left()) {
            const int k_used = st.k;
            auto L_shaken = shake_landscape(problem, chain && last_shaken ? *last_shaken : st.L, formulations,
                                            st.k, st.phase, data_rng, formulation_rng);
            if (chain) last_shaken = L_shaken;
            st.x = problem.transition(st.x, st.L, L_shaken, init_rng);
            auto candidate = problem.local_search(st.x, L_shaken);
            const double f_candidate = problem.objective(L_shaken, candidate);

            bool improved = false;
            if (config.acceptance == AcceptanceRule::lexicographic) {
                improved = accept(st.x, candidate, formulations.registry,
                                  [&](const Formulation& f, const typename P::Solution& s) {
                                      const Landscape<typename P::Data> Lf(L_shaken.data(), f);
                                      return static_cast<double>(problem.objective(Lf, s));
                                  });
            } else if (config.reference == IncumbentReference::recorded_best) {
                improved = f_candidate < st.f_hat;
            } else {
                improved = f_candidate < problem.objective(L_shaken, st.x);
            }

            IterationRecord rec;
            rec.t = st.t;
            rec.phase = st.phase;
            rec.k = k_used;
            rec.sample_size = problem.data_size(L_shaken.data());
            rec.formulation_id = L_shaken.formulation().id;
            rec.candidate_objective = f_candidate;

            if (improved) {
                st.x = std::move(candidate);
                st.L = std::move(L_shaken);
                st.f_hat = f_candidate;
                nonimproving = 0;
            } else {
                ++record.unsuccessful;
                ++nonimproving;
            }
            st.k = scheme == ChangeScheme::sequential
                       ? next_power_sequential(improved, st.k, range.min, range.max)
                       : neighborhood_change_cyclic(st.k, range.min, range.max);

            rec.k_next = st.k;
            rec.objective = st.f_hat;
            rec.improved = improved;
            rec.elapsed_ms = elapsed_ms();
            record.iterations.push_back(rec);

            ++st.phase_iteration;
            ++st.t;
            if (observer) observer(st, record.iterations.back());
        }
        st.phase = next_phase(st.phase);
    }

    record.wall_ms = elapsed_ms();
    return BvlsResult<P>{std::move(st.x), std::move(st.L), st.f_hat, std::move(record)};
}

} // namespace vls
