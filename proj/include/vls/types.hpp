#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vls {

/// Raised when a shake finds no admissible candidate (e.g. sample-size bounds
/// exclude every size reachable from the current one).
class DegenerateNeighborhood : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Phase : int { data = 0, formulation = 1 };

inline constexpr int phase_index(Phase p) { return static_cast<int>(p); }
inline constexpr Phase next_phase(Phase p) {
    return p == Phase::data ? Phase::formulation : Phase::data;
}
const char* to_string(Phase p);

enum class FormulationKind { mssc };

struct Formulation {
    int id = 0;
    FormulationKind kind = FormulationKind::mssc;
    /// Number of clusters p for MSSC.
    int cluster_count = 1;

    friend bool operator==(const Formulation&, const Formulation&) = default;
};

/// Ordered, fixed list F_0..F_{r-1}. Ids are positions, assigned on insertion.
class FormulationRegistry {
public:
    const Formulation& add_mssc(int cluster_count);

    std::size_t size() const { return formulations_.size(); }
    bool empty() const { return formulations_.empty(); }
    const Formulation& at(int id) const;
    bool contains(const Formulation& f) const;
    const std::vector<Formulation>& all() const { return formulations_; }

private:
    std::vector<Formulation> formulations_;
};

enum class Axis { data, formulation, solution };

/// Shake power meaning "radius spans the whole admissible range".
inline constexpr int kUnboundedPower = std::numeric_limits<int>::max();

/// A family of nested neighborhoods N_{k_min}..N_{k_max} with radii Phi_k.
class NeighborhoodSpec {
public:
    /// Validates k_min <= k_max, one radius per power, radii nonnegative and
    /// strictly increasing.
    NeighborhoodSpec(Axis axis, int k_min, int k_max, std::vector<double> radii,
                     std::string distance);

    /// Phi_k = k for k in [k_min, k_max]; requires k_min >= 0.
    static NeighborhoodSpec linear(Axis axis, int k_min, int k_max, std::string distance);

    Axis axis() const { return axis_; }
    int k_min() const { return k_min_; }
    int k_max() const { return k_max_; }
    const std::vector<double>& radii() const { return radii_; }
    const std::string& distance() const { return distance_; }

    bool admits(int k) const { return k == kUnboundedPower || (k >= k_min_ && k <= k_max_); }
    /// Radius for power k; +inf for kUnboundedPower.
    double radius(int k) const;

private:
    Axis axis_;
    int k_min_;
    int k_max_;
    std::vector<double> radii_;
    std::string distance_;
};

struct PowerRange {
    int min = 0;
    int max = 0;
};

/// How neighborhood change compares the candidate with the incumbent.
enum class IncumbentReference {
    /// f'(x') < f'(x): both evaluated on the shaken landscape.
    shaken_landscape,
    /// f'(x') < f_hat: against the objective recorded at the last acceptance
    /// (the keep-the-best rule).
    recorded_best,
};

enum class ChangeScheme { sequential, cyclic };

/// Landscape a shake starts from.
enum class ShakeOrigin {
    /// The incumbent landscape L.
    incumbent,
    /// The landscape drawn by the previous shake of the same phase; the first
    /// shake of a phase starts from L.
    previous_shake,
};

/// Strict single-objective comparison, or lexicographic comparison across
/// every registered formulation.
enum class AcceptanceRule { strict, lexicographic };

struct VlsConfig {
    /// Shake-power ranges per phase, indexed by Phase.
    std::array<PowerRange, 2> powers{};
    /// Iteration quotas (S1, S2) per phase.
    std::array<int, 2> quotas{1, 0};
    std::int64_t max_iterations = 1;
    std::optional<double> max_seconds;
    std::uint64_t seed = 0;
    int workers = 1;

    IncumbentReference reference = IncumbentReference::shaken_landscape;
    std::array<ChangeScheme, 2> change{ChangeScheme::sequential, ChangeScheme::sequential};
    std::array<ShakeOrigin, 2> shake_origin{ShakeOrigin::incumbent, ShakeOrigin::incumbent};
    AcceptanceRule acceptance = AcceptanceRule::strict;
    /// Shake power for the first iteration of a phase, overriding powers[i].min.
    std::array<std::optional<int>, 2> entry_power{};
    /// Alternative phase switch: leave a phase after this many consecutive
    /// non-improving iterations instead of after quotas[i] iterations.
    std::optional<int> max_nonimproving_per_phase;

    void validate() const;
};

/// A landscape L = L(X, F). It keeps both originators, so origin() is the
/// exact inverse of the evaluation map.
template <class Data>
class Landscape {
public:
    Landscape(Data data, Formulation formulation)
        : data_(std::move(data)), formulation_(formulation) {}

    const Data& data() const { return data_; }
    const Formulation& formulation() const { return formulation_; }
    std::pair<Data, Formulation> origin() const { return {data_, formulation_}; }

private:
    Data data_;
    Formulation formulation_;
};

/// Generic landscape evaluation: checks the formulation is registered.
template <class Data>
Landscape<Data> evaluate_landscape(Data data, const Formulation& formulation,
                                   const FormulationRegistry& registry) {
    if (!registry.contains(formulation))
        throw std::invalid_argument("unknown formulation id " + std::to_string(formulation.id));
    return Landscape<Data>(std::move(data), formulation);
}

} // namespace vls
