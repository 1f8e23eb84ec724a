#pragma once

#include <cstdint>
#include <random>

namespace vls {

using Rng = std::mt19937_64;

/// Purpose tags for derived random streams. Each (root seed, worker, purpose)
/// triple maps to an independent generator, so adding workers or consuming
/// one stream never shifts another.
enum class Stream : std::uint64_t {
    data_shake = 1,
    formulation_shake = 2,
    init = 3,
    solution_shake = 4,
    final_selection = 5,
};

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t worker, Stream purpose);

inline Rng make_stream(std::uint64_t root, std::uint64_t worker, Stream purpose) {
    return Rng(derive_seed(root, worker, purpose));
}

/// Uniform integer in [lo, hi] by multiply-shift rejection, so the stream of
/// values is fixed by the generator alone and not by the standard library.
/// Consumes nothing when the range holds a single value. Throws
/// std::invalid_argument when lo > hi.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Uniform integer in [0, bound) for bound >= 1; same method as uniform_int.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    __extension__ typedef unsigned __int128 u128;
    u128 m = static_cast<u128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<u128>(rng()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

} // namespace vls
