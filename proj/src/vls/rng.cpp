#include "vls/rng.hpp"

#include <stdexcept>

namespace vls {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t worker, Stream purpose) {
    std::uint64_t h = splitmix64(root);
    h = splitmix64(h ^ (worker * 0xd1b54a32d192ed03ULL));
    h = splitmix64(h ^ static_cast<std::uint64_t>(purpose));
    return h;
}

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    if (lo == hi) return lo;
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    const std::uint64_t offset = span == ~std::uint64_t{0} ? rng() : uniform_below(rng, span + 1);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + offset);
}

} // namespace vls
