#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "mssc/kmeans.hpp"

namespace bigmeans {

enum class Algorithm { bigmeans, bigoptima, bigvns };

const char* to_string(Algorithm a);
/// Throws std::invalid_argument for unknown names.
Algorithm parse_algorithm(const std::string& name);

struct BigMeansConfig {
    Algorithm algorithm = Algorithm::bigmeans;
    std::size_t clusters = 2;
    /// Fixed sample size (bigmeans, bigvns).
    std::size_t sample_size = 0;
    /// Sample-size range (bigoptima).
    std::size_t sample_min = 0;
    std::size_t sample_max = 0;
    std::int64_t iterations = 100;
    std::optional<double> max_seconds;
    std::uint64_t seed = 0;
    int workers = 1;
    /// Solution-shake range (bigvns).
    int shake_min = 0;
    int shake_max = 0;
    /// Data-phase quota S1 (bigoptima).
    int phase_iterations = 10;
    /// Compare candidate and incumbent on the new sample instead of against
    /// the recorded best. Off reproduces keep-the-best.
    bool reevaluate_incumbent = false;
    mssc::KMeansOptions kmeans{};
};

/// Throws std::invalid_argument when the configuration cannot run on m rows.
void validate(const BigMeansConfig& cfg, std::size_t rows);

} // namespace bigmeans
