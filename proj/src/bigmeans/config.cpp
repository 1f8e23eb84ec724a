#include "bigmeans/config.hpp"

#include <stdexcept>

namespace bigmeans {

const char* to_string(Algorithm a) {
    switch (a) {
    case Algorithm::bigmeans: return "bigmeans";
    case Algorithm::bigoptima: return "bigoptima";
    case Algorithm::bigvns: return "bigvns";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "bigmeans") return Algorithm::bigmeans;
    if (name == "bigoptima") return Algorithm::bigoptima;
    if (name == "bigvns") return Algorithm::bigvns;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

void validate(const BigMeansConfig& cfg, std::size_t rows) {
    if (cfg.clusters < 1) throw std::invalid_argument("need at least one cluster");
    if (cfg.iterations <= 0) throw std::invalid_argument("iteration budget must be positive");
    if (cfg.max_seconds && !(*cfg.max_seconds > 0.0))
        throw std::invalid_argument("time budget must be positive");
    if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (cfg.algorithm == Algorithm::bigoptima) {
        if (cfg.sample_min < 1 || cfg.sample_min > cfg.sample_max)
            throw std::invalid_argument("sample range must satisfy 1 <= s_min <= s_max");
        if (cfg.sample_max > rows) throw std::invalid_argument("s_max exceeds the number of rows");
        if (cfg.phase_iterations < 1) throw std::invalid_argument("phase length must be >= 1");
    } else {
        if (cfg.sample_size < 1) throw std::invalid_argument("sample size must be >= 1");
        if (cfg.sample_size > rows) throw std::invalid_argument("sample size exceeds the number of rows");
    }
    if (cfg.algorithm == Algorithm::bigvns) {
        if (cfg.shake_min < 0 || cfg.shake_min > cfg.shake_max)
            throw std::invalid_argument("shake range must satisfy 0 <= k_min <= k_max");
        if (static_cast<std::size_t>(cfg.shake_max) > cfg.clusters)
            throw std::invalid_argument("shake k_max exceeds the cluster count");
    }
}

} // namespace bigmeans
