#include "mssc/sample.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mssc {

std::vector<std::size_t> draw_indices(std::size_t m, std::size_t s, vls::Rng& rng) {
    if (s > m)
        throw std::invalid_argument("sample size " + std::to_string(s) + " exceeds m = " +
                                    std::to_string(m));
    std::vector<std::size_t> out;
    if (s == m) {
        out.resize(m);
        std::iota(out.begin(), out.end(), std::size_t{0});
        return out;
    }
    // Floyd's subset sampling: s draws regardless of m. Membership lives in a
    // bitmap, which also yields the indices already sorted.
    std::vector<std::uint64_t> chosen((m + 63) / 64, 0);
    auto test_and_set = [&](std::size_t i) {
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        const bool was = (chosen[i / 64] & bit) != 0;
        chosen[i / 64] |= bit;
        return was;
    };
    for (std::size_t j = m - s; j < m; ++j) {
        const auto t = static_cast<std::size_t>(vls::uniform_below(rng, j + 1));
        if (test_and_set(t)) test_and_set(j);
    }
    out.reserve(s);
    for (std::size_t w = 0; w < chosen.size(); ++w)
        for (std::uint64_t bits = chosen[w]; bits != 0; bits &= bits - 1)
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    return out;
}

SampleRef draw_sample(const Dataset& data, std::size_t s, vls::Rng& rng) {
    return SampleRef{data.id(), draw_indices(data.rows(), s, rng)};
}

SampleRef full_sample(const Dataset& data) {
    return prefix_sample(data, data.rows());
}

SampleRef prefix_sample(const Dataset& data, std::size_t s) {
    if (s > data.rows()) throw std::invalid_argument("sample size exceeds dataset rows");
    SampleRef ref{data.id(), std::vector<std::size_t>(s)};
    std::iota(ref.indices.begin(), ref.indices.end(), std::size_t{0});
    return ref;
}

void check_sample(const Dataset& data, const SampleRef& ref) {
    if (ref.dataset_id != data.id())
        throw std::invalid_argument("sample references dataset " + std::to_string(ref.dataset_id) +
                                    ", which is not loaded");
    for (std::size_t i = 0; i < ref.indices.size(); ++i) {
        if (ref.indices[i] >= data.rows()) throw std::invalid_argument("sample index out of range");
        if (i > 0 && ref.indices[i - 1] >= ref.indices[i])
            throw std::invalid_argument("sample indices must be sorted and distinct");
    }
}

Matrix gather(const Dataset& data, const SampleRef& ref) {
    check_sample(data, ref);
    const std::size_t n = data.cols();
    Matrix out(ref.size(), n);
    const auto src = data.view();
    for (std::size_t i = 0; i < ref.size(); ++i) {
        const auto row = src.row(ref.indices[i]);
        std::copy(row.begin(), row.end(), out.row(i).begin());
    }
    return out;
}

Sample resolve(const Dataset& data, SampleRef ref) {
    auto points = std::make_shared<const Matrix>(gather(data, ref));
    return Sample{std::move(ref), std::move(points)};
}

} // namespace mssc
