#pragma once

#include <gammalink/numeric.hpp>
#include <gammalink/sequence.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace gammalink {

/// Uniform-ish draw from [lo, hi] that is reproducible across standard libraries.
inline long draw_int(std::mt19937_64& rng, long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return static_cast<long>(rng() % span) + lo;
}

/// Random sequence of the given order with entries in [-bound, bound].
inline GammaSeq random_sequence(std::mt19937_64& rng, std::size_t order, long bound) {
    std::vector<Integer> v(order + 1);
    for (auto& z : v) z = draw_int(rng, -bound, bound);
    return GammaSeq(std::move(v));
}

/// Random sequence whose first nonzero entry sits strictly before the last index,
/// so the (T + Id)-shift relating it to its images is determined by the truncation.
/// A random prefix of up to order/2 entries is zeroed.
inline GammaSeq random_pinned_sequence(std::mt19937_64& rng, std::size_t order, long bound) {
    for (;;) {
        std::vector<Integer> v = random_sequence(rng, order, bound).entries();
        const auto zeros = static_cast<std::size_t>(draw_int(rng, 0, static_cast<long>(order / 2)));
        for (std::size_t i = 0; i < zeros; ++i) v[i] = 0;
        GammaSeq s(std::move(v));
        if (s.first_nonzero() < s.order()) return s;
    }
}

}  // namespace gammalink
