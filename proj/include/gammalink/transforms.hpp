#pragma once

#include <gammalink/numeric.hpp>
#include <gammalink/sequence.hpp>

#include <vector>

namespace gammalink {

/// (T + Id)^n applied to s, where T is the right shift. Entry l of the result is
/// sum_q C(n, q) s_{l-q}, the coefficients of (1 + x)^n times the generating
/// function of s. Generalized binomials make negative n the inverse action.
inline GammaSeq apply_shift(const GammaSeq& s, const Integer& n) {
    if (sgn(n) == 0) return s;
    const std::size_t order = s.order();
    std::vector<Integer> c(order + 1);
    for (std::size_t q = 0; q <= order; ++q) c[q] = binomial_general(n, static_cast<long>(q));
    std::vector<Integer> out(order + 1);
    for (std::size_t l = 0; l <= order; ++l)
        for (std::size_t q = 0; q <= l; ++q) out[l] += c[q] * s[l - q];
    return GammaSeq(std::move(out));
}

inline GammaSeq apply_shift(const GammaSeq& s, long n) { return apply_shift(s, Integer(n)); }

/// Sequence of the link with the second and third components swapped:
/// entry 0 unchanged, entry k = (-1)^k sum_{j=1..k} C(k-1, j-1) s_j.
inline GammaSeq swap_seq(const GammaSeq& s) {
    std::vector<Integer> out(s.order() + 1);
    out[0] = s[0];
    for (std::size_t k = 1; k <= s.order(); ++k) {
        Integer acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += binomial(static_cast<long>(k - 1), static_cast<long>(j - 1)) * s[j];
        out[k] = (k % 2 == 0) ? acc : Integer(-acc);
    }
    return GammaSeq(std::move(out));
}

/// Linking number of the mixed derivative: (-1)^l sum_{j=1..l} C(l-1, j-1) s_{p+j}.
inline Integer mixed_gamma0(const GammaSeq& s, std::size_t p, std::size_t l) {
    if (l < 1) throw error("mixed derivative order l must be positive");
    s.require_order(p + l);
    Integer acc = 0;
    for (std::size_t j = 1; j <= l; ++j) acc += binomial(static_cast<long>(l - 1), static_cast<long>(j - 1)) * s[p + j];
    return (l % 2 == 0) ? acc : Integer(-acc);
}

/// Cochran's beta^k of (L1, L2) from the gamma sequence of (L1, L2, L2^0), where
/// L2^0 is the 0-framed push-off: (-1)^k sum_{j=1..k} C(k-1, j-1) s_{k+j}.
inline Integer beta_from_gamma(const GammaSeq& s, std::size_t k) {
    if (k < 1) throw error("beta index k must be positive");
    s.require_order(2 * k);
    Integer acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += binomial(static_cast<long>(k - 1), static_cast<long>(j - 1)) * s[k + j];
    return (k % 2 == 0) ? acc : Integer(-acc);
}

}  // namespace gammalink
