#pragma once

#include <gammalink/numeric.hpp>
#include <gammalink/ratfn.hpp>
#include <gammalink/sequence.hpp>
#include <gammalink/transforms.hpp>

#include <optional>
#include <string>
#include <utility>

namespace gammalink {

struct EquivVerdict {
    enum class Kind { Equivalent, Distinct, Indeterminate };

    Kind kind = Kind::Indeterminate;
    Integer shift;              // Equivalent: apply_shift(a, shift) == b
    std::size_t witness = 0;    // Distinct: first index where every admissible shift fails

    static EquivVerdict equivalent(Integer n) { return {Kind::Equivalent, std::move(n), 0}; }
    static EquivVerdict distinct(std::size_t index) { return {Kind::Distinct, 0, index}; }
    static EquivVerdict indeterminate() { return {}; }

    bool is_equivalent() const noexcept { return kind == Kind::Equivalent; }
    bool is_distinct() const noexcept { return kind == Kind::Distinct; }
    bool is_indeterminate() const noexcept { return kind == Kind::Indeterminate; }

    friend bool operator==(const EquivVerdict& a, const EquivVerdict& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == Kind::Equivalent) return a.shift == b.shift;
        if (a.kind == Kind::Distinct) return a.witness == b.witness;
        return true;
    }

    std::string str() const {
        switch (kind) {
            case Kind::Equivalent: return "equivalent(" + shift.get_str() + ")";
            case Kind::Distinct: return "distinct(" + std::to_string(witness) + ")";
            case Kind::Indeterminate: return "indeterminate";
        }
        return {};
    }
};

/// Decides whether b = (T + Id)^n a for some integer n on the common truncation.
///
/// With k the first nonzero index of a, any shift leaves entries below k and
/// entry k itself fixed and moves entry k+1 by n * a_k, so n is pinned by
/// entry k+1 alone. If a's support starts at the last index, every n fits and
/// n = 0 is reported.
inline EquivVerdict are_equivalent(const GammaSeq& a, const GammaSeq& b) {
    if (a.order() != b.order()) throw error("order mismatch");
    const std::size_t order = a.order();
    const std::size_t ka = a.first_nonzero();
    const std::size_t kb = b.first_nonzero();
    if (ka > order && kb > order) return EquivVerdict::indeterminate();
    if (ka != kb) return EquivVerdict::distinct(std::min(ka, kb));
    const std::size_t k = ka;
    if (a[k] != b[k]) return EquivVerdict::distinct(k);
    if (k == order) return EquivVerdict::equivalent(0);
    const Integer diff = b[k + 1] - a[k + 1];
    if (!mpz_divisible_p(diff.get_mpz_t(), a[k].get_mpz_t())) return EquivVerdict::distinct(k + 1);
    const Integer n = exact_divide(diff, a[k]);
    const GammaSeq shifted = apply_shift(a, n);
    for (std::size_t i = k + 2; i <= order; ++i)
        if (shifted[i] != b[i]) return EquivVerdict::distinct(i);
    return EquivVerdict::equivalent(n);
}

/// Canonical representative of the (T + Id)-class of s and the shift reaching it:
/// entry k+1 is moved into [0, |s_k|) where k is the first nonzero index.
inline std::pair<GammaSeq, Integer> canonicalize(const GammaSeq& s) {
    const std::size_t k = s.first_nonzero();
    if (k >= s.order()) return {s, Integer(0)};
    const Integer r = mod_nonneg(s[k + 1], s[k]);
    const Integer n = exact_divide(Integer(r - s[k + 1]), s[k]);
    return {apply_shift(s, n), n};
}

/// n with f = t^n g; two zero functions compare equal with n = 0.
inline std::optional<long> ratfn_equivalent(const RatFn& f, const RatFn& g) {
    if (f.is_zero() && g.is_zero()) return 0L;
    return power_of_t_quotient(f, g);
}

}  // namespace gammalink
