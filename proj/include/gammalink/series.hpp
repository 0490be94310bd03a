#pragma once

#include <gammalink/numeric.hpp>
#include <gammalink/poly.hpp>

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

namespace gammalink {

/// Truncated power series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).
/// Order N means indices 0..N are exact; nothing ever silently extends it.
class Series {
public:
    explicit Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw error("series needs at least one coefficient");
    }

    Series(std::initializer_list<Rational> coeffs) : Series(std::vector<Rational>(coeffs)) {}

    static Series zero(std::size_t order) { return Series(std::vector<Rational>(order + 1)); }

    static Series from_poly(const Poly& p, std::size_t order) {
        std::vector<Rational> v(order + 1);
        for (std::size_t i = 0; i <= order; ++i) v[i] = p.coeff(i);
        return Series(std::move(v));
    }

    std::size_t order() const noexcept { return c_.size() - 1; }

    const Rational& operator[](std::size_t i) const { return c_.at(i); }

    const std::vector<Rational>& coefficients() const noexcept { return c_; }

    Series truncated(std::size_t order) const {
        require_order(order);
        return Series(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<long>(order) + 1));
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

    friend Series operator+(const Series& a, const Series& b) {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<Rational> v(n + 1);
        for (std::size_t i = 0; i <= n; ++i) v[i] = a.c_[i] + b.c_[i];
        return Series(std::move(v));
    }

    /// Product truncated to the smaller of the two orders.
    friend Series operator*(const Series& a, const Series& b) {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<Rational> v(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; i + j <= n; ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Series(std::move(v));
    }

    /// Multiplicative inverse to the same order; needs a nonzero constant term.
    Series reciprocal() const {
        if (sgn(c_[0]) == 0) throw error("series with zero constant term is not invertible");
        const std::size_t n = order();
        std::vector<Rational> r(n + 1);
        r[0] = Rational(1) / c_[0];
        for (std::size_t k = 1; k <= n; ++k) {
            Rational acc = 0;
            for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * r[k - j];
            r[k] = -acc * r[0];
        }
        return Series(std::move(r));
    }

    void require_order(std::size_t order) const {
        if (order > this->order()) throw insufficient_order(order, this->order());
    }

private:
    std::vector<Rational> c_;
};

/// outer(inner(x)) truncated to `order`. inner must have zero constant term;
/// both operands must be known through `order`.
inline Series compose(const Series& outer, const Series& inner, std::size_t order) {
    if (sgn(inner[0]) != 0) throw error("composition requires zero constant term");
    outer.require_order(order);
    inner.require_order(order);
    const Series in = inner.truncated(order);
    // Horner: terms of outer beyond `order` only contribute O(x^{order+1}).
    Series acc = Series::zero(order);
    for (std::size_t i = order + 1; i-- > 0;) {
        std::vector<Rational> v = (acc * in).coefficients();
        v[0] += outer[i];
        acc = Series(std::move(v));
    }
    return acc;
}

}  // namespace gammalink
