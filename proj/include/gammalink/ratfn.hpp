#pragma once

#include <gammalink/numeric.hpp>
#include <gammalink/poly.hpp>
#include <gammalink/series.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <utility>

namespace gammalink {

/// Element of Q(t) kept in canonical form: numerator and denominator coprime,
/// denominator with integer coefficients of content 1 and positive leading
/// coefficient. Equality is therefore structural. Laurent polynomials are
/// represented with a denominator t^m.
class RatFn {
public:
    RatFn() : den_(Poly::constant(1)) {}

    RatFn(const Poly& p) : num_(p), den_(Poly::constant(1)) { normalize_scale(); }  // NOLINT

    RatFn(const Rational& c) : RatFn(Poly::constant(c)) {}  // NOLINT

    /// Canonical reduced form of num/den.
    static RatFn reduce(Poly num, Poly den) {
        if (den.is_zero()) throw error("division by zero polynomial");
        RatFn f;
        if (num.is_zero()) return f;
        const Poly g = gcd(num, den);
        f.num_ = exact_divide(num, g);
        f.den_ = exact_divide(den, g);
        f.normalize_scale();
        return f;
    }

    /// t^n for any integer n.
    static RatFn t_power(long n) {
        if (n >= 0) return RatFn(Poly::monomial(1, static_cast<std::size_t>(n)));
        return reduce(Poly::constant(1), Poly::monomial(1, static_cast<std::size_t>(-n)));
    }

    const Poly& numerator() const noexcept { return num_; }
    const Poly& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }

    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        return reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) {
        return reduce(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        return reduce(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFn operator/(const RatFn& a, const RatFn& b) {
        if (b.is_zero()) throw error("division by zero polynomial");
        return reduce(a.num_ * b.den_, a.den_ * b.num_);
    }

    /// Exact value at x.
    Rational operator()(const Rational& x) const {
        const Rational d = den_(x);
        if (sgn(d) == 0) throw error("pole at evaluation point");
        return num_(x) / d;
    }

    std::string str() const {
        if (den_ == Poly::constant(1)) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RatFn& f) { return os << f.str(); }

private:
    // Scale numerator and denominator by the same constant so the denominator
    // is integer-primitive with positive leading coefficient.
    void normalize_scale() {
        if (num_.is_zero()) {
            den_ = Poly::constant(1);
            return;
        }
        Integer lcm_den = 1;
        Integer content = 0;
        for (const auto& q : den_.coefficients()) {
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
        }
        for (const auto& q : den_.coefficients()) {
            const Integer scaled = q.get_num() * (lcm_den / q.get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
        }
        Rational scale(lcm_den, content);
        scale.canonicalize();
        if (sgn(den_.leading()) < 0) scale = -scale;
        den_ *= scale;
        num_ *= scale;
    }

    Poly num_;
    Poly den_;
};

inline RatFn ratfn_reduce(const Poly& num, const Poly& den) { return RatFn::reduce(num, den); }

inline Rational ratfn_eval(const RatFn& f, const Rational& x) { return f(x); }

/// Taylor coefficients of f about t = 1 through (t-1)^order, via t = 1 + x and
/// the reciprocal power series of the shifted denominator.
inline Series series_expand_at_one(const RatFn& f, std::size_t order) {
    if (sgn(f.denominator()(1)) == 0) throw error("expansion center is a pole");
    const Series num = Series::from_poly(f.numerator().shifted(1), order);
    const Series den = Series::from_poly(f.denominator().shifted(1), order);
    return num * den.reciprocal();
}

/// n with f = t^n g, if such an integer exists.
inline std::optional<long> power_of_t_quotient(const RatFn& f, const RatFn& g) {
    if (g.is_zero()) throw error("comparison against zero");
    if (f.is_zero()) return std::nullopt;
    const RatFn q = f / g;
    const Poly& n = q.numerator();
    const Poly& d = q.denominator();
    const auto is_unit_monomial = [](const Poly& p) {
        return static_cast<long>(p.low_order()) == p.degree() && p.leading() == 1;
    };
    if (!is_unit_monomial(n) || !is_unit_monomial(d)) return std::nullopt;
    return n.degree() - d.degree();
}

}  // namespace gammalink
