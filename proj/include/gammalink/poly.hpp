#pragma once

#include <gammalink/numeric.hpp>

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gammalink {

/// Dense univariate polynomial over Q. Coefficients are stored by ascending
/// degree with trailing zeros trimmed, so the zero polynomial is empty.
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

    static Poly monomial(const Rational& c, std::size_t degree) {
        std::vector<Rational> v(degree + 1);
        v[degree] = c;
        return Poly(std::move(v));
    }

    /// The indeterminate t.
    static Poly t() { return monomial(1, 1); }

    static Poly from_integers(const std::vector<Integer>& coeffs) {
        std::vector<Rational> v(coeffs.begin(), coeffs.end());
        return Poly(std::move(v));
    }

    bool is_zero() const noexcept { return c_.empty(); }

    /// Degree, or -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }

    const std::vector<Rational>& coefficients() const noexcept { return c_; }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    const Rational& leading() const {
        if (c_.empty()) throw error("leading coefficient of zero polynomial");
        return c_.back();
    }

    /// Number of trailing zero coefficients at the low end, i.e. the largest m with t^m | p.
    std::size_t low_order() const {
        std::size_t m = 0;
        while (m < c_.size() && sgn(c_[m]) == 0) ++m;
        return m;
    }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// p(t + a), by Horner's scheme in the shifted variable.
    Poly shifted(const Rational& a) const {
        Poly result;
        const Poly lin{a, Rational(1)};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) result = result * lin + constant(*it);
        return result;
    }

    /// Multiplication by t^m.
    Poly times_t_power(std::size_t m) const {
        if (is_zero()) return {};
        std::vector<Rational> v(m);
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

    bool has_integer_coefficients() const {
        return std::all_of(c_.begin(), c_.end(),
                           [](const Rational& q) { return q.get_den() == 1; });
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& q : r.c_) q = -q;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    Poly& operator*=(const Rational& s) {
        if (sgn(s) == 0) {
            c_.clear();
            return *this;
        }
        for (auto& q : c_) q *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw error("division by zero polynomial");
        std::vector<Rational> rem = a.c_;
        const long db = b.degree();
        const long da = a.degree();
        if (da < db) return {Poly{}, a};
        std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1));
        const Rational& lb = b.c_.back();
        for (long k = da - db; k >= 0; --k) {
            const Rational q = rem[static_cast<std::size_t>(k + db)] / lb;
            quo[static_cast<std::size_t>(k)] = q;
            if (sgn(q) == 0) continue;
            for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.c_[static_cast<std::size_t>(j)];
        }
        rem.resize(static_cast<std::size_t>(db));
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    /// Quotient a/b; the division must be exact.
    friend Poly exact_divide(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw error("polynomial division is not exact");
        return q;
    }

    friend bool is_zero(const Poly& p) noexcept { return p.is_zero(); }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    friend Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return a * (Rational(1) / a.leading());
    }

    /// Human-readable form in descending degree, e.g. "2t^2 - t + 1/3".
    std::string str(std::string_view var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long d = degree(); d >= 0; --d) {
            const Rational& q = c_[static_cast<std::size_t>(d)];
            if (sgn(q) == 0) continue;
            Rational mag = abs(q);
            if (first) {
                if (sgn(q) < 0) os << '-';
            } else {
                os << (sgn(q) < 0 ? " - " : " + ");
            }
            first = false;
            const bool unit = (mag == 1);
            if (d == 0) {
                os << mag.get_str();
            } else if (!unit) {
                if (mag.get_den() == 1) os << mag.get_str();
                else os << '(' << mag.get_str() << ')';
            }
            if (d >= 1) os << var;
            if (d >= 2) os << '^' << d;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace gammalink
