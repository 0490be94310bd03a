#pragma once

// Exact scalar types and the error hierarchy shared by every gammalink header.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gammalink {

using Integer = mpz_class;
using Rational = mpq_class;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a truncated sequence is too short for the requested index.
class insufficient_order : public error {
public:
    insufficient_order(std::size_t required, std::size_t available)
        : error("insufficient sequence order: need order >= " + std::to_string(required) +
                ", have " + std::to_string(available)),
          required_(required),
          available_(available) {}

    std::size_t required() const noexcept { return required_; }
    std::size_t available() const noexcept { return available_; }

private:
    std::size_t required_;
    std::size_t available_;
};

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses an optionally signed decimal integer; rejects anything else.
inline Integer parse_integer(std::string_view text) {
    std::string s(text);
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw error("not an integer: '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9') throw error("not an integer: '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

/// Binomial coefficient C(n, k) for any integer n (generalized, so C(-1, k) = (-1)^k).
/// C(n, k) = 0 for k < 0.
inline Integer binomial_general(const Integer& n, long k) {
    if (k < 0) return 0;
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

/// C(m, j) with the convention C(m, j) = 0 outside 0 <= j <= m, for m >= 0.
inline Integer binomial(long m, long j) {
    if (m < 0 || j < 0 || j > m) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(j));
    return r;
}

/// Least nonnegative residue of a modulo |m| (m != 0).
inline Integer mod_nonneg(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Integer exact_divide(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

}  // namespace gammalink
