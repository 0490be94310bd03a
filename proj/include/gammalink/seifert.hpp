#pragma once

// Seifert-matrix data of a 3-component link and the invariants computed from it:
// derivative homology classes, the gamma sequence, and the rational function h(t).

#include <gammalink/matrix.hpp>
#include <gammalink/numeric.hpp>
#include <gammalink/poly.hpp>
#include <gammalink/ratfn.hpp>
#include <gammalink/sequence.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gammalink {

/// Homological data of L = (L1, L2, L3) relative to a Seifert surface for L1.
/// v2 and v3 are coordinates in the basis of H_1 of the surface complement that
/// is linking-dual to the surface basis used for the Seifert matrix.
struct SeifertPresentation {
    long genus = 0;
    IntMatrix seifert;
    IntVector v2;
    IntVector v3;
    Integer lk23;
    std::string name;
};

enum class ViolationKind {
    NonPositiveGenus,
    NotSquare,
    OddSize,
    GenusMismatch,
    V2Length,
    V3Length,
    FormNotUnimodular,
};

inline const char* violation_code(ViolationKind k) {
    switch (k) {
        case ViolationKind::NonPositiveGenus: return "nonpositive_genus";
        case ViolationKind::NotSquare: return "not_square";
        case ViolationKind::OddSize: return "odd_size";
        case ViolationKind::GenusMismatch: return "genus_mismatch";
        case ViolationKind::V2Length: return "v2_length";
        case ViolationKind::V3Length: return "v3_length";
        case ViolationKind::FormNotUnimodular: return "det_not_one";
    }
    return "unknown";
}

struct Violation {
    ViolationKind kind;
    std::string message;
};

/// Every violated presentation invariant; empty means the presentation is valid.
inline std::vector<Violation> validate(const SeifertPresentation& p) {
    std::vector<Violation> out;
    const auto add = [&](ViolationKind k, std::string msg) { out.push_back({k, std::move(msg)}); };
    const auto& v = p.seifert;
    if (p.genus < 1) add(ViolationKind::NonPositiveGenus, "genus must be positive, got " + std::to_string(p.genus));
    if (!v.is_square()) {
        add(ViolationKind::NotSquare, "Seifert matrix is " + std::to_string(v.rows()) + "x" +
                                          std::to_string(v.cols()) + ", not square");
    }
    const std::size_t n = v.rows();
    if (v.is_square() && n % 2 != 0) add(ViolationKind::OddSize, "Seifert matrix has odd size " + std::to_string(n));
    if (v.is_square() && p.genus >= 1 && n != static_cast<std::size_t>(2 * p.genus)) {
        add(ViolationKind::GenusMismatch, "Seifert matrix size " + std::to_string(n) + " != 2*genus = " +
                                              std::to_string(2 * p.genus));
    }
    if (p.v2.size() != n) {
        add(ViolationKind::V2Length, "v2 has length " + std::to_string(p.v2.size()) + ", expected " + std::to_string(n));
    }
    if (p.v3.size() != n) {
        add(ViolationKind::V3Length, "v3 has length " + std::to_string(p.v3.size()) + ", expected " + std::to_string(n));
    }
    if (v.is_square() && n > 0) {
        const Integer d = det(v - v.transposed());
        if (d != 1) add(ViolationKind::FormNotUnimodular, "det(V - V^T) = " + d.get_str() + " != 1");
    }
    if (v.is_square() && n == 0) add(ViolationKind::FormNotUnimodular, "empty Seifert matrix");
    return out;
}

class invalid_presentation : public error {
public:
    explicit invalid_presentation(std::vector<Violation> violations)
        : error(describe(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    static std::string describe(const std::vector<Violation>& vs) {
        std::string s = "invalid presentation:";
        for (const auto& v : vs) s += std::string(" [") + violation_code(v.kind) + "] " + v.message + ";";
        return s;
    }

    std::vector<Violation> violations_;
};

namespace detail {

// A = V - V^T, its integral inverse, and the step operator A^{-1} V.
struct Resolvent {
    IntMatrix form;
    IntMatrix form_inverse;
    IntMatrix step;
};

inline Resolvent prepare(const SeifertPresentation& p) {
    if (auto vs = validate(p); !vs.empty()) throw invalid_presentation(std::move(vs));
    Resolvent r;
    r.form = p.seifert - p.seifert.transposed();
    r.form_inverse = int_inverse(r.form);
    r.step = r.form_inverse * p.seifert;
    return r;
}

}  // namespace detail

/// (V A^{-1})^k v2: the class of the k-th derivative curve, k >= 1.
inline IntVector derivative_class(const SeifertPresentation& p, long k) {
    if (k < 1) throw error("derivative index must be positive");
    const auto r = detail::prepare(p);
    const IntMatrix va = p.seifert * r.form_inverse;
    IntVector u = p.v2;
    for (long j = 0; j < k; ++j) u = va * u;
    return u;
}

/// Entries 0..order of the gamma sequence. Entry 0 is lk(L2, L3); for k >= 1,
/// gamma^k = u_k . v3 with u_1 = A^{-1} v2 and u_{j+1} = A^{-1} V u_j.
inline GammaSeq gamma_seq(const SeifertPresentation& p, std::size_t order) {
    const auto r = detail::prepare(p);
    std::vector<Integer> out;
    out.reserve(order + 1);
    out.push_back(p.lk23);
    IntVector u = r.form_inverse * p.v2;
    for (std::size_t k = 1; k <= order; ++k) {
        out.push_back(dot(u, p.v3));
        if (k < order) u = r.step * u;
    }
    return GammaSeq(std::move(out));
}

inline Integer gamma_k(const SeifertPresentation& p, std::size_t k) { return gamma_seq(p, k)[k]; }

/// h(t) = lk23 + (t-1) v3^T adj(A - (t-1)V) v2 / det(A - (t-1)V), reduced.
/// Summing the geometric series of the gamma formula gives this form; its
/// Taylor coefficients at t = 1 are the gamma sequence.
inline RatFn h_closed_form(const SeifertPresentation& p) {
    const auto r = detail::prepare(p);
    const std::size_t n = p.seifert.rows();
    // Entry (i, j) of A - (t-1)V is (A_ij + V_ij) - V_ij t.
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Integer& vij = p.seifert(i, j);
            m(i, j) = Poly{Rational(r.form(i, j) + vij), Rational(-vij)};
        }
    const Poly d = det(m);
    const PolyMatrix adj = adjugate(m);
    Poly bilinear;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Integer c = p.v3[i] * p.v2[j];
            if (sgn(c) != 0) bilinear += adj(i, j) * Rational(c);
        }
    const Poly x{Rational(-1), Rational(1)};
    return ratfn_reduce(Poly::constant(Rational(p.lk23)) * d + x * bilinear, d);
}

/// Deterministic pseudorandom valid presentation. V - V^T equals the standard
/// symplectic form before an optional unimodular change of basis V -> P^T V P.
inline SeifertPresentation gen_presentation(std::uint64_t seed, long genus, long bound) {
    if (genus < 1 || bound < 1) throw error("gen_presentation needs genus >= 1 and bound >= 1");
    std::mt19937_64 rng(seed);
    const auto draw = [&](long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return Integer(static_cast<long>(rng() % span) + lo);
    };
    const auto n = static_cast<std::size_t>(2 * genus);
    IntMatrix v(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        v(i, i) = draw(-bound, bound);
        for (std::size_t j = 0; j < i; ++j) {
            v(i, j) = draw(-bound, bound);
            // J has +1 at (2a, 2a+1) and -1 at (2a+1, 2a).
            const bool pair = (j % 2 == 0) && (i == j + 1);
            v(j, i) = v(i, j) + (pair ? 1 : 0);
        }
    }
    if (rng() % 2 == 0) {
        // Product of a few elementary row operations with small multipliers.
        IntMatrix change = IntMatrix::identity(n);
        const int steps = static_cast<int>(rng() % 4) + 1;
        for (int s = 0; s < steps; ++s) {
            const auto a = static_cast<std::size_t>(rng() % n);
            auto b = static_cast<std::size_t>(rng() % n);
            if (a == b) b = (b + 1) % n;
            const Integer c = draw(-2, 2);
            IntMatrix e = IntMatrix::identity(n);
            e(a, b) = c;
            change = change * e;
        }
        v = change.transposed() * v * change;
    }
    SeifertPresentation p;
    p.genus = genus;
    p.seifert = std::move(v);
    p.v2.resize(n);
    p.v3.resize(n);
    for (auto& x : p.v2) x = draw(-bound, bound);
    for (auto& x : p.v3) x = draw(-bound, bound);
    p.lk23 = draw(-bound, bound);
    p.name = "generated-" + std::to_string(seed);
    return p;
}

}  // namespace gammalink
