// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <gammalink/equivalence.hpp>
#include <gammalink/milnor.hpp>
#include <gammalink/random.hpp>
#include <gammalink/seifert.hpp>
#include <gammalink/series.hpp>
#include <gammalink/transforms.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace gammalink;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

SeifertPresentation powers_of_two() {
    return {1, IntMatrix{{0, 2}, {1, 0}}, {1, 0}, {0, 1}, 1, "powers-of-two"};
}

constexpr std::uint64_t corpus_seed = 0x5eed0001;
constexpr std::size_t corpus_size = 600;

std::vector<SeifertPresentation> generated_corpus() {
    std::vector<SeifertPresentation> out;
    for (std::size_t i = 0; i < corpus_size; ++i) {
        out.push_back(gen_presentation(corpus_seed + i, 1 + static_cast<long>(i % 3), 1 + static_cast<long>(i % 5)));
    }
    return out;
}

std::string show(const GammaSeq& s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

Check criterion1() {
    Check c;
    const auto start = Clock::now();
    const GammaSeq s = gamma_seq(powers_of_two(), 32);
    const double elapsed = seconds_since(start);
    std::vector<Integer> expected{1};
    Integer p = 1;
    for (int k = 1; k <= 32; ++k, p *= 2) expected.push_back(p);
    c.require(s == GammaSeq(expected), "sequence " + show(s));
    c.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
    if (c.ok) c.detail = "order 32, " + std::to_string(elapsed) + " s";
    return c;
}

Check criterion2() {
    Check c;
    const auto start = Clock::now();
    const RatFn h = h_closed_form(powers_of_two());
    c.require(h == ratfn_reduce(Poly{Rational(2), Rational(-1)}, Poly{Rational(3), Rational(-2)}),
              "fixture h = " + h.str());
    std::size_t checked = 0;
    for (const auto& p : generated_corpus()) {
        const Series e = series_expand_at_one(h_closed_form(p), 12);
        const GammaSeq g = gamma_seq(p, 12);
        bool same = true;
        for (std::size_t k = 0; k <= 12; ++k) same = same && e[k] == Rational(g[k]);
        c.require(same, "expansion mismatch for " + p.name);
        ++checked;
    }
    const double elapsed = seconds_since(start);
    c.require(checked >= 500, "only " + std::to_string(checked) + " presentations");
    c.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s");
    if (c.ok) c.detail = h.str() + ", " + std::to_string(checked) + " presentations, " + std::to_string(elapsed) + " s";
    return c;
}

Check criterion3() {
    Check c;
    constexpr std::size_t n = 16;
    std::vector<Rational> m(n + 1);
    for (std::size_t k = 1; k <= n; ++k) m[k] = (k % 2 == 0) ? 1 : -1;
    const Series mobius(m);
    std::mt19937_64 rng(0xacc3);
    std::size_t involutions = 0;
    std::size_t generating = 0;
    for (int i = 0; i < 600; ++i) {
        const GammaSeq s = random_sequence(rng, n, 50);
        const GammaSeq w = swap_seq(s);
        c.require(swap_seq(w) == s, "involution fails on " + show(s));
        ++involutions;
        if (i % 2 == 0) {
            std::vector<Rational> g(n + 1);
            for (std::size_t k = 1; k <= n; ++k) g[k] = s[k];
            const Series composed = compose(Series(g), mobius, n);
            bool same = w[0] == s[0];
            for (std::size_t k = 1; k <= n; ++k) same = same && composed[k] == Rational(w[k]);
            c.require(same, "generating function mismatch on " + show(s));
            ++generating;
        }
    }
    c.require(generating >= 200, "too few generating-function checks");
    if (c.ok) {
        c.detail = std::to_string(involutions) + " involutions, " + std::to_string(generating) + " generating-function checks";
    }
    return c;
}

Check criterion4() {
    Check c;
    std::mt19937_64 rng(0xacc4);
    std::size_t count = 0;
    for (int i = 0; i < 500; ++i) {
        const GammaSeq s = random_sequence(rng, 12, 50);
        for (std::size_t k = 1; k <= 6; ++k, ++count) {
            c.require(beta_from_gamma(s, k) == mixed_gamma0(s, k, k), "k=" + std::to_string(k) + " on " + show(s));
        }
    }
    if (c.ok) c.detail = std::to_string(count) + " comparisons";
    return c;
}

Check criterion5() {
    Check c;
    const auto v1 = are_equivalent(GammaSeq{1, 3, 0, 0, 0}, GammaSeq{1, 4, 3, 0, 0});
    c.require(v1 == EquivVerdict::equivalent(1), "(1,3,0,0,0) vs (1,4,3,0,0): " + v1.str());
    const auto v2 = are_equivalent(GammaSeq{1, 3, 1, 0, 0}, GammaSeq{1, 4, 3, 0, 0});
    c.require(v2.is_distinct(), "(1,3,1,0,0) vs (1,4,3,0,0): " + v2.str());
    std::vector<Integer> alt(13);
    std::vector<Integer> unit(13);
    for (std::size_t k = 0; k <= 12; ++k) alt[k] = (k % 2 == 0) ? 1 : -1;
    unit[0] = 1;
    const auto v3 = are_equivalent(GammaSeq(alt), GammaSeq(unit));
    c.require(v3 == EquivVerdict::equivalent(1), "alternating vs unit: " + v3.str());
    if (c.ok) c.detail = v1.str() + ", " + v2.str() + ", " + v3.str();
    return c;
}

Check criterion6() {
    Check c;
    std::mt19937_64 rng(0xacc6);
    std::size_t pairs = 0;
    for (int i = 0; i < 250; ++i) {
        const GammaSeq s = random_pinned_sequence(rng, 16, 20);
        const auto [canon, shift] = canonicalize(s);
        c.require(canonicalize(canon).first == canon && canonicalize(canon).second == 0,
                  "canonicalize not idempotent on " + show(s));
        for (long n = -8; n <= 8; ++n, ++pairs) {
            const GammaSeq image = apply_shift(s, n);
            const auto v = are_equivalent(s, image);
            c.require(v == EquivVerdict::equivalent(n), show(s) + " n=" + std::to_string(n) + ": " + v.str());
            c.require(canonicalize(image).first == canon, "canonical form moves under n=" + std::to_string(n));
        }
    }
    if (c.ok) c.detail = std::to_string(pairs) + " shifted pairs";
    return c;
}

Check criterion7() {
    Check c;
    std::mt19937_64 rng(0xacc7);
    std::size_t count = 0;
    for (int i = 0; i < 250; ++i) {
        const GammaSeq s = random_sequence(rng, 16, 20);
        const auto base = milnor_residues(s);
        for (long n = -5; n <= 5; ++n, ++count) {
            c.require(milnor_residues(apply_shift(s, n)) == base, show(s) + " n=" + std::to_string(n));
        }
    }
    const auto rs = milnor_residues(GammaSeq{0, 0, 0, 1, 0, 0, 0});
    c.require(rs[3] == MilnorResidue{3, 0, 1}, "index 3 gives " + rs[3].str());
    for (std::size_t k = 4; k < rs.size(); ++k) c.require(rs[k] == MilnorResidue{k, 1, 0}, "index gives " + rs[k].str());
    if (c.ok) c.detail = std::to_string(count) + " shifted sequences, fixture " + rs[3].str();
    return c;
}

Check criterion8() {
    Check c;
    std::size_t count = 0;
    for (const auto& p : generated_corpus()) {
        const auto vs = validate(p);
        c.require(vs.empty(), p.name + " rejected: " + (vs.empty() ? "" : vs.front().message));
        c.require(h_closed_form(p).denominator()(1) != 0, p.name + " has a pole at t=1");
        ++count;
    }
    const auto named = [](SeifertPresentation p, ViolationKind kind) {
        for (const auto& v : validate(p)) {
            if (v.kind == kind) return true;
        }
        return false;
    };
    auto symmetric = powers_of_two();
    symmetric.seifert = IntMatrix{{0, 1}, {1, 0}};
    c.require(named(symmetric, ViolationKind::FormNotUnimodular), "symmetric matrix not rejected as det_not_one");
    auto odd = powers_of_two();
    odd.seifert = IntMatrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 1}};
    c.require(named(odd, ViolationKind::OddSize), "odd-size matrix not rejected as odd_size");
    auto det4 = powers_of_two();
    det4.seifert = IntMatrix{{0, 3}, {1, 0}};
    c.require(named(det4, ViolationKind::FormNotUnimodular), "det 4 matrix not rejected as det_not_one");
    if (c.ok) c.detail = std::to_string(count) + " generated presentations, 3 counterexamples";
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
        {"fixture gamma sequence to order 32", criterion1},
        {"closed form of h matches iteration", criterion2},
        {"swap involution and generating function", criterion3},
        {"beta equals diagonal mixed value", criterion4},
        {"equivalence verdicts on worked examples", criterion5},
        {"shift soundness and canonical forms", criterion6},
        {"residue invariance under shifts", criterion7},
        {"presentation validation", criterion8},
    };
    int failures = 0;
    int index = 1;
    for (const auto& [name, run] : criteria) {
        Check c;
        try {
            c = run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %d. %s (%s)\n", c.ok ? "PASS" : "FAIL", index++, name, c.detail.c_str());
        if (!c.ok) ++failures;
    }
    std::printf("acceptance: %d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
