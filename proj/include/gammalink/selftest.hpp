#pragma once

// Built-in self-test: a fixture corpus of worked examples plus randomized
// cross-checks between independent computation paths, all with fixed seeds.

#include <gammalink/equivalence.hpp>
#include <gammalink/io.hpp>
#include <gammalink/matrix.hpp>
#include <gammalink/milnor.hpp>
#include <gammalink/random.hpp>
#include <gammalink/ratfn.hpp>
#include <gammalink/seifert.hpp>
#include <gammalink/series.hpp>
#include <gammalink/transforms.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace gammalink {

inline constexpr std::uint64_t default_selftest_seed = 20240611;

struct SuiteResult {
    explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::string first_failure;

    void record(bool ok, const std::function<std::string()>& describe) {
        if (ok) {
            ++passed;
            return;
        }
        if (failed++ == 0) first_failure = describe();
    }
};

struct SelftestReport {
    std::vector<SuiteResult> suites;

    bool ok() const {
        for (const auto& s : suites)
            if (s.failed) return false;
        return true;
    }
};

namespace detail {

inline json rational_to_json(const Rational& q) {
    if (q.get_den() == 1) return integer_to_json(q.get_num());
    return json(q.get_str());
}

inline json series_to_json(const Series& s) {
    json a = json::array();
    for (const auto& q : s.coefficients()) a.push_back(rational_to_json(q));
    return a;
}

inline json poly_to_json(const Poly& p) {
    json a = json::array();
    for (const auto& q : p.coefficients()) a.push_back(rational_to_json(q));
    return a;
}

inline json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto r = m.row(i);
        rows.push_back(integers_to_json(std::vector<Integer>(r.begin(), r.end())));
    }
    return rows;
}

inline IntMatrix matrix_from_json(const json& j) {
    std::vector<Integer> entries;
    const std::size_t cols = j.at(0).size();
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto row = json_integer_array(j[i], "matrix");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return IntMatrix(j.size(), cols, std::move(entries));
}

inline json verdict_to_json(const EquivVerdict& v) {
    json j;
    switch (v.kind) {
        case EquivVerdict::Kind::Equivalent:
            j["verdict"] = "equivalent";
            j["shift"] = integer_to_json(v.shift);
            break;
        case EquivVerdict::Kind::Distinct:
            j["verdict"] = "distinct";
            j["index"] = v.witness;
            break;
        case EquivVerdict::Kind::Indeterminate:
            j["verdict"] = "indeterminate";
            break;
    }
    return j;
}

class corpus_case {
public:
    corpus_case(const json& corpus, const json& c) : corpus_(corpus), c_(c) {}

    std::string name() const { return c_.at("name").get<std::string>(); }

    InputDocument document(const char* key) const {
        const std::string id = c_.at(key).get<std::string>();
        return document_from_json(corpus_.at("documents").at(id), id);
    }

    SeifertPresentation presentation(const char* key = "input") const {
        return std::get<SeifertPresentation>(document(key));
    }

    GammaSeq sequence(const char* key = "input") const { return std::get<SequenceFile>(document(key)).gamma; }

    std::size_t index(const char* key) const { return c_.at(key).get<std::size_t>(); }

    Integer integer(const char* key) const { return json_integer(c_.at(key), key); }

    /// What the case evaluates to, in the same JSON shape as "expect".
    json evaluate() const {
        const std::string op = c_.at("op").get<std::string>();
        if (op == "validate") {
            json codes = json::array();
            for (const auto& v : validate(presentation())) codes.push_back(violation_code(v.kind));
            return codes;
        }
        if (op == "gamma") return integers_to_json(gamma_seq(presentation(), index("order")).entries());
        if (op == "gamma_k") return integer_to_json(gamma_k(presentation(), index("k")));
        if (op == "inverse") return matrix_to_json(int_inverse(matrix_from_json(c_.at("matrix"))));
        if (op == "derivative_class") {
            return integers_to_json(derivative_class(presentation(), static_cast<long>(index("k"))));
        }
        if (op == "h") {
            const RatFn h = h_closed_form(presentation());
            return json{{"numerator", poly_to_json(h.numerator())}, {"denominator", poly_to_json(h.denominator())}};
        }
        if (op == "h_expand") return series_to_json(series_expand_at_one(h_closed_form(presentation()), index("order")));
        if (op == "shift") return integers_to_json(apply_shift(sequence(), integer("n")).entries());
        if (op == "swap") return integers_to_json(swap_seq(sequence()).entries());
        if (op == "mixed") return integer_to_json(mixed_gamma0(sequence(), index("p"), index("l")));
        if (op == "beta") return integer_to_json(beta_from_gamma(sequence(), index("k")));
        if (op == "milnor") {
            json out = json::array();
            for (const auto& r : milnor_residues(sequence()))
                out.push_back(json::array({integer_to_json(r.modulus), integer_to_json(r.residue)}));
            return out;
        }
        if (op == "equiv") return verdict_to_json(are_equivalent(sequence("a"), sequence("b")));
        if (op == "canonicalize") {
            auto [s, n] = canonicalize(sequence());
            return json{{"gamma", integers_to_json(s.entries())}, {"shift", integer_to_json(n)}};
        }
        throw error("unknown self-test op '" + op + "'");
    }

    const json& expected() const { return c_.at("expect"); }

private:
    const json& corpus_;
    const json& c_;
};

inline SuiteResult run_fixture_suite(const json& corpus) {
    SuiteResult suite("fixtures");
    for (const auto& c : corpus.at("cases")) {
        const corpus_case cc(corpus, c);
        std::string got;
        bool ok = false;
        try {
            const json value = cc.evaluate();
            ok = (value == cc.expected());
            got = value.dump();
        } catch (const std::exception& e) {
            got = std::string("exception: ") + e.what();
        }
        suite.record(ok, [&] {
            return "fixture '" + cc.name() + "': expected " + cc.expected().dump() + ", got " + got;
        });
    }
    return suite;
}

// -x/(1+x) = -x + x^2 - x^3 + ... to the given order.
inline Series mobius_substitution(std::size_t order) {
    std::vector<Rational> m(order + 1);
    for (std::size_t k = 1; k <= order; ++k) m[k] = (k % 2 == 0) ? 1 : -1;
    return Series(std::move(m));
}

inline std::string seq_text(const GammaSeq& s) { return "(" + s.str() + ")"; }

}  // namespace detail

/// h expanded at t = 1 against the iterative gamma recursion on generated presentations.
inline SuiteResult run_closed_form_suite(std::uint64_t seed, std::size_t count, std::size_t order = 12) {
    SuiteResult suite("closed-form-vs-iterative");
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t s = rng();
        const long genus = draw_int(rng, 1, 3);
        const long bound = draw_int(rng, 1, 5);
        const SeifertPresentation p = gen_presentation(s, genus, bound);
        const GammaSeq iterative = gamma_seq(p, order);
        const Series closed = series_expand_at_one(h_closed_form(p), order);
        bool ok = true;
        for (std::size_t k = 0; k <= order; ++k) ok = ok && closed[k] == Rational(iterative[k]);
        suite.record(ok, [&] {
            return "presentation seed " + std::to_string(s) + " genus " + std::to_string(genus) + " bound " +
                   std::to_string(bound) + ": iterative " + detail::seq_text(iterative);
        });
    }
    return suite;
}

/// Swap is an involution and agrees with composition by -x/(1+x).
inline SuiteResult run_swap_suite(std::uint64_t seed, std::size_t count, std::size_t order = 16) {
    SuiteResult suite("swap-involution");
    std::mt19937_64 rng(seed ^ 0x5a5a5a5aULL);
    const Series mobius = detail::mobius_substitution(order);
    for (std::size_t i = 0; i < count; ++i) {
        const GammaSeq s = random_sequence(rng, order, 9);
        const GammaSeq swapped = swap_seq(s);
        std::vector<Rational> g(order + 1);
        for (std::size_t k = 1; k <= order; ++k) g[k] = s[k];
        const Series composed = compose(Series(std::move(g)), mobius, order);
        bool ok = swap_seq(swapped) == s;
        for (std::size_t k = 1; k <= order; ++k) ok = ok && composed[k] == Rational(swapped[k]);
        suite.record(ok, [&] { return "sequence " + detail::seq_text(s); });
    }
    return suite;
}

/// are_equivalent(s, (T+Id)^n s) recovers n; canonical forms are class-constant.
inline SuiteResult run_shift_suite(std::uint64_t seed, std::size_t count, std::size_t order = 16) {
    SuiteResult suite("shift-soundness");
    std::mt19937_64 rng(seed ^ 0xa5a5a5a5ULL);
    for (std::size_t i = 0; i < count; ++i) {
        const GammaSeq s = random_pinned_sequence(rng, order, 9);
        const auto [canon, shift] = canonicalize(s);
        bool ok = canonicalize(canon).first == canon && apply_shift(s, shift) == canon;
        long failing = 0;
        for (long n = -8; n <= 8 && ok; ++n) {
            const GammaSeq image = apply_shift(s, n);
            ok = are_equivalent(s, image) == EquivVerdict::equivalent(n) && canonicalize(image).first == canon;
            failing = n;
        }
        suite.record(ok, [&] { return "sequence " + detail::seq_text(s) + " at shift " + std::to_string(failing); });
    }
    return suite;
}

/// Milnor residues do not move under the (T + Id)-action.
inline SuiteResult run_residue_suite(std::uint64_t seed, std::size_t count, std::size_t order = 16) {
    SuiteResult suite("residue-shift-invariance");
    std::mt19937_64 rng(seed ^ 0x3c3c3c3cULL);
    for (std::size_t i = 0; i < count; ++i) {
        const GammaSeq s = random_pinned_sequence(rng, order, 9);
        const auto base = milnor_residues(s);
        bool ok = true;
        long failing = 0;
        for (long n = -5; n <= 5 && ok; ++n) {
            ok = milnor_residues(apply_shift(s, n)) == base;
            failing = n;
        }
        suite.record(ok, [&] { return "sequence " + detail::seq_text(s) + " at shift " + std::to_string(failing); });
    }
    return suite;
}

inline SelftestReport run_selftest(const json& corpus, std::uint64_t seed = default_selftest_seed) {
    SelftestReport report;
    report.suites.push_back(detail::run_fixture_suite(corpus));
    report.suites.push_back(run_closed_form_suite(seed, 100));
    report.suites.push_back(run_swap_suite(seed, 200));
    report.suites.push_back(run_shift_suite(seed, 200));
    report.suites.push_back(run_residue_suite(seed, 200));
    return report;
}

inline void print_report(const SelftestReport& report, std::ostream& os) {
    for (const auto& s : report.suites) {
        os << s.name << ": " << s.passed << " passed, " << s.failed << " failed\n";
    }
    for (const auto& s : report.suites) {
        if (s.failed) os << "FAIL " << s.name << ": " << s.first_failure << '\n';
    }
    os << "selftest: " << (report.ok() ? "PASS" : "FAIL") << '\n';
}

inline json report_to_json(const SelftestReport& report) {
    json suites = json::array();
    for (const auto& s : report.suites) {
        json j{{"name", s.name}, {"passed", s.passed}, {"failed", s.failed}};
        if (s.failed) j["first_failure"] = s.first_failure;
        suites.push_back(j);
    }
    return json{{"suites", suites}, {"ok", report.ok()}};
}

}  // namespace gammalink
