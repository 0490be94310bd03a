#pragma once

// Command-line front end. Exit codes are stable across commands:
//   0 success / equivalent, 1 self-test failure, 2 input error,
//   4 distinct, 5 indeterminate.

#include <gammalink/equivalence.hpp>
#include <gammalink/io.hpp>
#include <gammalink/milnor.hpp>
#include <gammalink/ratfn.hpp>
#include <gammalink/seifert.hpp>
#include <gammalink/selftest.hpp>
#include <gammalink/transforms.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace gammalink::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_selftest_failed = 1,
    exit_input_error = 2,
    exit_distinct = 4,
    exit_indeterminate = 5,
};

/// Raised inside command handlers for anything that maps to exit code 2.
class usage_error : public error {
public:
    using error::error;
};

struct Options {
    bool machine = false;
    std::size_t order = 0;
    std::optional<std::size_t> expand;
    std::optional<std::size_t> equiv_order;
    std::size_t k = 0;
    std::size_t p = 0;
    std::size_t l = 0;
    std::string file;
    std::string file_b;
    std::string corpus_path;
    std::uint64_t seed = default_selftest_seed;
};

namespace detail {

inline SeifertPresentation require_presentation(const InputDocument& doc, const std::string& path) {
    if (!std::holds_alternative<SeifertPresentation>(doc)) {
        throw usage_error(path + ": expected a presentation file (with a \"seifert_matrix\" field)");
    }
    SeifertPresentation p = std::get<SeifertPresentation>(doc);
    if (auto vs = validate(p); !vs.empty()) {
        std::string msg = path + ": presentation fails validation";
        for (const auto& v : vs) msg += std::string("\n  ") + violation_code(v.kind) + ": " + v.message;
        throw usage_error(msg);
    }
    return p;
}

inline SequenceFile require_sequence(const InputDocument& doc, const std::string& path) {
    if (!std::holds_alternative<SequenceFile>(doc)) {
        throw usage_error(path + ": expected a sequence file (with a \"gamma\" field)");
    }
    return std::get<SequenceFile>(doc);
}

inline void print_json(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

inline int cmd_gamma(const Options& o, std::ostream& out) {
    const auto p = require_presentation(load_document(o.file), o.file);
    const GammaSeq s = gamma_seq(p, o.order);
    if (o.machine) print_json(out, sequence_to_json(s, p.name));
    else out << s.str() << '\n';
    return exit_ok;
}

inline int cmd_h(const Options& o, std::ostream& out) {
    const auto p = require_presentation(load_document(o.file), o.file);
    const RatFn h = h_closed_form(p);
    std::optional<Series> expansion;
    if (o.expand) expansion = series_expand_at_one(h, *o.expand);
    if (o.machine) {
        json j{{"numerator", gammalink::detail::poly_to_json(h.numerator())},
               {"denominator", gammalink::detail::poly_to_json(h.denominator())},
               {"text", h.str()}};
        if (expansion) j["expansion"] = gammalink::detail::series_to_json(*expansion);
        print_json(out, j);
        return exit_ok;
    }
    out << h.str() << '\n';
    if (expansion) {
        std::string line;
        for (const auto& q : expansion->coefficients()) {
            if (!line.empty()) line += ' ';
            line += q.get_str();
        }
        out << line << '\n';
    }
    return exit_ok;
}

inline int cmd_beta(const Options& o, std::ostream& out) {
    const auto s = require_sequence(load_document(o.file), o.file);
    const Integer b = beta_from_gamma(s.gamma, o.k);
    if (o.machine) print_json(out, json{{"k", o.k}, {"beta", integer_to_json(b)}});
    else out << b.get_str() << '\n';
    return exit_ok;
}

inline int cmd_swap(const Options& o, std::ostream& out) {
    const auto s = require_sequence(load_document(o.file), o.file);
    const GammaSeq w = swap_seq(s.gamma);
    if (o.machine) print_json(out, sequence_to_json(w, s.name.empty() ? s.name : s.name + "-swapped"));
    else out << w.str() << '\n';
    return exit_ok;
}

inline int cmd_mixed(const Options& o, std::ostream& out) {
    const auto s = require_sequence(load_document(o.file), o.file);
    const Integer v = mixed_gamma0(s.gamma, o.p, o.l);
    if (o.machine) print_json(out, json{{"p", o.p}, {"l", o.l}, {"value", integer_to_json(v)}});
    else out << v.get_str() << '\n';
    return exit_ok;
}

inline int cmd_milnor(const Options& o, std::ostream& out) {
    const auto s = require_sequence(load_document(o.file), o.file);
    const auto residues = milnor_residues(s.gamma);
    if (o.machine) {
        json arr = json::array();
        for (const auto& r : residues) {
            arr.push_back(json{{"index", r.index},
                               {"modulus", integer_to_json(r.modulus)},
                               {"residue", integer_to_json(r.residue)}});
        }
        print_json(out, json{{"residues", arr}});
        return exit_ok;
    }
    for (const auto& r : residues) out << r.str() << '\n';
    return exit_ok;
}

inline GammaSeq equiv_operand(const InputDocument& doc, const std::string& path, std::optional<std::size_t> order) {
    if (std::holds_alternative<SeifertPresentation>(doc)) {
        if (!order) throw usage_error("equiv: -n ORDER is required for presentation files");
        return gamma_seq(require_presentation(doc, path), *order);
    }
    const GammaSeq& s = std::get<SequenceFile>(doc).gamma;
    return order ? s.truncated(*order) : s;
}

inline int cmd_equiv(const Options& o, std::ostream& out) {
    const InputDocument a = load_document(o.file);
    const InputDocument b = load_document(o.file_b);
    if (a.index() != b.index()) {
        throw usage_error("equiv: both inputs must be sequence files or both presentation files");
    }
    const GammaSeq sa = equiv_operand(a, o.file, o.equiv_order);
    const GammaSeq sb = equiv_operand(b, o.file_b, o.equiv_order);
    const EquivVerdict v = are_equivalent(sa, sb);
    if (o.machine) print_json(out, gammalink::detail::verdict_to_json(v));
    else out << v.str() << '\n';
    switch (v.kind) {
        case EquivVerdict::Kind::Equivalent: return exit_ok;
        case EquivVerdict::Kind::Distinct: return exit_distinct;
        case EquivVerdict::Kind::Indeterminate: return exit_indeterminate;
    }
    return exit_ok;
}

inline int cmd_selftest(const Options& o, const json& builtin_corpus, std::ostream& out) {
    json corpus = builtin_corpus;
    if (!o.corpus_path.empty()) {
        std::ifstream in(o.corpus_path, std::ios::binary);
        if (!in) throw usage_error(o.corpus_path + ": cannot open file");
        std::ostringstream buf;
        buf << in.rdbuf();
        corpus = parse_json_text(buf.str(), o.corpus_path);
    }
    const SelftestReport report = run_selftest(corpus, o.seed);
    if (o.machine) print_json(out, report_to_json(report));
    else print_report(report, out);
    return report.ok() ? exit_ok : exit_selftest_failed;
}

}  // namespace detail

/// Parses arguments and runs one command. Never throws; returns the exit code.
inline int run(int argc, const char* const* argv, const json& builtin_corpus, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact gamma-invariants of 3-component links from Seifert-matrix data", "gammalink"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--machine", o.machine, "Emit structured JSON instead of plain text");

    auto* gamma = app.add_subcommand("gamma", "Gamma sequence of a presentation to order N");
    gamma->add_option("-n", o.order, "Truncation order")->required();
    gamma->add_option("FILE", o.file, "Presentation file")->required();

    auto* h = app.add_subcommand("h", "Rational function h(t) of a presentation");
    h->add_option("--expand", o.expand, "Also print the Taylor coefficients at t = 1 to this order");
    h->add_option("FILE", o.file, "Presentation file")->required();

    auto* beta = app.add_subcommand("beta", "Cochran beta^k from the gamma sequence of (L1, L2, L2 push-off)");
    beta->add_option("-k", o.k, "Index k >= 1")->required()->check(CLI::PositiveNumber);
    beta->add_option("FILE", o.file, "Sequence file")->required();

    auto* swap = app.add_subcommand("swap", "Gamma sequence after swapping the second and third components");
    swap->add_option("FILE", o.file, "Sequence file")->required();

    auto* mixed = app.add_subcommand("mixed", "Linking number of the mixed derivative with exponents p and l");
    mixed->add_option("-p", o.p, "Derivative exponent of the second component")->required();
    mixed->add_option("-l", o.l, "Derivative exponent of the third component, l >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    mixed->add_option("FILE", o.file, "Sequence file")->required();

    auto* milnor = app.add_subcommand("milnor", "Milnor invariant residues mu(1^k 2 3)");
    milnor->add_option("FILE", o.file, "Sequence file")->required();

    auto* equiv = app.add_subcommand("equiv", "Decide equivalence modulo the (T + Id)-action");
    equiv->add_option("-n", o.equiv_order, "Truncation order (required for presentations)");
    equiv->add_option("FILE_A", o.file, "First file")->required();
    equiv->add_option("FILE_B", o.file_b, "Second file")->required();

    auto* selftest = app.add_subcommand("selftest", "Run the built-in fixture corpus and randomized oracles");
    selftest->add_option("--corpus", o.corpus_path, "Use this corpus file instead of the built-in one");
    selftest->add_option("--seed", o.seed, "Seed for the randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_input_error;
    }

    try {
        if (*gamma) return detail::cmd_gamma(o, out);
        if (*h) return detail::cmd_h(o, out);
        if (*beta) return detail::cmd_beta(o, out);
        if (*swap) return detail::cmd_swap(o, out);
        if (*mixed) return detail::cmd_mixed(o, out);
        if (*milnor) return detail::cmd_milnor(o, out);
        if (*equiv) return detail::cmd_equiv(o, out);
        if (*selftest) return detail::cmd_selftest(o, builtin_corpus, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_input_error;
}

}  // namespace gammalink::cli
