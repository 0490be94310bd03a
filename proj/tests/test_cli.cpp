#include <gammalink/cli.hpp>
#include <gammalink/corpus.hpp>
#include <gammalink/io.hpp>
#include <gammalink/random.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace gammalink;

namespace {

const std::string fixtures = GAMMALINK_FIXTURE_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "gammalink");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const json corpus = json::parse(builtin_corpus_text);
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), corpus, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return fixtures + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("gammalink-test-" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST(Io, ParsesPresentationAndSequence) {
    const auto doc = load_document(fixture("powers-of-two.json"));
    const auto& p = std::get<SeifertPresentation>(doc);
    EXPECT_EQ(p.genus, 1);
    EXPECT_EQ(p.seifert, (IntMatrix{{0, 2}, {1, 0}}));
    EXPECT_EQ(p.name, "powers-of-two");
    const auto seq = std::get<SequenceFile>(load_document(fixture("lift-q3.json")));
    EXPECT_EQ(seq.gamma, (GammaSeq{1, 4, 3, 0, 0}));
}

TEST(Io, BigIntegersAsStrings) {
    const auto seq = std::get<SequenceFile>(parse_document(R"({"gamma": [1, "-123456789012345678901234567890"]})"));
    EXPECT_EQ(seq.gamma[1], Integer("-123456789012345678901234567890", 10));
    EXPECT_EQ(sequence_to_json(seq.gamma)["gamma"][1], "-123456789012345678901234567890");
}

TEST(Io, Diagnostics) {
    const auto message = [](const std::string& text) {
        try {
            parse_document(text, "f.json");
        } catch (const input_error& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_EQ(message("{\n  \"gamma\": [1,\n  2,,]\n}"), "f.json:3:5: JSON syntax error");
    EXPECT_NE(message(R"({"gamma": []})").find("f.json.gamma"), std::string::npos);
    EXPECT_NE(message(R"({"gamma": [1, 2.5]})").find("f.json.gamma[1]"), std::string::npos);
    EXPECT_NE(message(R"({"gamma": [1], "gamme": 2})").find("unknown field \"gamme\""), std::string::npos);
    EXPECT_NE(message(R"({"genus": 1, "seifert_matrix": [[0, 2], [1]], "v2": [1, 0], "v3": [0, 1], "lk23": 1})")
                  .find("f.json.seifert_matrix[1]"),
              std::string::npos);
    EXPECT_NE(message(R"({"genus": 1, "seifert_matrix": [[0, 2], [1, 0]], "v2": [1, 0], "lk23": 1})")
                  .find("missing field \"v3\""),
              std::string::npos);
}

TEST(Io, SequenceRoundTrip) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        const GammaSeq s = random_sequence(rng, rng() % 20, 1000000);
        const auto back = std::get<SequenceFile>(parse_document(sequence_to_json(s, "x").dump()));
        EXPECT_EQ(back.gamma, s);
        EXPECT_EQ(back.name, "x");
    }
    const auto p = gen_presentation(4, 2, 5);
    const auto q = std::get<SeifertPresentation>(parse_document(presentation_to_json(p).dump()));
    EXPECT_EQ(q.seifert, p.seifert);
    EXPECT_EQ(q.v2, p.v2);
    EXPECT_EQ(q.v3, p.v3);
    EXPECT_EQ(q.lk23, p.lk23);
}

TEST(Cli, Gamma) {
    auto r = run({"gamma", "-n", "5", fixture("powers-of-two.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 1 2 4 8 16\n");
    r = run({"gamma", "-n", "2", fixture("powers-of-two-v2-zero.json")});
    EXPECT_EQ(r.out, "7 0 0\n");
    r = run({"--machine", "gamma", "-n", "4", fixture("powers-of-two.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::get<SequenceFile>(parse_document(r.out)).gamma, (GammaSeq{1, 1, 2, 4, 8}));
}

TEST(Cli, GammaInputErrors) {
    EXPECT_EQ(run({"gamma", "-n", "3", write_temp("bad.json", "{\"genus\": 1,")}).code, 2);
    const auto r = run({"gamma", "-n", "3", fixture("bad-symmetric.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("det_not_one"), std::string::npos);
    EXPECT_EQ(run({"gamma", "-n", "3", fixture("lift-q3.json")}).code, 2);
    EXPECT_EQ(run({"gamma", fixture("powers-of-two.json")}).code, 2);
    EXPECT_EQ(run({"gamma", "-n", "3", fixture("does-not-exist.json")}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, H) {
    auto r = run({"h", fixture("powers-of-two.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "(t - 2)/(2t - 3)\n");
    r = run({"h", fixture("powers-of-two-v2-zero.json")});
    EXPECT_EQ(r.out, "7\n");
    r = run({"h", "--expand", "4", fixture("powers-of-two.json")});
    EXPECT_EQ(r.out, "(t - 2)/(2t - 3)\n1 1 2 4 8\n");
    r = run({"--machine", "h", "--expand", "2", fixture("powers-of-two.json")});
    const json j = json::parse(r.out);
    EXPECT_EQ(j["numerator"], json::parse("[-2, 1]"));
    EXPECT_EQ(j["denominator"], json::parse("[-3, 2]"));
    EXPECT_EQ(j["expansion"], json::parse("[1, 1, 2]"));
}

TEST(Cli, Equiv) {
    auto r = run({"equiv", fixture("lift-r0.json"), fixture("lift-q3.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "equivalent(1)\n");
    r = run({"equiv", fixture("lift-r1.json"), fixture("lift-q3.json")});
    EXPECT_EQ(r.code, 4);
    EXPECT_EQ(r.out, "distinct(2)\n");
    r = run({"equiv", fixture("zeros.json"), fixture("zeros.json")});
    EXPECT_EQ(r.code, 5);
    EXPECT_EQ(r.out, "indeterminate\n");
    r = run({"--machine", "equiv", fixture("alternating.json"), fixture("unit.json")});
    EXPECT_EQ(json::parse(r.out), json::parse(R"({"verdict": "equivalent", "shift": 1})"));
    r = run({"equiv", "-n", "6", fixture("alternating.json"), fixture("unit.json")});
    EXPECT_EQ(r.code, 0);
}

TEST(Cli, EquivErrors) {
    EXPECT_EQ(run({"equiv", fixture("lift-r0.json"), fixture("alternating.json")}).code, 2);
    EXPECT_EQ(run({"equiv", fixture("lift-r0.json"), fixture("powers-of-two.json")}).code, 2);
    EXPECT_EQ(run({"equiv", fixture("powers-of-two.json"), fixture("powers-of-two.json")}).code, 2);
    EXPECT_EQ(run({"equiv", "-n", "9", fixture("lift-r0.json"), fixture("lift-q3.json")}).code, 2);
    const auto r = run({"equiv", "-n", "6", fixture("powers-of-two.json"), fixture("powers-of-two.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "equivalent(0)\n");
}

TEST(Cli, SequenceCommands) {
    EXPECT_EQ(run({"swap", fixture("first-derivative.json")}).out, "0 -1 1 -1\n");
    EXPECT_EQ(run({"beta", "-k", "1", fixture("second-derivative.json")}).out, "-1\n");
    EXPECT_EQ(run({"mixed", "-p", "1", "-l", "1", fixture("second-derivative.json")}).out, "-1\n");
    const auto m = run({"milnor", fixture("gamma3.json")});
    EXPECT_EQ(m.out, "0 exact 0\n1 exact 0\n2 exact 0\n3 exact 1\n4 mod 1 0\n");
    const auto mm = json::parse(run({"--machine", "milnor", fixture("gamma3.json")}).out);
    EXPECT_EQ(mm["residues"][3], json::parse(R"({"index": 3, "modulus": 0, "residue": 1})"));
    const auto sw = run({"--machine", "swap", fixture("first-derivative.json")});
    EXPECT_EQ(std::get<SequenceFile>(parse_document(sw.out)).gamma, (GammaSeq{0, -1, 1, -1}));
    EXPECT_EQ(json::parse(run({"--machine", "beta", "-k", "1", fixture("second-derivative.json")}).out)["beta"], -1);
    EXPECT_EQ(json::parse(run({"--machine", "mixed", "-p", "0", "-l", "2", fixture("second-derivative.json")}).out)["value"], 1);
}

TEST(Cli, InsufficientOrderReportsMinimum) {
    const auto r = run({"beta", "-k", "3", fixture("second-derivative.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("need order >= 6"), std::string::npos);
    EXPECT_EQ(run({"mixed", "-p", "3", "-l", "2", fixture("second-derivative.json")}).code, 2);
    EXPECT_EQ(run({"beta", "-k", "0", fixture("second-derivative.json")}).code, 2);
    EXPECT_EQ(run({"swap", fixture("powers-of-two.json")}).code, 2);
}

TEST(Cli, SelftestPassesAndIsDeterministic) {
    const auto a = run({"selftest"});
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_NE(a.out.find("fixtures: "), std::string::npos);
    EXPECT_NE(a.out.find("selftest: PASS"), std::string::npos);
    EXPECT_EQ(run({"selftest"}).out, a.out);
}

TEST(Cli, SelftestNamesCorruptedFixture) {
    json corpus = json::parse(builtin_corpus_text);
    corpus["documents"]["gamma3"]["gamma"][3] = -1;
    const auto path = write_temp("corrupt-corpus.json", corpus.dump());
    const auto r = run({"selftest", "--corpus", path});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("gamma3/milnor"), std::string::npos);
    EXPECT_NE(r.out.find("selftest: FAIL"), std::string::npos);
}

TEST(Cli, BuiltinCorpusMatchesFixtureFiles) {
    // Documents in the embedded corpus agree with the standalone fixture files of the same name.
    const json corpus = json::parse(builtin_corpus_text);
    for (const auto& [name, doc] : corpus["documents"].items()) {
        const auto path = std::filesystem::path(fixtures) / (name + ".json");
        if (!std::filesystem::exists(path)) continue;
        json file = json::parse(std::ifstream(path));
        file.erase("name");
        EXPECT_EQ(file, doc) << name;
    }
}
