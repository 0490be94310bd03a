#pragma once

// Presentation and sequence files. Both are single JSON documents; a document
// with a "seifert_matrix" field is a presentation, anything else a sequence.
//
//   {"genus":1, "seifert_matrix":[[0,2],[1,0]], "v2":[1,0], "v3":[0,1], "lk23":1, "name":"..."}
//   {"gamma":[1,1,2,4,8], "name":"..."}
//
// v2 and v3 are coordinates in the basis of H_1(S^3 - G) linking-dual to the
// surface basis of the Seifert matrix, not surface-basis coordinates. Integers
// may be written as JSON numbers or, when they do not fit in 64 bits, as
// decimal strings.

#include <gammalink/numeric.hpp>
#include <gammalink/seifert.hpp>
#include <gammalink/sequence.hpp>

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gammalink {

using json = nlohmann::json;

struct SequenceFile {
    GammaSeq gamma;
    std::string name;
};

using InputDocument = std::variant<SeifertPresentation, SequenceFile>;

/// Malformed input; the message carries the source, and a line or field path.
class input_error : public error {
public:
    using error::error;
};

namespace detail {

inline Integer json_integer(const json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()), 10);
        return Integer(std::to_string(j.get<std::int64_t>()), 10);
    }
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const error&) {
            throw input_error(where + ": expected an integer, got string " + j.dump());
        }
    }
    throw input_error(where + ": expected an integer, got " + std::string(j.type_name()) +
                      (j.is_number_float() ? " (write large integers as decimal strings)" : ""));
}

inline std::vector<Integer> json_integer_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw input_error(where + ": expected an array of integers");
    std::vector<Integer> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(json_integer(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

inline void reject_unknown_fields(const json& j, std::initializer_list<std::string_view> known, const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (auto k : known) ok = ok || key == k;
        if (!ok) throw input_error(where + ": unknown field \"" + key + "\"");
    }
}

inline const json& require_field(const json& j, const char* field, const std::string& where) {
    auto it = j.find(field);
    if (it == j.end()) throw input_error(where + ": missing field \"" + field + "\"");
    return *it;
}

inline std::string optional_name(const json& j, const std::string& where) {
    auto it = j.find("name");
    if (it == j.end()) return {};
    if (!it->is_string()) throw input_error(where + ".name: expected text");
    return it->get<std::string>();
}

}  // namespace detail

inline SeifertPresentation presentation_from_json(const json& j, const std::string& source = "input") {
    if (!j.is_object()) throw input_error(source + ": expected a JSON object");
    detail::reject_unknown_fields(j, {"genus", "seifert_matrix", "v2", "v3", "lk23", "name"}, source);
    SeifertPresentation p;
    const Integer genus = detail::json_integer(detail::require_field(j, "genus", source), source + ".genus");
    if (!genus.fits_slong_p()) throw input_error(source + ".genus: out of range");
    p.genus = genus.get_si();

    const json& rows = detail::require_field(j, "seifert_matrix", source);
    if (!rows.is_array() || rows.empty()) throw input_error(source + ".seifert_matrix: expected a nonempty array of rows");
    std::vector<Integer> entries;
    std::size_t cols = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string where = source + ".seifert_matrix[" + std::to_string(i) + "]";
        auto row = detail::json_integer_array(rows[i], where);
        if (i == 0) cols = row.size();
        if (row.size() != cols || cols == 0) {
            throw input_error(where + ": row has " + std::to_string(row.size()) + " entries, expected " +
                              std::to_string(cols));
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    p.seifert = IntMatrix(rows.size(), cols, std::move(entries));
    p.v2 = detail::json_integer_array(detail::require_field(j, "v2", source), source + ".v2");
    p.v3 = detail::json_integer_array(detail::require_field(j, "v3", source), source + ".v3");
    p.lk23 = detail::json_integer(detail::require_field(j, "lk23", source), source + ".lk23");
    p.name = detail::optional_name(j, source);
    return p;
}

inline SequenceFile sequence_from_json(const json& j, const std::string& source = "input") {
    if (!j.is_object()) throw input_error(source + ": expected a JSON object");
    detail::reject_unknown_fields(j, {"gamma", "name"}, source);
    auto entries = detail::json_integer_array(detail::require_field(j, "gamma", source), source + ".gamma");
    if (entries.empty()) throw input_error(source + ".gamma: sequence must be nonempty");
    return {GammaSeq(std::move(entries)), detail::optional_name(j, source)};
}

inline InputDocument document_from_json(const json& j, const std::string& source = "input") {
    if (j.is_object() && j.contains("seifert_matrix")) return presentation_from_json(j, source);
    return sequence_from_json(j, source);
}

inline json parse_json_text(std::string_view text, const std::string& source = "input") {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // Report a 1-based line and column for the byte offset.
        std::size_t line = 1;
        std::size_t col = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw input_error(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": JSON syntax error");
    }
}

inline InputDocument parse_document(std::string_view text, const std::string& source = "input") {
    return document_from_json(parse_json_text(text, source), source);
}

inline InputDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), path);
}

/// JSON number when the value fits in 64 bits, decimal string otherwise.
inline json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
    return json(z.get_str());
}

inline json integers_to_json(const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& z : v) a.push_back(integer_to_json(z));
    return a;
}

inline json sequence_to_json(const GammaSeq& s, const std::string& name = {}) {
    json j;
    j["gamma"] = integers_to_json(s.entries());
    if (!name.empty()) j["name"] = name;
    return j;
}

inline json presentation_to_json(const SeifertPresentation& p) {
    json j;
    j["genus"] = p.genus;
    json rows = json::array();
    for (std::size_t i = 0; i < p.seifert.rows(); ++i) {
        const auto r = p.seifert.row(i);
        rows.push_back(integers_to_json(std::vector<Integer>(r.begin(), r.end())));
    }
    j["seifert_matrix"] = rows;
    j["v2"] = integers_to_json(p.v2);
    j["v3"] = integers_to_json(p.v3);
    j["lk23"] = integer_to_json(p.lk23);
    if (!p.name.empty()) j["name"] = p.name;
    return j;
}

}  // namespace gammalink
