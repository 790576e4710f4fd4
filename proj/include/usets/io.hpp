#pragma once

// JSON and CSV front end for the command-line tool. Parsers reject schema
// violations with validation_error; renderers are byte-deterministic.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "usets/usets.hpp"

namespace usets::io {

using json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw io_error("cannot read '" + path + "'");
    }
    return buffer.str();
}

inline json parse_json_text(const std::string& text, const std::string& origin) {
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) {
        throw validation_error("malformed JSON in " + origin);
    }
    return parsed;
}

inline json load_json(const std::string& path) {
    return parse_json_text(read_file(path), path);
}

namespace detail {

inline std::vector<std::string> string_array(const json& value, const std::string& what) {
    if (!value.is_array()) {
        throw validation_error(what + " must be an array of strings");
    }
    std::vector<std::string> out;
    for (const auto& item : value) {
        if (!item.is_string()) {
            throw validation_error(what + " must contain only strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

inline const json& required(const json& object, const char* key, const std::string& what) {
    auto it = object.find(key);
    if (it == object.end()) {
        throw validation_error(what + " is missing the \"" + key + "\" field");
    }
    return *it;
}

/// Fixed-point rendering used by every table output. Values are computed at
/// full precision and only rounded here.
inline std::string fixed4(double value) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << value;
    std::string text = os.str();
    if (text == "-0.0000") text = "0.0000";
    return text;
}

}  // namespace detail

// --- soft sets ---------------------------------------------------------
//
// {"universe": [...], "parameters": [...], "support": {"e1": ["H1"], ...}}

inline SoftSet parse_soft_set(const json& object, const std::string& what = "soft set") {
    if (!object.is_object()) {
        throw validation_error(what + " must be a JSON object");
    }
    auto universe = detail::string_array(detail::required(object, "universe", what),
                                         what + " universe");
    auto parameters = detail::string_array(detail::required(object, "parameters", what),
                                           what + " parameters");
    const json& support = detail::required(object, "support", what);
    if (!support.is_object()) {
        throw validation_error(what + " support must be an object");
    }
    SoftSet::Approximation approx;
    for (const auto& [param, members] : support.items()) {
        approx.emplace_back(param, detail::string_array(members, what + " value set"));
    }
    return SoftSet(std::move(universe), std::move(parameters), approx);
}

inline json soft_set_to_json(const SoftSet& s) {
    json support = json::object();
    for (const auto& param : s.support()) {
        support[param] = s.value_set(param).members();
    }
    return json{{"universe", s.universe()},
                {"parameters", s.parameters()},
                {"support", std::move(support)}};
}

inline std::string matrix_to_csv(const SoftMatrix& m) {
    std::ostringstream os;
    for (const auto& column : m.column_labels) os << ',' << column;
    os << '\n';
    for (std::size_t r = 0; r < m.row_labels.size(); ++r) {
        os << m.row_labels[r];
        for (std::size_t c = 0; c < m.column_labels.size(); ++c) {
            os << ',' << m.bits[r][c];
        }
        os << '\n';
    }
    return os.str();
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

}  // namespace detail

inline SoftMatrix matrix_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw validation_error("matrix CSV is empty");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto header = detail::split_csv_line(line);
    if (header.empty() || !header.front().empty()) {
        throw validation_error("matrix CSV header must start with an empty field");
    }
    SoftMatrix m;
    m.column_labels.assign(header.begin() + 1, header.end());
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = detail::split_csv_line(line);
        if (fields.size() != m.column_labels.size() + 1) {
            throw validation_error("matrix CSV row width does not match the header");
        }
        m.row_labels.push_back(fields.front());
        std::vector<int> row;
        for (std::size_t c = 1; c < fields.size(); ++c) {
            if (fields[c] == "0") {
                row.push_back(0);
            } else if (fields[c] == "1") {
                row.push_back(1);
            } else {
                throw validation_error("matrix CSV cell must be 0 or 1, got '" + fields[c] + "'");
            }
        }
        m.bits.push_back(std::move(row));
    }
    return m;
}

// --- grade scales and distributions -------------------------------------
//
// Scale: {"A": [85, 100], "B": [75, 84], ...}; entries are normalized to
// descending lower-endpoint order.

inline GradeScale parse_grade_scale(const json& object) {
    if (!object.is_object() || object.empty()) {
        throw validation_error("grade scale must be a non-empty JSON object");
    }
    std::vector<GradeScale::Entry> entries;
    for (const auto& [label, bounds] : object.items()) {
        if (!bounds.is_array() || bounds.size() != 2 || !bounds[0].is_number() ||
            !bounds[1].is_number()) {
            throw validation_error("grade '" + label + "' must map to [lower, upper]");
        }
        entries.emplace_back(label, Interval(bounds[0].get<double>(), bounds[1].get<double>()));
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return a.second.lower() > b.second.lower();
    });
    return GradeScale(std::move(entries));
}

/// Parses a grade spec of the form "A:3,B:7,C:5".
inline GradeDistribution parse_grade_spec(const std::string& spec) {
    std::vector<GradeDistribution::Entry> counts;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == item.size()) {
            throw validation_error("malformed grade spec item '" + item +
                                   "' (expected label:count)");
        }
        std::string label = item.substr(0, colon);
        std::string count_text = item.substr(colon + 1);
        std::size_t used = 0;
        int count = 0;
        try {
            count = std::stoi(count_text, &used);
        } catch (const std::exception&) {
            throw validation_error("malformed grade count '" + count_text + "'");
        }
        if (used != count_text.size()) {
            throw validation_error("malformed grade count '" + count_text + "'");
        }
        counts.emplace_back(std::move(label), count);
    }
    return GradeDistribution(std::move(counts));
}

// --- decision tables -----------------------------------------------------
//
// {"alternatives": [...], "parameters": [...], "weights": {...}?,
//  "cells": {"H1": {"e1": "A", "e2": 0}, ...}, "scale": {...}?}

struct DecisionInput {
    DecisionTable table;
    std::optional<GradeScale> scale;
};

inline DecisionInput parse_decision_table(const json& object) {
    const std::string what = "decision table";
    if (!object.is_object()) {
        throw validation_error(what + " must be a JSON object");
    }
    auto alternatives = detail::string_array(detail::required(object, "alternatives", what),
                                             "alternatives");
    auto parameters = detail::string_array(detail::required(object, "parameters", what),
                                           "parameters");
    const json& cells_json = detail::required(object, "cells", what);
    if (!cells_json.is_object()) {
        throw validation_error("cells must be an object keyed by alternative");
    }
    std::vector<std::vector<Cell>> cells;
    for (const auto& alternative : alternatives) {
        auto row_it = cells_json.find(alternative);
        if (row_it == cells_json.end() || !row_it->is_object()) {
            throw validation_error("cells missing row for alternative '" + alternative + "'");
        }
        std::vector<Cell> row;
        for (const auto& parameter : parameters) {
            auto cell_it = row_it->find(parameter);
            if (cell_it == row_it->end()) {
                throw validation_error("cell missing for ('" + alternative + "', '" +
                                       parameter + "')");
            }
            if (cell_it->is_number_integer()) {
                row.push_back(Cell::binary(cell_it->get<int>()));
            } else if (cell_it->is_string()) {
                row.push_back(Cell::grade(cell_it->get<std::string>()));
            } else {
                throw validation_error("cell ('" + alternative + "', '" + parameter +
                                       "') must be 0, 1, or a grade label");
            }
        }
        cells.push_back(std::move(row));
    }
    std::optional<std::vector<double>> weights;
    if (auto it = object.find("weights"); it != object.end() && !it->is_null()) {
        if (!it->is_object()) {
            throw validation_error("weights must be an object keyed by parameter");
        }
        std::vector<double> values;
        for (const auto& parameter : parameters) {
            auto w = it->find(parameter);
            if (w == it->end() || !w->is_number()) {
                throw validation_error("weight missing for parameter '" + parameter + "'");
            }
            values.push_back(w->get<double>());
        }
        weights = std::move(values);
    }
    std::optional<GradeScale> scale;
    if (auto it = object.find("scale"); it != object.end() && !it->is_null()) {
        scale = parse_grade_scale(*it);
    }
    DecisionTable table(std::move(alternatives), std::move(parameters), std::move(cells),
                        std::move(weights));
    return DecisionInput{std::move(table), std::move(scale)};
}

/// CSV form: header row names the parameters, each body row is an
/// alternative followed by 0/1 marks or grade labels.
inline DecisionInput parse_decision_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw validation_error("decision CSV is empty");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto header = detail::split_csv_line(line);
    if (header.empty() || !header.front().empty()) {
        throw validation_error("decision CSV header must start with an empty field");
    }
    std::vector<std::string> parameters(header.begin() + 1, header.end());
    std::vector<std::string> alternatives;
    std::vector<std::vector<Cell>> cells;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = detail::split_csv_line(line);
        if (fields.size() != parameters.size() + 1) {
            throw validation_error("decision CSV row width does not match the header");
        }
        alternatives.push_back(fields.front());
        std::vector<Cell> row;
        for (std::size_t c = 1; c < fields.size(); ++c) {
            if (fields[c] == "0" || fields[c] == "1") {
                row.push_back(Cell::binary(fields[c] == "1" ? 1 : 0));
            } else {
                row.push_back(Cell::grade(fields[c]));
            }
        }
        cells.push_back(std::move(row));
    }
    DecisionTable table(std::move(alternatives), std::move(parameters), std::move(cells));
    return DecisionInput{std::move(table), std::nullopt};
}

// --- fuzzy sets and topology families ------------------------------------
//
// Family file: {"kind": "fuzzy"|"soft", "universe": [...], "parameters": [...]?,
//               "opens": [...]}. A fuzzy open is an object element -> degree;
// a soft open is a support object parameter -> member array.

inline FuzzySet parse_fuzzy_set(const json& object, const std::vector<std::string>& universe,
                                const std::string& what = "fuzzy set") {
    if (!object.is_object()) {
        throw validation_error(what + " must be an object mapping elements to degrees");
    }
    std::map<std::string, double> memberships;
    for (const auto& [element, degree] : object.items()) {
        if (!degree.is_number()) {
            throw validation_error(what + " degree for '" + element + "' must be a number");
        }
        memberships[element] = degree.get<double>();
    }
    return FuzzySet::from_degrees(universe, memberships);
}

inline json fuzzy_set_to_json(const FuzzySet& f) {
    json out = json::object();
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[f.universe()[i]] = f.membership(i);
    }
    return out;
}

using TopologyInput = std::variant<FuzzyTopology, SoftTopology>;

inline TopologyInput parse_topology(const json& object) {
    const std::string what = "topology family";
    if (!object.is_object()) {
        throw validation_error(what + " must be a JSON object");
    }
    const json& kind = detail::required(object, "kind", what);
    auto universe = detail::string_array(detail::required(object, "universe", what), "universe");
    const json& opens_json = detail::required(object, "opens", what);
    if (!opens_json.is_array()) {
        throw validation_error("opens must be an array");
    }
    if (kind == "fuzzy") {
        std::vector<FuzzySet> opens;
        for (const auto& open : opens_json) {
            opens.push_back(parse_fuzzy_set(open, universe, "open set"));
        }
        return FuzzyTopology(std::move(universe), std::move(opens));
    }
    if (kind == "soft") {
        auto parameters = detail::string_array(detail::required(object, "parameters", what),
                                               "parameters");
        std::vector<SoftSet> opens;
        for (const auto& open : opens_json) {
            if (!open.is_object()) {
                throw validation_error("soft open must be a support object");
            }
            SoftSet::Approximation approx;
            for (const auto& [param, members] : open.items()) {
                approx.emplace_back(param, detail::string_array(members, "open value set"));
            }
            opens.emplace_back(universe, parameters, approx);
        }
        return SoftTopology(std::move(universe), std::move(parameters), std::move(opens));
    }
    throw validation_error("topology kind must be \"fuzzy\" or \"soft\"");
}

inline PointParameterMaps parse_point_parameter_maps(
    const std::string& point_spec, const std::string& parameter_spec,
    const SoftTopology& domain, const SoftTopology& codomain) {
    auto parse_pairs = [](const std::string& spec, const char* what) {
        std::map<std::string, std::string> out;
        std::istringstream in(spec);
        std::string item;
        while (std::getline(in, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos || colon == 0 || colon + 1 == item.size()) {
                throw validation_error(std::string("malformed ") + what + " item '" + item +
                                       "' (expected from:to)");
            }
            out[item.substr(0, colon)] = item.substr(colon + 1);
        }
        return out;
    };
    return PointParameterMaps(domain.universe(), domain.parameters(), codomain.universe(),
                              codomain.parameters(), parse_pairs(point_spec, "point map"),
                              parse_pairs(parameter_spec, "parameter map"));
}

}  // namespace usets::io
