// Command-line front end: parses JSON/CSV inputs, dispatches to the library,
// and prints deterministic tables or JSON.
//
// Exit codes: 0 success, 1 validation failure, 2 I/O failure.

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "usets/io.hpp"
#include "usets/usets.hpp"

namespace {

using usets::io::json;

constexpr int exit_ok = 0;
constexpr int exit_validation = 1;
constexpr int exit_io = 2;

std::string render_interval(const usets::Interval& i) {
    return "[" + usets::io::detail::fixed4(i.lower()) + ", " +
           usets::io::detail::fixed4(i.upper()) + "]";
}

std::string render_member_set(const std::vector<std::string>& members) {
    std::string out = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i > 0) out += ", ";
        out += members[i];
    }
    return out + "}";
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += sep;
        out += items[i];
    }
    return out;
}

usets::GradeScale resolve_scale(const std::string& scale_path,
                                const std::optional<usets::GradeScale>& embedded) {
    if (!scale_path.empty()) {
        return usets::io::parse_grade_scale(usets::io::load_json(scale_path));
    }
    if (embedded) return *embedded;
    return usets::GradeScale::letter_grades();
}

// --- assess ---------------------------------------------------------------

struct AssessOptions {
    std::string grades;
    std::string grades_file;
    std::string scale_path;
    std::string format = "table";
};

int run_assess(const AssessOptions& opt) {
    std::string spec = opt.grades;
    if (!opt.grades_file.empty()) {
        spec = usets::io::read_file(opt.grades_file);
        while (!spec.empty() && (spec.back() == '\n' || spec.back() == '\r')) spec.pop_back();
    }
    if (spec.empty()) {
        throw usets::validation_error("no grades given (use --grades or --grades-file)");
    }
    usets::GradeDistribution dist = usets::io::parse_grade_spec(spec);
    usets::GradeScale scale = resolve_scale(opt.scale_path, std::nullopt);
    usets::Assessment result = usets::assess_mean(dist, scale);
    if (opt.format == "json") {
        json out{{"mean", {result.mean.lower(), result.mean.upper()}},
                 {"value", result.value},
                 {"grade", result.grade}};
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "mean: " << render_interval(result.mean) << '\n'
                  << "value: " << usets::io::detail::fixed4(result.value) << '\n'
                  << "grade: " << result.grade << '\n';
    }
    return exit_ok;
}

// --- decide ---------------------------------------------------------------

struct DecideOptions {
    std::string table_path;
    std::string scale_path;
    bool weighted = false;
    std::string format = "table";
};

bool ends_with(const std::string& text, const std::string& suffix) {
    return text.size() >= suffix.size() &&
           text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int run_decide(const DecideOptions& opt) {
    usets::io::DecisionInput input =
        ends_with(opt.table_path, ".csv")
            ? usets::io::parse_decision_csv(usets::io::read_file(opt.table_path))
            : usets::io::parse_decision_table(usets::io::load_json(opt.table_path));
    usets::GradeScale scale = resolve_scale(opt.scale_path, input.scale);

    std::string method;
    usets::ChoiceValues values;
    if (opt.weighted) {
        method = "weighted";
        values = usets::weighted_choice_values(input.table, scale);
    } else if (input.table.all_binary()) {
        method = "binary";
        values = usets::binary_choice_values(input.table);
    } else {
        method = "hybrid";
        values = usets::hybrid_choice_values(input.table, scale);
    }
    auto groups = usets::rank(values);

    if (opt.format == "json") {
        json values_json = json::object();
        for (const auto& [label, value] : values) values_json[label] = value;
        json out{{"method", method}, {"values", std::move(values_json)}, {"ranking", groups}};
        std::cout << out.dump() << '\n';
        return exit_ok;
    }

    std::cout << "method: " << method << '\n' << "choice values:\n";
    for (const auto& [label, value] : values) {
        std::cout << "  " << label << ": " << usets::io::detail::fixed4(value) << '\n';
    }
    std::cout << "ranking:\n";
    double group_value = 0.0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        for (const auto& [label, value] : values) {
            if (label == groups[g].front()) group_value = value;
        }
        std::cout << "  " << (g + 1) << ". " << join(groups[g], ", ") << " ("
                  << usets::io::detail::fixed4(group_value) << ")\n";
    }
    return exit_ok;
}

// --- soft -------------------------------------------------------------------

struct SoftOptions {
    std::string verb;
    std::string first_path;
    std::string second_path;
    std::string format = "table";
};

void print_soft_set(const usets::SoftSet& s, const std::string& format) {
    if (format == "json") {
        std::cout << usets::io::soft_set_to_json(s).dump() << '\n';
        return;
    }
    std::cout << "universe: " << join(s.universe(), " ") << '\n'
              << "parameters: " << join(s.parameters(), " ") << '\n'
              << "support:\n";
    for (const auto& param : s.support()) {
        std::cout << "  " << param << ": " << render_member_set(s.value_set(param).members())
                  << '\n';
    }
}

std::string render_soft_inline(const usets::SoftSet& s) {
    std::string out;
    for (const auto& param : s.support()) {
        if (!out.empty()) out += ' ';
        out += "(" + param + ": " + render_member_set(s.value_set(param).members()) + ")";
    }
    return out;
}

int run_soft(const SoftOptions& opt) {
    usets::SoftSet first = usets::io::parse_soft_set(usets::io::load_json(opt.first_path));
    if (opt.verb == "union" || opt.verb == "intersect" || opt.verb == "check-subset") {
        usets::SoftSet second = usets::io::parse_soft_set(usets::io::load_json(opt.second_path));
        if (opt.verb == "union") {
            print_soft_set(usets::set_union(first, second), opt.format);
        } else if (opt.verb == "intersect") {
            print_soft_set(usets::set_intersection(first, second), opt.format);
        } else {
            bool subset = usets::is_soft_subset(first, second);
            bool proper = usets::is_proper_soft_subset(first, second);
            if (opt.format == "json") {
                std::cout << json{{"subset", subset}, {"proper", proper}}.dump() << '\n';
            } else {
                std::cout << "subset: " << (subset ? "yes" : "no") << '\n'
                          << "proper: " << (proper ? "yes" : "no") << '\n';
            }
        }
        return exit_ok;
    }
    if (opt.verb == "complement") {
        print_soft_set(usets::complement(first), opt.format);
        return exit_ok;
    }
    if (opt.verb == "subsets") {
        std::vector<usets::SoftSet> subsets = usets::enumerate_soft_subsets(first);
        if (opt.format == "json") {
            json out = json::array();
            for (const auto& s : subsets) out.push_back(usets::io::soft_set_to_json(s));
            std::cout << json{{"count", subsets.size()}, {"subsets", std::move(out)}}.dump()
                      << '\n';
        } else {
            std::cout << "count: " << subsets.size() << '\n';
            for (std::size_t i = 0; i < subsets.size(); ++i) {
                std::cout << "  " << (i + 1) << ". " << render_soft_inline(subsets[i]) << '\n';
            }
        }
        return exit_ok;
    }
    // tabular
    std::cout << usets::io::matrix_to_csv(usets::to_matrix(first));
    return exit_ok;
}

// --- topology ---------------------------------------------------------------

struct TopologyOptions {
    std::string family_path;
    bool separation = false;
    std::string continuity_path;
    std::string point_map;
    std::string parameter_map;
    std::string format = "table";
};

std::string witness_text(const usets::TopologyVerdict& verdict, bool soft) {
    using Failure = usets::TopologyVerdict::Failure;
    switch (verdict.failure) {
        case Failure::none:
            return "";
        case Failure::missing_empty_set:
            return soft ? "the null soft set is not in the family"
                        : "the empty set is not in the family";
        case Failure::missing_universal_set:
            return soft ? "the absolute soft set is not in the family"
                        : "the universal set is not in the family";
        case Failure::union_escapes:
            return "union of opens[" + std::to_string(verdict.first) + "] and opens[" +
                   std::to_string(verdict.second) + "] is not in the family";
        case Failure::intersection_escapes:
            return "intersection of opens[" + std::to_string(verdict.first) + "] and opens[" +
                   std::to_string(verdict.second) + "] is not in the family";
    }
    return "";
}

int run_topology(const TopologyOptions& opt) {
    usets::io::TopologyInput input = usets::io::parse_topology(usets::io::load_json(opt.family_path));
    const bool soft = std::holds_alternative<usets::SoftTopology>(input);

    usets::TopologyVerdict verdict;
    if (soft) {
        verdict = usets::is_soft_topology(std::get<usets::SoftTopology>(input));
    } else {
        verdict = usets::is_fuzzy_topology(std::get<usets::FuzzyTopology>(input));
    }

    std::optional<usets::SeparationClass> separation;
    if (opt.separation) {
        if (soft) {
            throw usets::validation_error("separation is implemented for fuzzy families only");
        }
        separation = usets::separation_class(std::get<usets::FuzzyTopology>(input));
    }

    std::optional<usets::ContinuityVerdict> continuity;
    if (!opt.continuity_path.empty()) {
        usets::io::TopologyInput codomain =
            usets::io::parse_topology(usets::io::load_json(opt.continuity_path));
        if (soft != std::holds_alternative<usets::SoftTopology>(codomain)) {
            throw usets::validation_error("continuity requires families of the same kind");
        }
        if (soft) {
            const auto& domain_topology = std::get<usets::SoftTopology>(input);
            const auto& codomain_topology = std::get<usets::SoftTopology>(codomain);
            usets::PointParameterMaps maps = usets::io::parse_point_parameter_maps(
                opt.point_map, opt.parameter_map, domain_topology, codomain_topology);
            continuity = usets::is_pu_continuous(domain_topology, codomain_topology, maps);
        } else {
            const auto& domain_topology = std::get<usets::FuzzyTopology>(input);
            const auto& codomain_topology = std::get<usets::FuzzyTopology>(codomain);
            std::map<std::string, std::string> map;
            std::istringstream in(opt.point_map);
            std::string item;
            while (std::getline(in, item, ',')) {
                auto colon = item.find(':');
                if (colon == std::string::npos || colon == 0 || colon + 1 == item.size()) {
                    throw usets::validation_error("malformed point map item '" + item + "'");
                }
                map[item.substr(0, colon)] = item.substr(colon + 1);
            }
            continuity = usets::is_fuzzy_continuous(domain_topology, codomain_topology, map);
        }
    }

    const std::string kind = soft ? "soft" : "fuzzy";
    if (opt.format == "json") {
        json out{{"kind", kind}, {"topology", verdict.ok()}};
        out["witness"] = verdict.ok() ? json(nullptr) : json(witness_text(verdict, soft));
        if (separation) out["separation"] = usets::to_string(*separation);
        if (continuity) {
            out["continuous"] = continuity->continuous;
            if (!continuity->continuous) {
                out["continuity_witness"] =
                    "preimage of opens[" + std::to_string(*continuity->violating_open) +
                    "] is not open in the domain";
            }
        }
        std::cout << out.dump() << '\n';
        return exit_ok;
    }

    std::cout << kind << " topology: " << (verdict.ok() ? "yes" : "no") << '\n';
    if (!verdict.ok()) {
        std::cout << "witness: " << witness_text(verdict, soft) << '\n';
    }
    if (separation) {
        std::cout << "separation: " << usets::to_string(*separation) << '\n';
    }
    if (continuity) {
        std::cout << "continuous: " << (continuity->continuous ? "yes" : "no") << '\n';
        if (!continuity->continuous) {
            std::cout << "witness: preimage of opens[" << *continuity->violating_open
                      << "] is not open in the domain\n";
        }
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"uncertainty-set toolkit: interval scores, fuzzy and soft set algebra,\n"
                 "choice-value decision methods, and finite topology checks"};
    app.require_subcommand(1);

    AssessOptions assess_opt;
    auto* assess = app.add_subcommand("assess", "mean grade assessment of a distribution");
    auto* grades_opt =
        assess->add_option("--grades", assess_opt.grades, "grade spec, e.g. A:3,B:7,C:5");
    assess->add_option("--grades-file", assess_opt.grades_file, "file holding a grade spec")
        ->excludes(grades_opt);
    assess->add_option("--scale", assess_opt.scale_path, "grade scale JSON file");
    assess->add_option("--format", assess_opt.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    DecideOptions decide_opt;
    auto* decide = app.add_subcommand("decide", "choice-value ranking of a decision table");
    decide->add_option("table", decide_opt.table_path, "decision table (.json or .csv)")
        ->required();
    decide->add_flag("--weighted", decide_opt.weighted, "use the parameter weights");
    decide->add_option("--scale", decide_opt.scale_path, "grade scale JSON file");
    decide->add_option("--format", decide_opt.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    SoftOptions soft_opt;
    auto* soft = app.add_subcommand("soft", "soft set operations");
    soft->require_subcommand(1);
    for (const char* verb : {"union", "intersect", "complement", "subsets", "tabular",
                             "check-subset"}) {
        auto* sub = soft->add_subcommand(verb);
        sub->add_option("first", soft_opt.first_path, "soft set JSON file")->required();
        if (std::string(verb) == "union" || std::string(verb) == "intersect" ||
            std::string(verb) == "check-subset") {
            sub->add_option("second", soft_opt.second_path, "soft set JSON file")->required();
        }
        sub->add_option("--format", soft_opt.format, "table or json")
            ->check(CLI::IsMember({"table", "json"}));
        sub->callback([&soft_opt, verb] { soft_opt.verb = verb; });
    }

    TopologyOptions topology_opt;
    auto* topology = app.add_subcommand("topology", "verify topology axioms on a family");
    topology->add_option("family", topology_opt.family_path, "family JSON file")->required();
    topology->add_flag("--separation", topology_opt.separation,
                       "report the separation class (fuzzy families)");
    topology->add_option("--continuity", topology_opt.continuity_path,
                         "codomain family for a continuity check");
    topology->add_option("--point-map", topology_opt.point_map,
                         "element map from:to pairs, comma separated");
    topology->add_option("--param-map", topology_opt.parameter_map,
                         "parameter map from:to pairs, comma separated");
    topology->add_option("--format", topology_opt.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_validation;
    }

    try {
        if (*assess) return run_assess(assess_opt);
        if (*decide) return run_decide(decide_opt);
        if (*soft) return run_soft(soft_opt);
        if (*topology) return run_topology(topology_opt);
    } catch (const usets::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const usets::capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const usets::validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    }
    return exit_ok;
}
