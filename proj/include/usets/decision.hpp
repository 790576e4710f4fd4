#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "usets/errors.hpp"
#include "usets/fuzzy_set.hpp"
#include "usets/interval.hpp"

namespace usets {

/// Ordered mapping from linguistic grades to disjoint score intervals on the
/// 0-100 scale, listed from the highest grade down.
class GradeScale {
public:
    using Entry = std::pair<std::string, Interval>;

    explicit GradeScale(std::vector<Entry> grades) : grades_(std::move(grades)) {
        if (grades_.empty()) {
            throw validation_error("grade scale must not be empty");
        }
        std::vector<std::string> labels;
        for (const auto& [label, interval] : grades_) {
            (void)interval;
            if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
                throw validation_error("duplicate grade label '" + label + "'");
            }
            labels.push_back(label);
        }
        // Strictly descending lower endpoints plus adjacent disjointness
        // imply pairwise disjointness.
        for (std::size_t i = 0; i + 1 < grades_.size(); ++i) {
            if (!(grades_[i].second.lower() > grades_[i + 1].second.lower())) {
                throw validation_error("grade intervals must be listed in descending order "
                                       "of lower endpoint");
            }
            if (!(grades_[i + 1].second.upper() < grades_[i].second.lower())) {
                throw validation_error("grade intervals must be pairwise disjoint");
            }
        }
    }

    /// The common five-letter grading of the 0-100 score scale.
    static GradeScale letter_grades() {
        return GradeScale({{"A", Interval(85.0, 100.0)},
                           {"B", Interval(75.0, 84.0)},
                           {"C", Interval(60.0, 74.0)},
                           {"D", Interval(50.0, 59.0)},
                           {"F", Interval(0.0, 49.0)}});
    }

    const std::vector<Entry>& entries() const { return grades_; }

    const Interval& interval_for(const std::string& label) const {
        for (const auto& [grade, interval] : grades_) {
            if (grade == label) return interval;
        }
        throw validation_error("unknown grade '" + label + "'");
    }

    bool has(const std::string& label) const {
        return std::any_of(grades_.begin(), grades_.end(),
                           [&](const Entry& e) { return e.first == label; });
    }

private:
    std::vector<Entry> grades_;
};

/// Grade of the interval containing the value; for values in a gap between
/// intervals, the nearest grade, ties resolved toward the higher grade.
inline std::string classify(double value, const GradeScale& scale) {
    if (!(value >= 0.0 && value <= 100.0)) {
        throw validation_error("score outside [0, 100]: " + std::to_string(value));
    }
    std::string best;
    double best_distance = 0.0;
    for (const auto& [grade, interval] : scale.entries()) {
        double distance = std::max({0.0, interval.lower() - value, value - interval.upper()});
        if (distance == 0.0) return grade;
        if (best.empty() || distance < best_distance - value_tolerance) {
            best = grade;
            best_distance = distance;
        }
    }
    return best;
}

/// Multiset of grades observed in an assessment.
class GradeDistribution {
public:
    using Entry = std::pair<std::string, int>;

    explicit GradeDistribution(std::vector<Entry> counts) : counts_(std::move(counts)) {
        if (counts_.empty()) {
            throw validation_error("grade distribution must not be empty");
        }
        for (const auto& [label, count] : counts_) {
            (void)label;
            if (count < 1) {
                throw validation_error("grade count must be >= 1, got " + std::to_string(count));
            }
        }
    }

    const std::vector<Entry>& counts() const { return counts_; }

private:
    std::vector<Entry> counts_;
};

struct Assessment {
    Interval mean;
    double value;
    std::string grade;
};

/// Mean score interval of the distribution, its representative value, and the
/// grade that value falls into.
inline Assessment assess_mean(const GradeDistribution& dist, const GradeScale& scale) {
    std::vector<WeightedIntervalBag::Entry> entries;
    entries.reserve(dist.counts().size());
    for (const auto& [label, count] : dist.counts()) {
        entries.emplace_back(scale.interval_for(label), count);
    }
    Interval m = mean(WeightedIntervalBag(std::move(entries)));
    double value = representative_value(m);
    return Assessment{m, value, classify(value, scale)};
}

/// One table cell: a binary mark or a linguistic grade.
class Cell {
public:
    static Cell binary(int bit) {
        if (bit != 0 && bit != 1) {
            throw validation_error("binary cell must be 0 or 1, got " + std::to_string(bit));
        }
        return Cell(bit);
    }

    static Cell grade(std::string label) {
        if (label.empty()) {
            throw validation_error("grade cell label must not be empty");
        }
        return Cell(std::move(label));
    }

    bool is_binary() const { return std::holds_alternative<int>(value_); }
    bool is_grade() const { return !is_binary(); }

    int bit() const {
        if (!is_binary()) throw validation_error("cell holds a grade, not a binary mark");
        return std::get<int>(value_);
    }

    const std::string& grade_label() const {
        if (!is_grade()) throw validation_error("cell holds a binary mark, not a grade");
        return std::get<std::string>(value_);
    }

    bool operator==(const Cell&) const = default;

private:
    explicit Cell(int bit) : value_(bit) {}
    explicit Cell(std::string label) : value_(std::move(label)) {}

    std::variant<int, std::string> value_;
};

/// Alternatives x parameters table with binary or grade cells and optional
/// per-parameter weights in (0, 1].
class DecisionTable {
public:
    DecisionTable(std::vector<std::string> alternatives, std::vector<std::string> parameters,
                  std::vector<std::vector<Cell>> cells,
                  std::optional<std::vector<double>> weights = std::nullopt)
        : alternatives_(std::move(alternatives)),
          parameters_(std::move(parameters)),
          cells_(std::move(cells)),
          weights_(std::move(weights)) {
        detail::validate_universe(alternatives_, "alternative list");
        detail::validate_universe(parameters_, "parameter list");
        if (cells_.size() != alternatives_.size()) {
            throw validation_error("cell row count does not match the alternatives");
        }
        for (const auto& row : cells_) {
            if (row.size() != parameters_.size()) {
                throw validation_error("cell row width does not match the parameters");
            }
        }
        if (weights_) {
            if (weights_->size() != parameters_.size()) {
                throw validation_error("weights must cover every parameter");
            }
            for (double w : *weights_) {
                if (!(w > 0.0 && w <= 1.0)) {
                    throw validation_error("weight outside (0, 1]: " + std::to_string(w));
                }
            }
        }
    }

    const std::vector<std::string>& alternatives() const { return alternatives_; }
    const std::vector<std::string>& parameters() const { return parameters_; }
    const std::vector<std::vector<Cell>>& cells() const { return cells_; }
    const std::optional<std::vector<double>>& weights() const { return weights_; }

    const Cell& cell(std::size_t alternative, std::size_t parameter) const {
        return cells_.at(alternative).at(parameter);
    }

    bool all_binary() const {
        for (const auto& row : cells_) {
            for (const auto& cell : row) {
                if (!cell.is_binary()) return false;
            }
        }
        return true;
    }

private:
    std::vector<std::string> alternatives_;
    std::vector<std::string> parameters_;
    std::vector<std::vector<Cell>> cells_;
    std::optional<std::vector<double>> weights_;
};

using ChoiceValues = std::vector<std::pair<std::string, double>>;

/// Row sums of an all-binary table.
inline ChoiceValues binary_choice_values(const DecisionTable& t) {
    ChoiceValues out;
    out.reserve(t.alternatives().size());
    for (std::size_t a = 0; a < t.alternatives().size(); ++a) {
        double sum = 0.0;
        for (std::size_t p = 0; p < t.parameters().size(); ++p) {
            const Cell& cell = t.cell(a, p);
            if (!cell.is_binary()) {
                throw validation_error("binary choice values require an all-binary table; '" +
                                       t.alternatives()[a] + "' has a grade cell");
            }
            sum += cell.bit();
        }
        out.emplace_back(t.alternatives()[a], sum);
    }
    return out;
}

namespace detail {

// Grade intervals live on the 0-100 scale and enter the choice values
// normalized to 0-1.
inline Interval normalized_interval(const GradeScale& scale, const std::string& label) {
    return usets::scale(0.01, scale.interval_for(label));
}

}  // namespace detail

/// Binary cells add their raw mark; grade cells add the representative value
/// of the summed normalized grade intervals.
inline ChoiceValues hybrid_choice_values(const DecisionTable& t, const GradeScale& scale) {
    ChoiceValues out;
    out.reserve(t.alternatives().size());
    for (std::size_t a = 0; a < t.alternatives().size(); ++a) {
        double binary_sum = 0.0;
        std::optional<Interval> grade_sum;
        for (std::size_t p = 0; p < t.parameters().size(); ++p) {
            const Cell& cell = t.cell(a, p);
            if (cell.is_binary()) {
                binary_sum += cell.bit();
            } else {
                Interval piece = detail::normalized_interval(scale, cell.grade_label());
                grade_sum = grade_sum ? add(*grade_sum, piece) : piece;
            }
        }
        double grade_part = grade_sum ? representative_value(*grade_sum) : 0.0;
        out.emplace_back(t.alternatives()[a], binary_sum + grade_part);
    }
    return out;
}

/// Weighted variant: binary 1-cells add their parameter weight; grade cells
/// add V of the weighted normalized interval sum.
inline ChoiceValues weighted_choice_values(const DecisionTable& t, const GradeScale& scale) {
    if (!t.weights()) {
        throw validation_error("weighted choice values require parameter weights");
    }
    const std::vector<double>& weights = *t.weights();
    ChoiceValues out;
    out.reserve(t.alternatives().size());
    for (std::size_t a = 0; a < t.alternatives().size(); ++a) {
        double binary_sum = 0.0;
        std::optional<Interval> grade_sum;
        for (std::size_t p = 0; p < t.parameters().size(); ++p) {
            const Cell& cell = t.cell(a, p);
            if (cell.is_binary()) {
                binary_sum += weights[p] * cell.bit();
            } else {
                Interval piece = usets::scale(
                    weights[p], detail::normalized_interval(scale, cell.grade_label()));
                grade_sum = grade_sum ? add(*grade_sum, piece) : piece;
            }
        }
        double grade_part = grade_sum ? representative_value(*grade_sum) : 0.0;
        out.emplace_back(t.alternatives()[a], binary_sum + grade_part);
    }
    return out;
}

/// Groups alternatives by descending choice value. Values within the shared
/// tolerance form one tie group; input order is preserved inside a group.
inline std::vector<std::vector<std::string>> rank(const ChoiceValues& values) {
    if (values.empty()) {
        throw validation_error("cannot rank an empty choice-value mapping");
    }
    ChoiceValues sorted = values;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::vector<std::vector<std::string>> groups;
    double group_value = 0.0;
    for (const auto& [label, value] : sorted) {
        if (groups.empty() || std::abs(group_value - value) > value_tolerance) {
            groups.push_back({label});
            group_value = value;
        } else {
            groups.back().push_back(label);
        }
    }
    return groups;
}

}  // namespace usets
