#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "usets/errors.hpp"
#include "usets/fuzzy_set.hpp"

namespace usets {

/// Per-element membership/non-membership pair with m + n <= 1.
class IntuitionisticFuzzySet {
public:
    struct Grade {
        double membership;
        double non_membership;
    };

    IntuitionisticFuzzySet(std::vector<std::string> universe, std::vector<Grade> grades)
        : universe_(std::move(universe)), grades_(std::move(grades)) {
        detail::validate_universe(universe_, "universe");
        if (grades_.size() != universe_.size()) {
            throw validation_error("grade list size does not match the universe");
        }
        for (std::size_t i = 0; i < grades_.size(); ++i) {
            const auto& g = grades_[i];
            if (!(g.membership >= 0.0 && g.non_membership >= 0.0) ||
                g.membership + g.non_membership > 1.0 + value_tolerance) {
                throw validation_error("grades of '" + universe_[i] +
                                       "' violate 0 <= m, n and m + n <= 1");
            }
        }
    }

    const std::vector<std::string>& universe() const { return universe_; }
    std::size_t size() const { return universe_.size(); }

    const Grade& grade(std::size_t index) const { return grades_.at(index); }

    const Grade& grade(const std::string& label) const {
        auto idx = detail::index_of(universe_, label);
        if (!idx) {
            throw validation_error("element '" + label + "' is not in the universe");
        }
        return grades_[*idx];
    }

private:
    std::vector<std::string> universe_;
    std::vector<Grade> grades_;
};

/// Single-valued neutrosophic set: truth/indeterminacy/falsity per element,
/// each in [0, 1], sum anywhere in [0, 3].
class NeutrosophicSet {
public:
    struct Grade {
        double truth;
        double indeterminacy;
        double falsity;

        double sum() const { return truth + indeterminacy + falsity; }
    };

    NeutrosophicSet(std::vector<std::string> universe, std::vector<Grade> grades)
        : universe_(std::move(universe)), grades_(std::move(grades)) {
        detail::validate_universe(universe_, "universe");
        if (grades_.size() != universe_.size()) {
            throw validation_error("grade list size does not match the universe");
        }
        for (std::size_t i = 0; i < grades_.size(); ++i) {
            const auto& g = grades_[i];
            auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
            if (!in_unit(g.truth) || !in_unit(g.indeterminacy) || !in_unit(g.falsity)) {
                throw validation_error("components of '" + universe_[i] +
                                       "' are outside [0, 1]");
            }
        }
    }

    const std::vector<std::string>& universe() const { return universe_; }
    std::size_t size() const { return universe_.size(); }

    const Grade& grade(std::size_t index) const { return grades_.at(index); }

    const Grade& grade(const std::string& label) const {
        auto idx = detail::index_of(universe_, label);
        if (!idx) {
            throw validation_error("element '" + label + "' is not in the universe");
        }
        return grades_[*idx];
    }

private:
    std::vector<std::string> universe_;
    std::vector<Grade> grades_;
};

/// Undecided residue 1 - m - n of an element.
inline double hesitation(const IntuitionisticFuzzySet& a, const std::string& label) {
    const auto& g = a.grade(label);
    return std::max(0.0, 1.0 - g.membership - g.non_membership);
}

enum class InformationKind { incomplete, complete, paraconsistent };

inline const char* to_string(InformationKind kind) {
    switch (kind) {
        case InformationKind::incomplete: return "incomplete";
        case InformationKind::complete: return "complete";
        case InformationKind::paraconsistent: return "paraconsistent";
    }
    return "?";
}

/// Classifies the component sum against 1: below it the information about the
/// element is incomplete, at it complete, above it paraconsistent.
inline InformationKind classify_information(const NeutrosophicSet& a, const std::string& label) {
    double sum = a.grade(label).sum();
    if (std::abs(sum - 1.0) <= value_tolerance) return InformationKind::complete;
    return sum < 1.0 ? InformationKind::incomplete : InformationKind::paraconsistent;
}

namespace detail {

// Strict picture threshold: component sums at or above 1 never qualify.
inline bool picture_at(const NeutrosophicSet::Grade& g) { return g.sum() < 1.0 - 1e-12; }

}  // namespace detail

/// True iff T + I + F < 1 at every element.
inline bool is_picture(const NeutrosophicSet& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!detail::picture_at(a.grade(i))) return false;
    }
    return true;
}

/// Refusal residue 1 - T - I - F; defined only where the sum is below 1.
inline double refusal_degree(const NeutrosophicSet& a, const std::string& label) {
    const auto& g = a.grade(label);
    if (!detail::picture_at(g)) {
        throw validation_error("refusal degree undefined for '" + label +
                               "': component sum is not below 1");
    }
    return 1.0 - g.sum();
}

/// Fuzzy -> intuitionistic: non-membership is the complement of membership.
inline IntuitionisticFuzzySet to_intuitionistic(const FuzzySet& f) {
    std::vector<IntuitionisticFuzzySet::Grade> grades;
    grades.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        grades.push_back({f.membership(i), 1.0 - f.membership(i)});
    }
    return IntuitionisticFuzzySet(f.universe(), std::move(grades));
}

/// Intuitionistic -> neutrosophic: indeterminacy carries the hesitation.
inline NeutrosophicSet to_neutrosophic(const IntuitionisticFuzzySet& a) {
    std::vector<NeutrosophicSet::Grade> grades;
    grades.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& g = a.grade(i);
        double h = std::max(0.0, 1.0 - g.membership - g.non_membership);
        grades.push_back({g.membership, h, g.non_membership});
    }
    return NeutrosophicSet(a.universe(), std::move(grades));
}

/// Crisp -> neutrosophic: members are fully true, non-members fully false.
inline NeutrosophicSet to_neutrosophic(const CrispSubset& c) {
    std::vector<NeutrosophicSet::Grade> grades;
    grades.reserve(c.universe().size());
    for (std::size_t i = 0; i < c.universe().size(); ++i) {
        if (c.mask()[i]) {
            grades.push_back({1.0, 0.0, 0.0});
        } else {
            grades.push_back({0.0, 0.0, 1.0});
        }
    }
    return NeutrosophicSet(c.universe(), std::move(grades));
}

}  // namespace usets
