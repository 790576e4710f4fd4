#pragma once

// Independent oracles for the property suites. These recompute expectations
// by a different route than the implementation under test and must stay free
// of the library's operation code paths they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "usets/fuzzy_set.hpp"
#include "usets/interval.hpp"
#include "usets/soft_set.hpp"

namespace oracle {

inline constexpr double tol = 1e-9;

inline bool close(double a, double b) { return std::abs(a - b) <= tol; }

// --- intervals: direct endpoint formulas ----------------------------------

struct Endpoints {
    double lower;
    double upper;
};

inline Endpoints sum_endpoints(const usets::Interval& a, const usets::Interval& b) {
    return {a.lower() + b.lower(), a.upper() + b.upper()};
}

inline Endpoints scale_endpoints(double k, const usets::Interval& i) {
    return {k * i.lower(), k * i.upper()};
}

/// Mean endpoints straight from sum(n_i * x_i) / n, bypassing add/scale.
inline Endpoints mean_endpoints(const usets::WeightedIntervalBag& bag) {
    double lower = 0.0;
    double upper = 0.0;
    double n = 0.0;
    for (const auto& [interval, count] : bag.entries()) {
        lower += count * interval.lower();
        upper += count * interval.upper();
        n += count;
    }
    return {lower / n, upper / n};
}

// --- fuzzy sets: elementwise recomputation --------------------------------

inline std::vector<double> pointwise_max(const usets::FuzzySet& a, const usets::FuzzySet& b) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a.membership(i) >= b.membership(i) ? a.membership(i) : b.membership(i);
    }
    return out;
}

inline std::vector<double> pointwise_min(const usets::FuzzySet& a, const usets::FuzzySet& b) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a.membership(i) <= b.membership(i) ? a.membership(i) : b.membership(i);
    }
    return out;
}

// --- soft sets: brute-force subset enumeration -----------------------------

/// Every (g, B) the enumeration convention admits, generated by scanning all
/// supports and all value-set masks and filtering with direct bit checks.
inline std::size_t count_subsets_brute(const usets::SoftSet& f) {
    std::vector<std::string> support = f.support();
    std::vector<std::vector<bool>> value_masks;
    for (const auto& param : support) value_masks.push_back(f.value_set(param).mask());
    const std::size_t u = f.universe().size();

    std::size_t count = 1;  // the null soft set over the full support
    for (std::size_t pick = 1; pick < (std::size_t{1} << support.size()); ++pick) {
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < support.size(); ++i) {
            if (pick & (std::size_t{1} << i)) chosen.push_back(i);
        }
        // Odometer over all value masks, counting only admissible ones.
        std::vector<std::size_t> masks(chosen.size(), 0);
        while (true) {
            bool admissible = true;
            for (std::size_t c = 0; c < chosen.size() && admissible; ++c) {
                if (masks[c] == 0) admissible = false;  // empty value set
                for (std::size_t bit = 0; bit < u; ++bit) {
                    if ((masks[c] & (std::size_t{1} << bit)) && !value_masks[chosen[c]][bit]) {
                        admissible = false;
                        break;
                    }
                }
            }
            if (admissible) ++count;
            std::size_t c = 0;
            while (c < chosen.size()) {
                if (++masks[c] < (std::size_t{1} << u)) break;
                masks[c] = 0;
                ++c;
            }
            if (c == chosen.size()) break;
        }
    }
    return count;
}

/// Closed-form count: 1 + sum over non-empty supports of prod (2^|f(e)| - 1).
inline std::size_t count_subsets_formula(const usets::SoftSet& f) {
    std::vector<std::size_t> sizes;
    for (const auto& param : f.support()) sizes.push_back(f.value_set(param).size());
    std::size_t total = 1;
    for (std::size_t pick = 1; pick < (std::size_t{1} << sizes.size()); ++pick) {
        std::size_t product = 1;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            if (pick & (std::size_t{1} << i)) product *= (std::size_t{1} << sizes[i]) - 1;
        }
        total += product;
    }
    return total;
}

// --- fuzzy topology: fixpoint closure verdict ------------------------------

/// Independent axiom check: grow the family to its closure under pairwise
/// max/min and compare sizes, instead of scanning pairs for a first witness.
inline bool closure_verdict(const std::vector<std::string>& universe,
                            const std::vector<usets::FuzzySet>& opens) {
    auto contains = [](const std::vector<usets::FuzzySet>& family, const usets::FuzzySet& s) {
        return std::find(family.begin(), family.end(), s) != family.end();
    };
    if (!contains(opens, usets::FuzzySet::empty(universe))) return false;
    if (!contains(opens, usets::FuzzySet::universal(universe))) return false;

    std::vector<usets::FuzzySet> closure = opens;
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t size = closure.size();
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = i + 1; j < size; ++j) {
                std::vector<double> mx(universe.size()), mn(universe.size());
                for (std::size_t k = 0; k < universe.size(); ++k) {
                    double a = closure[i].membership(k);
                    double b = closure[j].membership(k);
                    mx[k] = a >= b ? a : b;
                    mn[k] = a <= b ? a : b;
                }
                usets::FuzzySet u(universe, mx);
                usets::FuzzySet v(universe, mn);
                if (!contains(closure, u)) {
                    closure.push_back(u);
                    grew = true;
                }
                if (!contains(closure, v)) {
                    closure.push_back(v);
                    grew = true;
                }
            }
        }
    }
    return closure.size() == opens.size();
}

}  // namespace oracle
