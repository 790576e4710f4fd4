#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "usets/errors.hpp"
#include "usets/fuzzy_set.hpp"

namespace usets {

/// Soft set (f, A) over (U, E): each support parameter e in A <= E maps to a
/// crisp value set f(e) <= U. Equality is support-sensitive; use canonicalize
/// to compare sets with different supports over the same E.
class SoftSet {
public:
    using Approximation = std::vector<std::pair<std::string, std::vector<std::string>>>;

    SoftSet(std::vector<std::string> universe, std::vector<std::string> parameters,
            const Approximation& approximation)
        : universe_(std::move(universe)), parameters_(std::move(parameters)) {
        detail::validate_universe(universe_, "universe");
        detail::validate_universe(parameters_, "parameter universe");
        std::vector<std::vector<bool>> by_param(parameters_.size());
        std::vector<bool> present(parameters_.size(), false);
        for (const auto& [param, members] : approximation) {
            auto idx = detail::index_of(parameters_, param);
            if (!idx) {
                throw validation_error("support parameter '" + param +
                                       "' is not in the parameter universe");
            }
            if (present[*idx]) {
                throw validation_error("duplicate support parameter '" + param + "'");
            }
            present[*idx] = true;
            std::vector<bool> mask(universe_.size(), false);
            for (const auto& member : members) {
                auto uidx = detail::index_of(universe_, member);
                if (!uidx) {
                    throw validation_error("value-set member '" + member +
                                           "' is not in the universe");
                }
                mask[*uidx] = true;
            }
            by_param[*idx] = std::move(mask);
        }
        // Support is kept in parameter-universe order for deterministic output.
        for (std::size_t i = 0; i < parameters_.size(); ++i) {
            if (present[i]) {
                support_.push_back(i);
                values_.push_back(std::move(by_param[i]));
            }
        }
    }

    static SoftSet absolute(const std::vector<std::string>& universe,
                            const std::vector<std::string>& parameters,
                            const std::vector<std::string>& support) {
        return constant(universe, parameters, support, true);
    }

    static SoftSet null(const std::vector<std::string>& universe,
                        const std::vector<std::string>& parameters,
                        const std::vector<std::string>& support) {
        return constant(universe, parameters, support, false);
    }

    const std::vector<std::string>& universe() const { return universe_; }
    const std::vector<std::string>& parameters() const { return parameters_; }

    std::size_t support_size() const { return support_.size(); }

    /// Support labels in parameter-universe order.
    std::vector<std::string> support() const {
        std::vector<std::string> out;
        out.reserve(support_.size());
        for (std::size_t idx : support_) out.push_back(parameters_[idx]);
        return out;
    }

    bool in_support(const std::string& param) const {
        auto idx = detail::index_of(parameters_, param);
        if (!idx) {
            throw validation_error("parameter '" + param + "' is not in the parameter universe");
        }
        return support_position(*idx).has_value();
    }

    CrispSubset value_set(const std::string& param) const {
        auto idx = detail::index_of(parameters_, param);
        if (!idx) {
            throw validation_error("parameter '" + param + "' is not in the parameter universe");
        }
        auto pos = support_position(*idx);
        if (!pos) {
            throw validation_error("parameter '" + param + "' is not in the support");
        }
        return CrispSubset(universe_, values_[*pos]);
    }

    bool member(const std::string& param, const std::string& element) const {
        auto uidx = detail::index_of(universe_, element);
        if (!uidx) {
            throw validation_error("element '" + element + "' is not in the universe");
        }
        auto idx = detail::index_of(parameters_, param);
        if (!idx) {
            throw validation_error("parameter '" + param + "' is not in the parameter universe");
        }
        auto pos = support_position(*idx);
        return pos && values_[*pos][*uidx];
    }

    bool operator==(const SoftSet& other) const {
        return universe_ == other.universe_ && parameters_ == other.parameters_ &&
               support_ == other.support_ && values_ == other.values_;
    }
    bool operator!=(const SoftSet& other) const { return !(*this == other); }

    /// Strict-weak order for deterministic containers of soft sets.
    bool operator<(const SoftSet& other) const {
        if (universe_ != other.universe_) return universe_ < other.universe_;
        if (parameters_ != other.parameters_) return parameters_ < other.parameters_;
        if (support_ != other.support_) return support_ < other.support_;
        return values_ < other.values_;
    }

private:
    friend SoftSet set_union(const SoftSet&, const SoftSet&);
    friend SoftSet set_intersection(const SoftSet&, const SoftSet&);
    friend SoftSet complement(const SoftSet&);
    friend SoftSet canonicalize(const SoftSet&);
    friend bool is_soft_subset(const SoftSet&, const SoftSet&);
    friend std::vector<SoftSet> enumerate_soft_subsets(const SoftSet&);

    static SoftSet constant(const std::vector<std::string>& universe,
                            const std::vector<std::string>& parameters,
                            const std::vector<std::string>& support, bool full) {
        if (support.empty()) {
            throw validation_error("support must not be empty");
        }
        Approximation approx;
        approx.reserve(support.size());
        for (const auto& param : support) {
            approx.emplace_back(param, full ? universe : std::vector<std::string>{});
        }
        return SoftSet(universe, parameters, approx);
    }

    std::optional<std::size_t> support_position(std::size_t param_index) const {
        auto it = std::lower_bound(support_.begin(), support_.end(), param_index);
        if (it == support_.end() || *it != param_index) return std::nullopt;
        return static_cast<std::size_t>(it - support_.begin());
    }

    SoftSet(std::vector<std::string> universe, std::vector<std::string> parameters,
            std::vector<std::size_t> support, std::vector<std::vector<bool>> values)
        : universe_(std::move(universe)),
          parameters_(std::move(parameters)),
          support_(std::move(support)),
          values_(std::move(values)) {}

    std::vector<std::string> universe_;
    std::vector<std::string> parameters_;
    std::vector<std::size_t> support_;        // indices into parameters_, ascending
    std::vector<std::vector<bool>> values_;   // value-set masks aligned with support_
};

namespace detail {

inline void require_same_frame(const SoftSet& f, const SoftSet& g) {
    if (f.universe() != g.universe() || f.parameters() != g.parameters()) {
        throw validation_error("soft sets are over different (universe, parameter) frames");
    }
}

}  // namespace detail

/// Support containment plus pointwise value-set containment on the support.
inline bool is_soft_subset(const SoftSet& f, const SoftSet& g) {
    detail::require_same_frame(f, g);
    for (std::size_t pos = 0; pos < f.support_.size(); ++pos) {
        auto gpos = g.support_position(f.support_[pos]);
        if (!gpos) return false;
        for (std::size_t u = 0; u < f.universe_.size(); ++u) {
            if (f.values_[pos][u] && !g.values_[*gpos][u]) return false;
        }
    }
    return true;
}

/// Soft subset whose support is strictly smaller.
inline bool is_proper_soft_subset(const SoftSet& f, const SoftSet& g) {
    return is_soft_subset(f, g) && f.support_size() < g.support_size();
}

/// Union over the joint support: value sets are copied where only one side is
/// defined and merged pointwise where both are.
inline SoftSet set_union(const SoftSet& f, const SoftSet& g) {
    detail::require_same_frame(f, g);
    std::vector<std::size_t> support;
    std::vector<std::vector<bool>> values;
    for (std::size_t p = 0; p < f.parameters_.size(); ++p) {
        auto fpos = f.support_position(p);
        auto gpos = g.support_position(p);
        if (!fpos && !gpos) continue;
        support.push_back(p);
        if (fpos && gpos) {
            std::vector<bool> mask(f.universe_.size());
            for (std::size_t u = 0; u < mask.size(); ++u) {
                mask[u] = f.values_[*fpos][u] || g.values_[*gpos][u];
            }
            values.push_back(std::move(mask));
        } else if (fpos) {
            values.push_back(f.values_[*fpos]);
        } else {
            values.push_back(g.values_[*gpos]);
        }
    }
    return SoftSet(f.universe_, f.parameters_, std::move(support), std::move(values));
}

/// Pointwise intersection on the shared support.
inline SoftSet set_intersection(const SoftSet& f, const SoftSet& g) {
    detail::require_same_frame(f, g);
    std::vector<std::size_t> support;
    std::vector<std::vector<bool>> values;
    for (std::size_t p = 0; p < f.parameters_.size(); ++p) {
        auto fpos = f.support_position(p);
        auto gpos = g.support_position(p);
        if (!fpos || !gpos) continue;
        support.push_back(p);
        std::vector<bool> mask(f.universe_.size());
        for (std::size_t u = 0; u < mask.size(); ++u) {
            mask[u] = f.values_[*fpos][u] && g.values_[*gpos][u];
        }
        values.push_back(std::move(mask));
    }
    return SoftSet(f.universe_, f.parameters_, std::move(support), std::move(values));
}

/// Complements every value set against the universe; the support is kept.
inline SoftSet complement(const SoftSet& f) {
    std::vector<std::vector<bool>> values = f.values_;
    for (auto& mask : values) {
        for (std::size_t u = 0; u < mask.size(); ++u) mask[u] = !mask[u];
    }
    return SoftSet(f.universe_, f.parameters_, f.support_, std::move(values));
}

/// Extends the support to the whole parameter universe with empty value sets.
inline SoftSet canonicalize(const SoftSet& f) {
    std::vector<std::size_t> support(f.parameters_.size());
    std::vector<std::vector<bool>> values(f.parameters_.size());
    for (std::size_t p = 0; p < f.parameters_.size(); ++p) {
        support[p] = p;
        auto pos = f.support_position(p);
        values[p] = pos ? f.values_[*pos] : std::vector<bool>(f.universe_.size(), false);
    }
    return SoftSet(f.universe_, f.parameters_, std::move(support), std::move(values));
}

/// Binary tabular form: rows follow the universe, columns the support.
struct SoftMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> column_labels;
    std::vector<std::vector<int>> bits;

    bool operator==(const SoftMatrix&) const = default;
};

inline SoftMatrix to_matrix(const SoftSet& f) {
    SoftMatrix m;
    m.row_labels = f.universe();
    m.column_labels = f.support();
    m.bits.assign(m.row_labels.size(), std::vector<int>(m.column_labels.size(), 0));
    for (std::size_t c = 0; c < m.column_labels.size(); ++c) {
        CrispSubset value = f.value_set(m.column_labels[c]);
        for (std::size_t r = 0; r < m.row_labels.size(); ++r) {
            m.bits[r][c] = value.mask()[r] ? 1 : 0;
        }
    }
    return m;
}

/// Rebuilds a soft set from its tabular form over an explicit parameter
/// universe; the matrix columns become the support.
inline SoftSet from_matrix(const SoftMatrix& m, const std::vector<std::string>& parameters) {
    if (m.bits.size() != m.row_labels.size()) {
        throw validation_error("matrix row count does not match the row labels");
    }
    SoftSet::Approximation approx;
    for (std::size_t c = 0; c < m.column_labels.size(); ++c) {
        std::vector<std::string> members;
        for (std::size_t r = 0; r < m.row_labels.size(); ++r) {
            if (m.bits[r].size() != m.column_labels.size()) {
                throw validation_error("matrix row width does not match the column labels");
            }
            int bit = m.bits[r][c];
            if (bit != 0 && bit != 1) {
                throw validation_error("matrix cells must be 0 or 1, got " + std::to_string(bit));
            }
            if (bit == 1) members.push_back(m.row_labels[r]);
        }
        approx.emplace_back(m.column_labels[c], std::move(members));
    }
    return SoftSet(m.row_labels, parameters, approx);
}

/// Shorthand for matrices whose columns already cover the parameter universe.
inline SoftSet from_matrix(const SoftMatrix& m) { return from_matrix(m, m.column_labels); }

namespace detail {

inline constexpr std::size_t soft_subset_capacity = 1u << 20;

}  // namespace detail

/// Counts the soft subsets the enumeration convention yields: every (g, B)
/// with non-empty B <= A and non-empty g(e) <= f(e), plus the null set on A.
inline std::size_t count_soft_subsets(const SoftSet& f) {
    if (f.support_size() > 20) {
        throw capacity_error("soft subset enumeration limited to supports of at most 20");
    }
    std::vector<std::size_t> choices;  // per support parameter: 2^|f(e)| - 1
    for (const auto& param : f.support()) {
        choices.push_back((std::size_t{1} << f.value_set(param).size()) - 1);
    }
    std::size_t total = 1;  // the null soft set over A
    std::size_t combos = std::size_t{1} << choices.size();
    for (std::size_t pick = 1; pick < combos; ++pick) {
        std::size_t product = 1;
        for (std::size_t i = 0; i < choices.size(); ++i) {
            if (pick & (std::size_t{1} << i)) {
                if (choices[i] == 0) {
                    product = 0;
                    break;
                }
                if (product > detail::soft_subset_capacity / choices[i]) {
                    throw capacity_error("soft subset enumeration exceeds capacity");
                }
                product *= choices[i];
            }
        }
        total += product;
        if (total > detail::soft_subset_capacity) {
            throw capacity_error("soft subset enumeration exceeds capacity");
        }
    }
    return total;
}

/// Enumerates the soft subsets of f: all (g, B) with non-empty support B <= A
/// and non-empty value sets g(e) <= f(e), plus the null soft set over A (last).
/// Supports advance in binary-counting order over A; within a support, value
/// sets advance in binary-counting order over the universe, last parameter
/// fastest.
inline std::vector<SoftSet> enumerate_soft_subsets(const SoftSet& f) {
    if (f.universe().size() > 12) {
        throw capacity_error("soft subset enumeration limited to universes of at most 12");
    }
    count_soft_subsets(f);  // capacity guard

    // Per support parameter: the universe indices inside its value set.
    std::vector<std::vector<std::size_t>> member_indices;
    for (std::size_t pos = 0; pos < f.support_.size(); ++pos) {
        std::vector<std::size_t> indices;
        for (std::size_t u = 0; u < f.universe_.size(); ++u) {
            if (f.values_[pos][u]) indices.push_back(u);
        }
        member_indices.push_back(std::move(indices));
    }

    std::vector<SoftSet> out;
    std::size_t support_combos = std::size_t{1} << f.support_.size();
    for (std::size_t pick = 1; pick < support_combos; ++pick) {
        std::vector<std::size_t> chosen;  // positions within f's support
        bool feasible = true;
        for (std::size_t i = 0; i < f.support_.size(); ++i) {
            if (pick & (std::size_t{1} << i)) {
                if (member_indices[i].empty()) {
                    feasible = false;
                    break;
                }
                chosen.push_back(i);
            }
        }
        if (!feasible) continue;

        // Odometer over non-empty subsets of each chosen value set.
        std::vector<std::size_t> masks(chosen.size(), 1);
        while (true) {
            std::vector<std::size_t> support;
            std::vector<std::vector<bool>> values;
            for (std::size_t c = 0; c < chosen.size(); ++c) {
                support.push_back(f.support_[chosen[c]]);
                std::vector<bool> mask(f.universe_.size(), false);
                const auto& indices = member_indices[chosen[c]];
                for (std::size_t b = 0; b < indices.size(); ++b) {
                    if (masks[c] & (std::size_t{1} << b)) mask[indices[b]] = true;
                }
                values.push_back(std::move(mask));
            }
            out.push_back(SoftSet(f.universe_, f.parameters_, std::move(support),
                                  std::move(values)));

            // Advance, last parameter fastest.
            bool advanced = false;
            for (std::size_t c = chosen.size(); c-- > 0;) {
                std::size_t limit = std::size_t{1} << member_indices[chosen[c]].size();
                if (masks[c] + 1 < limit) {
                    ++masks[c];
                    advanced = true;
                    break;
                }
                masks[c] = 1;
            }
            if (!advanced) break;
        }
    }
    out.push_back(SoftSet::null(f.universe_, f.parameters_, f.support()));
    return out;
}

/// Samples the cut parametrization of a fuzzy set at the given grid: each
/// alpha becomes a parameter whose value set is the alpha-cut.
inline SoftSet from_fuzzy(const FuzzySet& f, std::vector<double> alphas) {
    if (alphas.empty()) {
        throw validation_error("alpha grid must not be empty");
    }
    for (double alpha : alphas) {
        if (!(alpha >= 0.0 && alpha <= 1.0)) {
            throw validation_error("alpha is outside [0, 1]: " + std::to_string(alpha));
        }
    }
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

    std::vector<std::string> labels;
    SoftSet::Approximation approx;
    for (double alpha : alphas) {
        std::ostringstream os;
        os << alpha;
        labels.push_back(os.str());
        approx.emplace_back(labels.back(), alpha_cut(f, alpha).members());
    }
    return SoftSet(f.universe(), labels, approx);
}

/// Default cut grid: the distinct membership values of f plus 0.
inline SoftSet from_fuzzy(const FuzzySet& f) {
    std::vector<double> alphas = f.memberships();
    alphas.push_back(0.0);
    return from_fuzzy(f, std::move(alphas));
}

}  // namespace usets
