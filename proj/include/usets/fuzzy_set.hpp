#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "usets/errors.hpp"

namespace usets {

namespace detail {

inline void validate_universe(const std::vector<std::string>& labels, const char* what) {
    if (labels.empty()) {
        throw validation_error(std::string(what) + " must not be empty");
    }
    std::unordered_set<std::string> seen;
    for (const auto& label : labels) {
        if (!seen.insert(label).second) {
            throw validation_error(std::string(what) + " has duplicate label '" + label + "'");
        }
    }
}

inline std::optional<std::size_t> index_of(const std::vector<std::string>& labels,
                                           const std::string& label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace detail

/// Crisp subset of an ordered finite universe.
class CrispSubset {
public:
    CrispSubset(std::vector<std::string> universe, const std::vector<std::string>& members)
        : universe_(std::move(universe)), mask_(universe_.size(), false) {
        detail::validate_universe(universe_, "universe");
        for (const auto& label : members) {
            auto idx = detail::index_of(universe_, label);
            if (!idx) {
                throw validation_error("member '" + label + "' is not in the universe");
            }
            mask_[*idx] = true;
        }
    }

    CrispSubset(std::vector<std::string> universe, std::vector<bool> mask)
        : universe_(std::move(universe)), mask_(std::move(mask)) {
        detail::validate_universe(universe_, "universe");
        if (mask_.size() != universe_.size()) {
            throw validation_error("membership mask size does not match the universe");
        }
    }

    const std::vector<std::string>& universe() const { return universe_; }
    const std::vector<bool>& mask() const { return mask_; }

    bool contains(const std::string& label) const {
        auto idx = detail::index_of(universe_, label);
        if (!idx) {
            throw validation_error("element '" + label + "' is not in the universe");
        }
        return mask_[*idx];
    }

    /// Member labels in universe order.
    std::vector<std::string> members() const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < universe_.size(); ++i) {
            if (mask_[i]) out.push_back(universe_[i]);
        }
        return out;
    }

    std::size_t size() const {
        return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
    }

    bool operator==(const CrispSubset& other) const {
        return universe_ == other.universe_ && mask_ == other.mask_;
    }
    bool operator!=(const CrispSubset& other) const { return !(*this == other); }

private:
    std::vector<std::string> universe_;
    std::vector<bool> mask_;
};

/// Fuzzy set over an ordered finite universe: one membership degree per element.
class FuzzySet {
public:
    FuzzySet(std::vector<std::string> universe, std::vector<double> memberships)
        : universe_(std::move(universe)), memberships_(std::move(memberships)) {
        detail::validate_universe(universe_, "universe");
        if (memberships_.size() != universe_.size()) {
            throw validation_error("membership list size does not match the universe");
        }
        for (std::size_t i = 0; i < memberships_.size(); ++i) {
            if (!(memberships_[i] >= 0.0 && memberships_[i] <= 1.0)) {
                throw validation_error("membership of '" + universe_[i] +
                                       "' is outside [0, 1]: " + std::to_string(memberships_[i]));
            }
        }
    }

    static FuzzySet from_degrees(std::vector<std::string> universe,
                                 const std::map<std::string, double>& memberships) {
        std::vector<double> values = collect(universe, memberships);
        return FuzzySet(std::move(universe), std::move(values));
    }

    static FuzzySet universal(std::vector<std::string> universe) {
        std::vector<double> ones(universe.size(), 1.0);
        return FuzzySet(std::move(universe), std::move(ones));
    }

    static FuzzySet empty(std::vector<std::string> universe) {
        std::vector<double> zeros(universe.size(), 0.0);
        return FuzzySet(std::move(universe), std::move(zeros));
    }

    const std::vector<std::string>& universe() const { return universe_; }
    const std::vector<double>& memberships() const { return memberships_; }
    std::size_t size() const { return universe_.size(); }

    double membership(std::size_t index) const { return memberships_.at(index); }

    double membership(const std::string& label) const {
        auto idx = detail::index_of(universe_, label);
        if (!idx) {
            throw validation_error("element '" + label + "' is not in the universe");
        }
        return memberships_[*idx];
    }

    bool operator==(const FuzzySet& other) const {
        return universe_ == other.universe_ && memberships_ == other.memberships_;
    }
    bool operator!=(const FuzzySet& other) const { return !(*this == other); }

private:
    static std::vector<double> collect(const std::vector<std::string>& universe,
                                       const std::map<std::string, double>& memberships) {
        if (memberships.size() != universe.size()) {
            throw validation_error("membership map does not cover the universe exactly");
        }
        std::vector<double> values;
        values.reserve(universe.size());
        for (const auto& label : universe) {
            auto it = memberships.find(label);
            if (it == memberships.end()) {
                throw validation_error("membership missing for element '" + label + "'");
            }
            values.push_back(it->second);
        }
        return values;
    }

    std::vector<std::string> universe_;
    std::vector<double> memberships_;
};

namespace detail {

inline void require_same_universe(const FuzzySet& k, const FuzzySet& l) {
    if (k.universe() != l.universe()) {
        throw validation_error("fuzzy sets are over different universes");
    }
}

}  // namespace detail

/// m_K(x) <= m_L(x) at every element.
inline bool is_subset(const FuzzySet& k, const FuzzySet& l) {
    detail::require_same_universe(k, l);
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k.membership(i) > l.membership(i)) return false;
    }
    return true;
}

/// m_K(x) < m_L(x) at every element (strict everywhere).
inline bool is_proper_subset(const FuzzySet& k, const FuzzySet& l) {
    detail::require_same_universe(k, l);
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (!(k.membership(i) < l.membership(i))) return false;
    }
    return true;
}

inline FuzzySet set_union(const FuzzySet& k, const FuzzySet& l) {
    detail::require_same_universe(k, l);
    std::vector<double> values(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        values[i] = std::max(k.membership(i), l.membership(i));
    }
    return FuzzySet(k.universe(), std::move(values));
}

inline FuzzySet set_intersection(const FuzzySet& k, const FuzzySet& l) {
    detail::require_same_universe(k, l);
    std::vector<double> values(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        values[i] = std::min(k.membership(i), l.membership(i));
    }
    return FuzzySet(k.universe(), std::move(values));
}

inline FuzzySet complement(const FuzzySet& k) {
    std::vector<double> values(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        values[i] = 1.0 - k.membership(i);
    }
    return FuzzySet(k.universe(), std::move(values));
}

/// Crisp cut {x : m(x) >= alpha}.
inline CrispSubset alpha_cut(const FuzzySet& f, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw validation_error("alpha is outside [0, 1]: " + std::to_string(alpha));
    }
    std::vector<bool> mask(f.size(), false);
    for (std::size_t i = 0; i < f.size(); ++i) {
        mask[i] = f.membership(i) >= alpha;
    }
    return CrispSubset(f.universe(), std::move(mask));
}

namespace detail {

inline void require_total_map(const std::map<std::string, std::string>& map,
                              const std::vector<std::string>& domain) {
    for (const auto& label : domain) {
        if (map.find(label) == map.end()) {
            throw validation_error("map is not total: no image for '" + label + "'");
        }
    }
}

}  // namespace detail

/// Image of a fuzzy set under an element map: m_B(y) = max over the preimage
/// of y, and 0 where the preimage is empty.
inline FuzzySet extend_image(const std::map<std::string, std::string>& map, const FuzzySet& a,
                             const std::vector<std::string>& codomain) {
    detail::validate_universe(codomain, "codomain universe");
    detail::require_total_map(map, a.universe());
    std::vector<double> values(codomain.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string& image = map.at(a.universe()[i]);
        auto idx = detail::index_of(codomain, image);
        if (!idx) {
            throw validation_error("map image '" + image + "' is outside the codomain");
        }
        values[*idx] = std::max(values[*idx], a.membership(i));
    }
    return FuzzySet(codomain, std::move(values));
}

/// Preimage of a fuzzy set under an element map: m_A(x) = m_B(f(x)).
inline FuzzySet extend_preimage(const std::map<std::string, std::string>& map, const FuzzySet& b,
                                const std::vector<std::string>& domain) {
    detail::validate_universe(domain, "domain universe");
    detail::require_total_map(map, domain);
    std::vector<double> values(domain.size(), 0.0);
    for (std::size_t i = 0; i < domain.size(); ++i) {
        values[i] = b.membership(map.at(domain[i]));
    }
    return FuzzySet(domain, std::move(values));
}

}  // namespace usets
