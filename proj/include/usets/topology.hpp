#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "usets/errors.hpp"
#include "usets/fuzzy_set.hpp"
#include "usets/soft_set.hpp"

namespace usets {

/// Outcome of a topology axiom check, with a witness for failures.
struct TopologyVerdict {
    enum class Failure {
        none,
        missing_empty_set,       // the empty / null member is absent
        missing_universal_set,   // the universal / absolute member is absent
        union_escapes,           // union of opens[first], opens[second] not in the family
        intersection_escapes,    // likewise for the intersection
    };

    Failure failure = Failure::none;
    std::size_t first = 0;
    std::size_t second = 0;

    bool ok() const { return failure == Failure::none; }
    explicit operator bool() const { return ok(); }
};

/// Outcome of a continuity check; the index names the open whose preimage
/// escapes the domain topology.
struct ContinuityVerdict {
    bool continuous = true;
    std::optional<std::size_t> violating_open;

    explicit operator bool() const { return continuous; }
};

/// Finite family of fuzzy sets over one universe, candidate open sets.
class FuzzyTopology {
public:
    FuzzyTopology(std::vector<std::string> universe, std::vector<FuzzySet> opens)
        : universe_(std::move(universe)), opens_(std::move(opens)) {
        detail::validate_universe(universe_, "universe");
        for (const auto& open : opens_) {
            if (open.universe() != universe_) {
                throw validation_error("open set is over a different universe");
            }
        }
        for (std::size_t i = 0; i < opens_.size(); ++i) {
            for (std::size_t j = i + 1; j < opens_.size(); ++j) {
                if (opens_[i] == opens_[j]) {
                    throw validation_error("duplicate open sets in the family");
                }
            }
        }
    }

    const std::vector<std::string>& universe() const { return universe_; }
    const std::vector<FuzzySet>& opens() const { return opens_; }

    bool contains(const FuzzySet& candidate) const {
        return std::find(opens_.begin(), opens_.end(), candidate) != opens_.end();
    }

private:
    std::vector<std::string> universe_;
    std::vector<FuzzySet> opens_;
};

/// Axiom check: the empty and universal sets are present and the family is
/// closed under pairwise union and intersection. Closure under binary union
/// gives closure under unions of arbitrary subfamilies, since the family is
/// finite and iterated pointwise max realizes any subfamily union.
inline TopologyVerdict is_fuzzy_topology(const FuzzyTopology& t) {
    if (!t.contains(FuzzySet::empty(t.universe()))) {
        return {TopologyVerdict::Failure::missing_empty_set, 0, 0};
    }
    if (!t.contains(FuzzySet::universal(t.universe()))) {
        return {TopologyVerdict::Failure::missing_universal_set, 0, 0};
    }
    const auto& opens = t.opens();
    for (std::size_t i = 0; i < opens.size(); ++i) {
        for (std::size_t j = i + 1; j < opens.size(); ++j) {
            if (!t.contains(set_union(opens[i], opens[j]))) {
                return {TopologyVerdict::Failure::union_escapes, i, j};
            }
            if (!t.contains(set_intersection(opens[i], opens[j]))) {
                return {TopologyVerdict::Failure::intersection_escapes, i, j};
            }
        }
    }
    return {};
}

/// B is a neighborhood of A when some open O satisfies A <= O < B, the
/// proper-subset part strict at every element.
inline bool is_neighborhood(const FuzzyTopology& t, const FuzzySet& a, const FuzzySet& b) {
    if (a.universe() != t.universe() || b.universe() != t.universe()) {
        throw validation_error("fuzzy sets are over a different universe than the topology");
    }
    for (const auto& open : t.opens()) {
        if (is_subset(a, open) && is_proper_subset(open, b)) return true;
    }
    return false;
}

/// Fuzzy-set sequence that is constant from some index on: a finite prefix
/// followed by the repeated tail value.
class EventuallyConstantSequence {
public:
    EventuallyConstantSequence(std::vector<FuzzySet> prefix, FuzzySet tail)
        : prefix_(std::move(prefix)), tail_(std::move(tail)) {
        for (const auto& term : prefix_) {
            if (term.universe() != tail_.universe()) {
                throw validation_error("sequence terms are over different universes");
            }
        }
    }

    const std::vector<FuzzySet>& prefix() const { return prefix_; }
    const FuzzySet& tail() const { return tail_; }

private:
    std::vector<FuzzySet> prefix_;
    FuzzySet tail_;
};

/// Convergence to a: beyond some index every term is properly inside every
/// neighborhood of a. Neighborhood candidates are drawn from the finite
/// family itself; choosing the index just past the prefix reduces the check
/// to the constant tail.
inline bool is_limit(const FuzzyTopology& t, const EventuallyConstantSequence& s,
                     const FuzzySet& a) {
    if (a.universe() != t.universe() || s.tail().universe() != t.universe()) {
        throw validation_error("fuzzy sets are over a different universe than the topology");
    }
    for (const auto& candidate : t.opens()) {
        if (!is_neighborhood(t, a, candidate)) continue;
        if (!is_proper_subset(s.tail(), candidate)) return false;
    }
    return true;
}

/// The element map is continuous when the preimage of every open of the
/// codomain topology is open in the domain topology.
inline ContinuityVerdict is_fuzzy_continuous(const FuzzyTopology& tx, const FuzzyTopology& sy,
                                             const std::map<std::string, std::string>& f) {
    detail::require_total_map(f, tx.universe());
    for (const auto& [from, to] : f) {
        (void)from;
        if (!detail::index_of(sy.universe(), to)) {
            throw validation_error("map image '" + to + "' is outside the codomain universe");
        }
    }
    for (std::size_t i = 0; i < sy.opens().size(); ++i) {
        FuzzySet preimage = extend_preimage(f, sy.opens()[i], tx.universe());
        if (!tx.contains(preimage)) return {false, i};
    }
    return {};
}

/// A subfamily covers the space when its pointwise max is 1 everywhere.
inline bool is_open_cover(const FuzzyTopology& t, const std::vector<std::size_t>& family) {
    for (std::size_t u = 0; u < t.universe().size(); ++u) {
        bool covered = false;
        for (std::size_t idx : family) {
            if (t.opens().at(idx).membership(u) == 1.0) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

/// Minimal-cardinality subfamily that still covers, or nullopt when the given
/// family is not a cover. Exhaustive up to 20 members, greedy beyond.
inline std::optional<std::vector<std::size_t>> find_finite_subcover(
    const FuzzyTopology& t, const std::vector<std::size_t>& family) {
    if (t.universe().size() > 64) {
        throw capacity_error("subcover search limited to universes of at most 64");
    }
    if (!is_open_cover(t, family)) return std::nullopt;

    // Bit u of a member mask is set where that open reaches membership 1;
    // covering is set cover over these masks.
    std::vector<unsigned long long> masks;
    masks.reserve(family.size());
    for (std::size_t idx : family) {
        unsigned long long mask = 0;
        for (std::size_t u = 0; u < t.universe().size(); ++u) {
            if (t.opens().at(idx).membership(u) == 1.0) mask |= 1ull << u;
        }
        masks.push_back(mask);
    }
    const unsigned long long all = (t.universe().size() >= 64)
                                       ? ~0ull
                                       : (1ull << t.universe().size()) - 1;

    if (family.size() <= 20) {
        std::optional<std::vector<std::size_t>> best;
        for (unsigned long long pick = 1; pick < (1ull << family.size()); ++pick) {
            unsigned long long covered = 0;
            std::size_t count = 0;
            for (std::size_t i = 0; i < family.size(); ++i) {
                if (pick & (1ull << i)) {
                    covered |= masks[i];
                    ++count;
                }
            }
            if (covered != all) continue;
            if (best && best->size() <= count) continue;
            std::vector<std::size_t> chosen;
            for (std::size_t i = 0; i < family.size(); ++i) {
                if (pick & (1ull << i)) chosen.push_back(family[i]);
            }
            best = std::move(chosen);
        }
        return best;
    }

    // Greedy set cover: repeatedly take the member adding the most elements.
    std::vector<std::size_t> chosen;
    unsigned long long covered = 0;
    while (covered != all) {
        std::size_t best_i = 0;
        int best_gain = -1;
        for (std::size_t i = 0; i < family.size(); ++i) {
            int gain = std::popcount(masks[i] & ~covered);
            if (gain > best_gain) {
                best_gain = gain;
                best_i = i;
            }
        }
        covered |= masks[best_i];
        chosen.push_back(family[best_i]);
    }
    return chosen;
}

enum class SeparationClass { none, t1, t2 };

inline const char* to_string(SeparationClass c) {
    switch (c) {
        case SeparationClass::none: return "none";
        case SeparationClass::t1: return "T1";
        case SeparationClass::t2: return "T2";
    }
    return "?";
}

namespace detail {

// Point membership in an open set reads as strictly positive membership.
inline bool point_in(const FuzzySet& open, std::size_t u) { return open.membership(u) > 0.0; }

}  // namespace detail

/// Every pair of distinct points has opens containing one and missing the other.
inline bool satisfies_t1(const FuzzyTopology& t) {
    if (t.universe().size() < 2) {
        throw validation_error("separation requires at least two elements");
    }
    for (std::size_t u1 = 0; u1 < t.universe().size(); ++u1) {
        for (std::size_t u2 = 0; u2 < t.universe().size(); ++u2) {
            if (u1 == u2) continue;
            bool found = false;
            for (const auto& open : t.opens()) {
                if (detail::point_in(open, u1) && !detail::point_in(open, u2)) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

/// Every pair of distinct points is separated by opens with empty intersection.
inline bool satisfies_t2(const FuzzyTopology& t) {
    if (t.universe().size() < 2) {
        throw validation_error("separation requires at least two elements");
    }
    for (std::size_t u1 = 0; u1 < t.universe().size(); ++u1) {
        for (std::size_t u2 = u1 + 1; u2 < t.universe().size(); ++u2) {
            bool found = false;
            for (const auto& o1 : t.opens()) {
                if (!detail::point_in(o1, u1)) continue;
                for (const auto& o2 : t.opens()) {
                    if (!detail::point_in(o2, u2)) continue;
                    bool disjoint = true;
                    for (std::size_t u = 0; u < t.universe().size(); ++u) {
                        if (std::min(o1.membership(u), o2.membership(u)) != 0.0) {
                            disjoint = false;
                            break;
                        }
                    }
                    if (disjoint) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) return false;
        }
    }
    return true;
}

/// Strongest separation class the family satisfies.
inline SeparationClass separation_class(const FuzzyTopology& t) {
    if (satisfies_t2(t)) return SeparationClass::t2;
    if (satisfies_t1(t)) return SeparationClass::t1;
    return SeparationClass::none;
}

/// Finite family of soft sets over one (universe, parameter) frame.
class SoftTopology {
public:
    SoftTopology(std::vector<std::string> universe, std::vector<std::string> parameters,
                 std::vector<SoftSet> opens)
        : universe_(std::move(universe)), parameters_(std::move(parameters)),
          opens_(std::move(opens)) {
        detail::validate_universe(universe_, "universe");
        detail::validate_universe(parameters_, "parameter universe");
        for (const auto& open : opens_) {
            if (open.universe() != universe_ || open.parameters() != parameters_) {
                throw validation_error("open soft set is over a different frame");
            }
        }
        canonical_.reserve(opens_.size());
        for (const auto& open : opens_) canonical_.push_back(canonicalize(open));
        for (std::size_t i = 0; i < canonical_.size(); ++i) {
            for (std::size_t j = i + 1; j < canonical_.size(); ++j) {
                if (canonical_[i] == canonical_[j]) {
                    throw validation_error("duplicate open soft sets after canonicalization");
                }
            }
        }
    }

    const std::vector<std::string>& universe() const { return universe_; }
    const std::vector<std::string>& parameters() const { return parameters_; }
    const std::vector<SoftSet>& opens() const { return opens_; }
    const std::vector<SoftSet>& canonical_opens() const { return canonical_; }

    bool contains_canonical(const SoftSet& candidate) const {
        SoftSet c = canonicalize(candidate);
        return std::find(canonical_.begin(), canonical_.end(), c) != canonical_.end();
    }

private:
    std::vector<std::string> universe_;
    std::vector<std::string> parameters_;
    std::vector<SoftSet> opens_;
    std::vector<SoftSet> canonical_;
};

/// Axiom check over canonicalized members: the null and absolute soft sets
/// are present and the family is closed under union and intersection.
inline TopologyVerdict is_soft_topology(const SoftTopology& t) {
    SoftSet null_set = SoftSet::null(t.universe(), t.parameters(), t.parameters());
    SoftSet absolute_set = SoftSet::absolute(t.universe(), t.parameters(), t.parameters());
    if (!t.contains_canonical(null_set)) {
        return {TopologyVerdict::Failure::missing_empty_set, 0, 0};
    }
    if (!t.contains_canonical(absolute_set)) {
        return {TopologyVerdict::Failure::missing_universal_set, 0, 0};
    }
    const auto& opens = t.canonical_opens();
    for (std::size_t i = 0; i < opens.size(); ++i) {
        for (std::size_t j = i + 1; j < opens.size(); ++j) {
            if (!t.contains_canonical(set_union(opens[i], opens[j]))) {
                return {TopologyVerdict::Failure::union_escapes, i, j};
            }
            if (!t.contains_canonical(set_intersection(opens[i], opens[j]))) {
                return {TopologyVerdict::Failure::intersection_escapes, i, j};
            }
        }
    }
    return {};
}

/// Total point and parameter maps between two (universe, parameter) frames.
class PointParameterMaps {
public:
    PointParameterMaps(std::vector<std::string> domain_universe,
                       std::vector<std::string> domain_parameters,
                       std::vector<std::string> codomain_universe,
                       std::vector<std::string> codomain_parameters,
                       std::map<std::string, std::string> point_map,
                       std::map<std::string, std::string> parameter_map)
        : domain_universe_(std::move(domain_universe)),
          domain_parameters_(std::move(domain_parameters)),
          codomain_universe_(std::move(codomain_universe)),
          codomain_parameters_(std::move(codomain_parameters)),
          point_map_(std::move(point_map)),
          parameter_map_(std::move(parameter_map)) {
        detail::validate_universe(domain_universe_, "domain universe");
        detail::validate_universe(domain_parameters_, "domain parameter universe");
        detail::validate_universe(codomain_universe_, "codomain universe");
        detail::validate_universe(codomain_parameters_, "codomain parameter universe");
        detail::require_total_map(point_map_, domain_universe_);
        detail::require_total_map(parameter_map_, domain_parameters_);
        for (const auto& [from, to] : point_map_) {
            (void)from;
            if (!detail::index_of(codomain_universe_, to)) {
                throw validation_error("point map image '" + to +
                                       "' is outside the codomain universe");
            }
        }
        for (const auto& [from, to] : parameter_map_) {
            (void)from;
            if (!detail::index_of(codomain_parameters_, to)) {
                throw validation_error("parameter map image '" + to +
                                       "' is outside the codomain parameters");
            }
        }
    }

    const std::vector<std::string>& domain_universe() const { return domain_universe_; }
    const std::vector<std::string>& domain_parameters() const { return domain_parameters_; }
    const std::vector<std::string>& codomain_universe() const { return codomain_universe_; }
    const std::vector<std::string>& codomain_parameters() const { return codomain_parameters_; }

    const std::string& point_image(const std::string& u) const { return point_map_.at(u); }
    const std::string& parameter_image(const std::string& a) const {
        return parameter_map_.at(a);
    }

private:
    std::vector<std::string> domain_universe_;
    std::vector<std::string> domain_parameters_;
    std::vector<std::string> codomain_universe_;
    std::vector<std::string> codomain_parameters_;
    std::map<std::string, std::string> point_map_;
    std::map<std::string, std::string> parameter_map_;
};

/// Image soft set over the codomain frame: the value at a codomain parameter
/// is the union of point images over its parameter fiber. Full support.
inline SoftSet soft_image(const PointParameterMaps& maps, const SoftSet& f) {
    if (f.universe() != maps.domain_universe() || f.parameters() != maps.domain_parameters()) {
        throw validation_error("soft set is over a different frame than the maps' domain");
    }
    SoftSet canonical = canonicalize(f);
    std::map<std::string, std::vector<std::string>> collected;
    for (const auto& b : maps.codomain_parameters()) collected[b] = {};
    for (const auto& a : maps.domain_parameters()) {
        const std::string& b = maps.parameter_image(a);
        for (const auto& member : canonical.value_set(a).members()) {
            collected[b].push_back(maps.point_image(member));
        }
    }
    SoftSet::Approximation approx;
    for (const auto& b : maps.codomain_parameters()) {
        approx.emplace_back(b, collected[b]);
    }
    return SoftSet(maps.codomain_universe(), maps.codomain_parameters(), approx);
}

/// Preimage soft set over the domain frame: the value at a domain parameter x
/// is the point preimage of the value at p(x). Full support.
inline SoftSet soft_preimage(const PointParameterMaps& maps, const SoftSet& g) {
    if (g.universe() != maps.codomain_universe() ||
        g.parameters() != maps.codomain_parameters()) {
        throw validation_error("soft set is over a different frame than the maps' codomain");
    }
    SoftSet canonical = canonicalize(g);
    SoftSet::Approximation approx;
    for (const auto& a : maps.domain_parameters()) {
        CrispSubset target = canonical.value_set(maps.parameter_image(a));
        std::vector<std::string> members;
        for (const auto& u : maps.domain_universe()) {
            if (target.contains(maps.point_image(u))) members.push_back(u);
        }
        approx.emplace_back(a, std::move(members));
    }
    return SoftSet(maps.domain_universe(), maps.domain_parameters(), approx);
}

/// The map pair is continuous when the preimage of every open of the codomain
/// topology is (canonically) open in the domain topology.
inline ContinuityVerdict is_pu_continuous(const SoftTopology& tu, const SoftTopology& sv,
                                          const PointParameterMaps& maps) {
    if (maps.domain_universe() != tu.universe() ||
        maps.domain_parameters() != tu.parameters() ||
        maps.codomain_universe() != sv.universe() ||
        maps.codomain_parameters() != sv.parameters()) {
        throw validation_error("maps are incompatible with the two topological frames");
    }
    for (std::size_t i = 0; i < sv.opens().size(); ++i) {
        SoftSet preimage = soft_preimage(maps, sv.opens()[i]);
        if (!tu.contains_canonical(preimage)) return {false, i};
    }
    return {};
}

}  // namespace usets
