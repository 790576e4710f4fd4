#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "usets/errors.hpp"

namespace usets {

/// Closed real interval [lower, upper], the carrier for grey-number scores.
class Interval {
public:
    Interval(double lower, double upper) : lower_(lower), upper_(upper) {
        if (!(lower <= upper)) {
            throw validation_error("interval endpoints out of order: [" + std::to_string(lower) +
                                   ", " + std::to_string(upper) + "]");
        }
    }

    double lower() const { return lower_; }
    double upper() const { return upper_; }

    bool operator==(const Interval& other) const {
        return lower_ == other.lower_ && upper_ == other.upper_;
    }
    bool operator!=(const Interval& other) const { return !(*this == other); }

private:
    double lower_;
    double upper_;
};

/// Midpoint of the interval, used as the representative of the unknown value.
inline double representative_value(const Interval& i) {
    return (i.lower() + i.upper()) / 2.0;
}

inline Interval add(const Interval& a, const Interval& b) {
    return Interval(a.lower() + b.lower(), a.upper() + b.upper());
}

/// Scalar product kI for k >= 0. Negative scalars are rejected.
inline Interval scale(double k, const Interval& i) {
    if (k < 0.0) {
        throw validation_error("negative scalar in interval scale: " + std::to_string(k));
    }
    return Interval(k * i.lower(), k * i.upper());
}

/// Multiset of intervals with positive multiplicities.
class WeightedIntervalBag {
public:
    using Entry = std::pair<Interval, int>;

    explicit WeightedIntervalBag(std::vector<Entry> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) {
            throw validation_error("weighted interval bag must not be empty");
        }
        for (const auto& [interval, count] : entries_) {
            (void)interval;
            if (count < 1) {
                throw validation_error("interval multiplicity must be >= 1, got " +
                                       std::to_string(count));
            }
        }
    }

    const std::vector<Entry>& entries() const { return entries_; }

    int total_count() const {
        int n = 0;
        for (const auto& entry : entries_) n += entry.second;
        return n;
    }

private:
    std::vector<Entry> entries_;
};

/// Mean value (1/n)(n1*I1 + ... + nk*Ik) of the bag, built from add and scale.
inline Interval mean(const WeightedIntervalBag& bag) {
    Interval sum(0.0, 0.0);
    for (const auto& [interval, count] : bag.entries()) {
        sum = add(sum, scale(static_cast<double>(count), interval));
    }
    return scale(1.0 / static_cast<double>(bag.total_count()), sum);
}

}  // namespace usets
