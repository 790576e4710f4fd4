#include <doctest.h>

#include <cmath>

#include "usets/interval.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

using usets::Interval;
using usets::WeightedIntervalBag;

TEST_CASE("interval construction rejects reversed endpoints") {
    CHECK_THROWS_AS(Interval(2.0, 1.0), usets::validation_error);
    CHECK_NOTHROW(Interval(1.0, 1.0));
    CHECK_NOTHROW(Interval(-3.5, 2.0));
}

TEST_CASE("representative value is the midpoint") {
    CHECK(oracle::close(usets::representative_value(Interval(61.5, 76.65)), 69.075));
    CHECK(oracle::close(usets::representative_value(Interval(0.85, 1.49)), 1.17));

    testgen::Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        double a = testgen::uniform(rng, -1000.0, 1000.0);
        CHECK(usets::representative_value(Interval(a, a)) == a);
    }
    Interval i(1.0, 4.0);
    double v = usets::representative_value(i);
    CHECK(v >= i.lower());
    CHECK(v <= i.upper());
}

TEST_CASE("interval addition is componentwise") {
    Interval sum = usets::add(Interval(0.85, 1.0), Interval(0.0, 0.49));
    CHECK(oracle::close(sum.lower(), 0.85));
    CHECK(oracle::close(sum.upper(), 1.49));

    Interval i(2.5, 7.0);
    CHECK(usets::add(i, Interval(0.0, 0.0)) == i);

    testgen::Rng rng(12);
    for (int k = 0; k < 200; ++k) {
        Interval a = testgen::random_interval(rng);
        Interval b = testgen::random_interval(rng);
        auto expected = oracle::sum_endpoints(a, b);
        Interval got = usets::add(a, b);
        CHECK(got.lower() == expected.lower);
        CHECK(got.upper() == expected.upper);
    }
}

TEST_CASE("scalar product scales both endpoints, nonnegative scalars only") {
    Interval scaled = usets::scale(0.9, Interval(0.85, 1.0));
    CHECK(oracle::close(scaled.lower(), 0.765));
    CHECK(oracle::close(scaled.upper(), 0.9));

    Interval i(1.25, 2.5);
    CHECK(usets::scale(1.0, i) == i);
    CHECK(usets::scale(0.0, i) == Interval(0.0, 0.0));
    CHECK_THROWS_AS(usets::scale(-0.1, i), usets::validation_error);

    testgen::Rng rng(13);
    for (int k = 0; k < 200; ++k) {
        Interval a = testgen::random_interval(rng);
        double c = testgen::uniform(rng, 0.0, 10.0);
        auto expected = oracle::scale_endpoints(c, a);
        Interval got = usets::scale(c, a);
        CHECK(got.lower() == expected.lower);
        CHECK(got.upper() == expected.upper);
    }
}

TEST_CASE("weighted bag validation") {
    CHECK_THROWS_AS(WeightedIntervalBag({}), usets::validation_error);
    CHECK_THROWS_AS(WeightedIntervalBag({{Interval(0.0, 1.0), 0}}), usets::validation_error);
    WeightedIntervalBag bag({{Interval(0.0, 1.0), 3}, {Interval(2.0, 4.0), 2}});
    CHECK(bag.total_count() == 5);
}

TEST_CASE("mean of a weighted bag") {
    // Five-grade distribution 3/7/5/3/2 over the letter intervals.
    WeightedIntervalBag bag({{Interval(85.0, 100.0), 3},
                             {Interval(75.0, 84.0), 7},
                             {Interval(60.0, 74.0), 5},
                             {Interval(50.0, 59.0), 3},
                             {Interval(0.0, 49.0), 2}});
    Interval m = usets::mean(bag);
    CHECK(oracle::close(m.lower(), 61.5));
    CHECK(oracle::close(m.upper(), 76.65));
    CHECK(oracle::close(usets::representative_value(m), 69.075));

    SUBCASE("mean of copies of one interval is that interval") {
        testgen::Rng rng(14);
        for (int k = 0; k < 50; ++k) {
            Interval i = testgen::random_interval(rng);
            int n = testgen::uniform_int(rng, 1, 12);
            Interval m2 = usets::mean(WeightedIntervalBag({{i, n}}));
            CHECK(oracle::close(m2.lower(), i.lower()));
            CHECK(oracle::close(m2.upper(), i.upper()));
        }
    }

    SUBCASE("random bags match the direct endpoint formula") {
        testgen::Rng rng(15);
        for (int k = 0; k < 200; ++k) {
            WeightedIntervalBag b = testgen::random_bag(rng);
            auto expected = oracle::mean_endpoints(b);
            Interval got = usets::mean(b);
            CHECK(oracle::close(got.lower(), expected.lower));
            CHECK(oracle::close(got.upper(), expected.upper));
        }
    }
}

TEST_CASE("representative value is additive and homogeneous") {
    testgen::Rng rng(16);
    for (int k = 0; k < 300; ++k) {
        Interval a = testgen::random_interval(rng);
        Interval b = testgen::random_interval(rng);
        double c = testgen::uniform(rng, 0.0, 5.0);
        CHECK(oracle::close(usets::representative_value(usets::add(a, b)),
                            usets::representative_value(a) + usets::representative_value(b)));
        CHECK(oracle::close(usets::representative_value(usets::scale(c, a)),
                            c * usets::representative_value(a)));
    }
}

TEST_CASE("mean respects weighted-average identities and bounds") {
    testgen::Rng rng(17);
    for (int k = 0; k < 200; ++k) {
        WeightedIntervalBag bag = testgen::random_bag(rng);
        Interval m = usets::mean(bag);

        double weighted_v = 0.0;
        double min_lower = bag.entries().front().first.lower();
        double max_upper = bag.entries().front().first.upper();
        for (const auto& [interval, count] : bag.entries()) {
            weighted_v += count * usets::representative_value(interval);
            min_lower = std::min(min_lower, interval.lower());
            max_upper = std::max(max_upper, interval.upper());
        }
        weighted_v /= bag.total_count();

        CHECK(oracle::close(usets::representative_value(m), weighted_v));
        CHECK(m.lower() >= min_lower - oracle::tol);
        CHECK(m.upper() <= max_upper + oracle::tol);
    }
}
