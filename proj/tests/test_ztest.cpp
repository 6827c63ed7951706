#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "fpr/normal.hpp"
#include "fpr/ztest.hpp"
#include "oracles.hpp"

using namespace fpr;
using ztest::GaussianZTest;
using ztest::SampleSummary;
using ztest::TestOutcome;

TEST_CASE("rejection_threshold: anchor values") {
    CHECK(std::abs(ztest::rejection_threshold({0.05, 100}) -
                   oracles::quantile_by_bisection(0.95) / 10.0) < 1e-12);
    CHECK(std::abs(ztest::rejection_threshold({0.05, 100}) - 0.16448536269514726) < 1e-6);
    CHECK(std::abs(ztest::rejection_threshold({0.05, 1}) - 1.6448536269514726) < 1e-6);
    CHECK(ztest::rejection_threshold({0.5, 1}) == 0.0);
}

TEST_CASE("rejection_threshold: decreasing in n and in alpha") {
    for (double alpha : {0.005, 0.05, 0.2}) {
        double prev = ztest::rejection_threshold({alpha, 1});
        for (int n : {2, 5, 20, 100, 5000}) {
            const double cur = ztest::rejection_threshold({alpha, n});
            CHECK(cur < prev);
            prev = cur;
        }
    }
    for (int n : {1, 64}) {
        double prev = ztest::rejection_threshold({0.001, n});
        for (double alpha : {0.01, 0.05, 0.2, 0.45}) {
            const double cur = ztest::rejection_threshold({alpha, n});
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("rejection_threshold: invariant violations") {
    CHECK_THROWS_AS(ztest::rejection_threshold({0.0, 10}), std::invalid_argument);
    CHECK_THROWS_AS(ztest::rejection_threshold({1.0, 10}), std::invalid_argument);
    CHECK_THROWS_AS(ztest::rejection_threshold({0.05, 0}), std::invalid_argument);
}

TEST_CASE("decide: examples and the tie convention") {
    const GaussianZTest test{0.05, 100};
    CHECK(ztest::decide(test, {100, 0.2}) == TestOutcome::Positive);
    CHECK(ztest::decide(test, {100, 0.0}) == TestOutcome::Negative);
    const double threshold = ztest::rejection_threshold(test);
    CHECK(ztest::decide(test, {100, threshold}) == TestOutcome::Positive);
    CHECK_THROWS_AS(ztest::decide(test, {99, 0.2}), std::invalid_argument);
}

TEST_CASE("p_value: anchor values") {
    CHECK(ztest::p_value({1, 0.0}) == 0.5);
    CHECK(ztest::p_value({773, 0.0}) == 0.5);
    for (int n : {1, 25, 400}) {
        const double root_n = std::sqrt(static_cast<double>(n));
        CHECK(std::abs(ztest::p_value({n, 1.6448536269514726 / root_n}) - 0.05) < 1e-6);
        CHECK(std::abs(ztest::p_value({n, 2.34853 / root_n}) - 0.0094) < 2e-4);
    }
}

TEST_CASE("p_value and decide agree away from the rounding boundary") {
    std::mt19937 gen(20260809u);
    std::uniform_real_distribution<double> alpha_dist(0.005, 0.49);
    std::uniform_real_distribution<double> xbar_dist(-1.0, 1.0);
    std::uniform_int_distribution<int> n_dist(1, 10000);
    for (int i = 0; i < 4000; ++i) {
        const double alpha = alpha_dist(gen);
        const int n = n_dist(gen);
        const double xbar = xbar_dist(gen);
        const double p = ztest::p_value({n, xbar});
        if (std::abs(p - alpha) < 1e-12) continue;  // fp rounding band around p == alpha
        const bool positive = ztest::decide({alpha, n}, {n, xbar}) == TestOutcome::Positive;
        CHECK(positive == (p <= alpha));
    }
}

TEST_CASE("p_value at the threshold reproduces alpha") {
    for (double alpha : {0.005, 0.01, 0.05, 0.1, 0.25}) {
        for (int n : {1, 10, 100, 10000}) {
            const double t = ztest::rejection_threshold({alpha, n});
            CHECK(std::abs(ztest::p_value({n, t}) - alpha) < 1e-13);
        }
    }
}

TEST_CASE("level guarantee: P[positive | H0] equals alpha analytically") {
    for (double alpha : {0.005, 0.01, 0.05, 0.1, 0.25, 0.4}) {
        for (int n : {1, 7, 100, 10000}) {
            const double t = ztest::rejection_threshold({alpha, n});
            CHECK(std::abs(stdnorm::cdf(std::sqrt(static_cast<double>(n)) * t) - (1.0 - alpha)) <
                  1e-10);
        }
    }
}

TEST_CASE("confidence_interval: anchor values") {
    const auto [lo95, hi95] = ztest::confidence_interval({100, 0.0}, 0.95);
    CHECK(std::abs(lo95 + 0.19600) < 1e-4);
    CHECK(std::abs(hi95 - 0.19600) < 1e-4);

    const auto [lo_s, hi_s] = ztest::confidence_interval({100, 0.3}, 0.95);
    CHECK(std::abs(lo_s - 0.10400) < 1e-4);
    CHECK(std::abs(hi_s - 0.49600) < 1e-4);

    const auto [lo50, hi50] = ztest::confidence_interval({1, 0.0}, 0.5);
    CHECK(std::abs(lo50 + 0.6744897501960817) < 1e-3);
    CHECK(std::abs(hi50 - 0.6744897501960817) < 1e-3);
}

TEST_CASE("confidence_interval: domain errors and shape") {
    CHECK_THROWS_AS(ztest::confidence_interval({10, 0.0}, 0.0), std::domain_error);
    CHECK_THROWS_AS(ztest::confidence_interval({10, 0.0}, 1.0), std::domain_error);
    CHECK_THROWS_AS(ztest::confidence_interval({10, 0.0}, -3.0), std::domain_error);

    // Width shrinks with n, grows with level, and the interval is centered.
    double prev_width = 1e300;
    for (int n : {1, 4, 25, 100}) {
        const auto [lo, hi] = ztest::confidence_interval({n, 1.3}, 0.9);
        CHECK(std::abs((lo + hi) / 2.0 - 1.3) < 1e-12);
        CHECK(hi - lo < prev_width);
        prev_width = hi - lo;
    }
    double prev_level_width = 0.0;
    for (double level : {0.5, 0.8, 0.95, 0.999}) {
        const auto [lo, hi] = ztest::confidence_interval({16, 0.0}, level);
        CHECK(hi - lo > prev_level_width);
        prev_level_width = hi - lo;
    }
}
