#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fpr/normal.hpp"
#include "oracles.hpp"

using fpr::stdnorm::cdf;
using fpr::stdnorm::pdf;
using fpr::stdnorm::quantile;

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

TEST_CASE("pdf: closed-form values and symmetry") {
    CHECK(std::abs(pdf(0.0) - 0.3989422804014327) < 1e-15);
    CHECK(std::abs(pdf(1.6449) - 0.10312777369994583) < 1e-12);
    CHECK(std::abs(pdf(1.6449) - 0.1031) < 5e-5);
    for (double z = 0.0; z <= 8.0; z += 0.37) CHECK(pdf(z) == pdf(-z));
    CHECK(pdf(6.0) > 0.0);
}

TEST_CASE("pdf: rejects non-finite input") {
    CHECK_THROWS_AS(pdf(kNan), std::invalid_argument);
    CHECK_THROWS_AS(pdf(kInf), std::invalid_argument);
    CHECK_THROWS_AS(pdf(-kInf), std::invalid_argument);
}

TEST_CASE("cdf: anchor values") {
    CHECK(cdf(0.0) == 0.5);
    CHECK(std::abs(cdf(1.6449) - 0.95) < 1e-4);
    CHECK(std::abs(cdf(1.96) - 0.975) < 1e-4);
}

TEST_CASE("cdf: symmetry and monotonicity") {
    for (double z = 0.0; z <= 8.0; z += 0.13)
        CHECK(std::abs(cdf(z) + cdf(-z) - 1.0) < 1e-12);
    double prev = cdf(-8.0);
    for (double z = -7.9; z <= 8.0; z += 0.1) {
        const double cur = cdf(z);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("cdf: agrees with the integration oracle") {
    for (double z = -6.0; z <= 6.0; z += 0.25)
        CHECK(std::abs(cdf(z) - oracles::cdf_by_integration(z)) < 1e-9);
}

TEST_CASE("cdf: tail saturation") {
    CHECK(cdf(-8.0) < 1e-14);
    CHECK(cdf(8.0) > 1.0 - 1e-14);
    CHECK(cdf(-8.0) > 0.0);
}

TEST_CASE("cdf: rejects non-finite input") {
    CHECK_THROWS_AS(cdf(kNan), std::invalid_argument);
    CHECK_THROWS_AS(cdf(kInf), std::invalid_argument);
}

TEST_CASE("quantile: anchor values against the bisection oracle") {
    CHECK(quantile(0.5) == 0.0);
    CHECK(std::abs(quantile(0.95) - 1.6448536269514726) < 1e-5);
    CHECK(std::abs(quantile(0.975) - 1.9599639845400543) < 1e-5);
    CHECK(std::abs(quantile(0.95) - oracles::quantile_by_bisection(0.95)) < 1e-12);
    CHECK(std::abs(quantile(0.975) - oracles::quantile_by_bisection(0.975)) < 1e-12);
    CHECK(std::abs(quantile(0.0094238404090335) - oracles::quantile_by_bisection(0.0094238404090335)) < 1e-12);
}

TEST_CASE("quantile: domain errors at and beyond the edges") {
    CHECK_THROWS_AS(quantile(0.0), std::domain_error);
    CHECK_THROWS_AS(quantile(1.0), std::domain_error);
    CHECK_THROWS_AS(quantile(-0.25), std::domain_error);
    CHECK_THROWS_AS(quantile(1.0001), std::domain_error);
    CHECK_THROWS_AS(quantile(kNan), std::domain_error);
}

TEST_CASE("quantile: round trip and strict monotonicity over (0.001, 0.999)") {
    double prev = -1e300;
    for (double p = 0.001; p < 0.9995; p += 0.0007) {
        const double z = quantile(p);
        CHECK(std::abs(cdf(z) - p) < 1e-10);
        CHECK(z > prev);
        prev = z;
    }
}

TEST_CASE("quantile: consistent deep into the tails") {
    for (double p : {1e-12, 1e-8, 1e-4, 1.0 - 1e-8, 1.0 - 1e-12}) {
        const double z = quantile(p);
        CHECK(std::abs(cdf(z) - p) < 1e-12);
    }
}
