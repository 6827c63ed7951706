#include "fpr/ztest.hpp"

#include <cmath>
#include <stdexcept>

#include "fpr/errors.hpp"
#include "fpr/normal.hpp"

namespace fpr::ztest {

namespace {

void validate(const SampleSummary& s) {
    detail::require_arg(s.n >= 1, "ztest: sample count n must be >= 1");
    detail::require_arg(std::isfinite(s.xbar), "ztest: empirical mean must be finite");
}

void validate(const GaussianZTest& test) {
    detail::require_arg(test.alpha > 0.0 && test.alpha < 1.0,
                        "ztest: significance level must lie in (0, 1)");
    detail::require_arg(test.n >= 1, "ztest: sample count n must be >= 1");
}

}  // namespace

double rejection_threshold(const GaussianZTest& test) {
    validate(test);
    return stdnorm::quantile(1.0 - test.alpha) / std::sqrt(static_cast<double>(test.n));
}

TestOutcome decide(const GaussianZTest& test, const SampleSummary& s) {
    validate(test);
    validate(s);
    detail::require_arg(s.n == test.n, "ztest::decide: sample size differs from the test design");
    return s.xbar >= rejection_threshold(test) ? TestOutcome::Positive : TestOutcome::Negative;
}

double p_value(const SampleSummary& s) {
    validate(s);
    // Phi(-z) is the relatively accurate form of the upper tail 1 - Phi(z).
    return stdnorm::cdf(-std::sqrt(static_cast<double>(s.n)) * s.xbar);
}

std::pair<double, double> confidence_interval(const SampleSummary& s, double level) {
    validate(s);
    detail::require_domain(level > 0.0 && level < 1.0,
                           "ztest::confidence_interval: level must lie in (0, 1)");
    const double half_width =
        stdnorm::quantile(0.5 * (1.0 + level)) / std::sqrt(static_cast<double>(s.n));
    return {s.xbar - half_width, s.xbar + half_width};
}

}  // namespace fpr::ztest
