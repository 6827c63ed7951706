#pragma once

// One-sided test of H0: mean 0 against a positive mean, for n independent
// unit-variance Gaussian measurements summarized by their empirical mean.

#include <utility>

namespace fpr::ztest {

// Sufficient statistic of an experiment: measurement count and empirical mean.
struct SampleSummary {
    int n;        // >= 1
    double xbar;  // finite
};

// Test design: significance level and planned sample count.
struct GaussianZTest {
    double alpha;  // in (0, 1)
    int n;         // >= 1
};

enum class TestOutcome { Positive, Negative };

// Smallest xbar that rejects H0: quantile(1 - alpha) / sqrt(n).
double rejection_threshold(const GaussianZTest& test);

// Positive iff s.xbar >= rejection_threshold(test). Ties count as Positive.
// Throws std::invalid_argument when s.n != test.n.
TestOutcome decide(const GaussianZTest& test, const SampleSummary& s);

// Upper-tail probability of the observed mean under H0: 1 - Phi(sqrt(n)*xbar).
double p_value(const SampleSummary& s);

// Two-sided interval xbar -+ quantile((1+level)/2)/sqrt(n) for the true mean,
// assuming the standard deviation is (at most) 1. Throws std::domain_error
// for level outside (0, 1).
std::pair<double, double> confidence_interval(const SampleSummary& s, double level);

}  // namespace fpr::ztest
