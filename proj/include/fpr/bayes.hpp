#pragma once

// Two-point Bayesian machinery: an equal-weight prior over H0 (mean 0) and
// H_mu (mean mu > 0), both unit variance. Bayes factors live on the natural
// log scale end to end; exponentials only ever appear inside saturating
// sigmoid evaluations, so mean values that imply factors like 10^714 stay
// representable.

#include <vector>

#include "fpr/ztest.hpp"

namespace fpr::bayes {

// The a priori assumption: P[H0] = P[H_mu] = 1/2, n planned measurements.
struct BhPrior {
    double mu;  // > 0
    int n;      // >= 1
};

// Bayes-factor interval [lo, hi). lo == 0 means no lower constraint,
// hi may be +infinity.
struct BfInterval {
    double lo;
    double hi;
};

enum class CondMethod { Ratio, Quadrature };

// One row of the evidence-decomposition table: a Bayes-factor bin, the
// p-values at its edges, its probability mass under the prior, and the
// conditional probability that H0 holds given the factor landed in the bin.
struct JohnsonTableRow {
    BfInterval interval;
    double p_lo;                // p-value at interval.lo (the larger one)
    double p_hi;                // p-value at interval.hi (0 for an infinite edge)
    double prob_bin;            // P[BF in interval]
    double prob_h0_given_bin;   // P[H0 | BF in interval]
};

// log BF = n*(2*mu*xbar - mu^2)/2. Linear and increasing in xbar, zero at
// xbar = mu/2. Throws std::invalid_argument when s.n != prior.n.
double log_bayes_factor(const BhPrior& prior, const ztest::SampleSummary& s);

// P[H0 | data] = 1/(1 + BF), evaluated stably from the log factor.
double posterior_h0(double log_bf);

// P[H_mu | data] = 1/(1 + 1/BF). posterior_h0 + posterior_hmu == 1.
double posterior_hmu(double log_bf);

// Evidence threshold matching a one-sided level-alpha test:
// gamma* = exp(z^2/2) with z = quantile(1 - alpha). Requires 0 < alpha < 0.5.
double gamma_star(double alpha);

// The alternative mean sqrt(2*log(gamma)/n) that maximizes the chance of
// reaching BF >= gamma. Requires gamma > 1.
double umpbt_mu(double gamma, int n);

// The xbar value where BF equals gamma: log(gamma)/(n*mu) + mu/2.
double bf_threshold_in_xbar(const BhPrior& prior, double gamma);

// P[BF >= gamma] under the prior.
double positive_prob(const BhPrior& prior, double gamma);

// P[BF >= gamma and H0] = (1/2) * P[BF >= gamma | H0].
double false_positive_prob(const BhPrior& prior, double gamma);

// P[BF in interval] under the prior.
double bin_prob(const BhPrior& prior, const BfInterval& interval);

// P[H0 | BF in interval], either as an exact ratio of normal tail masses or
// by integrating 1/(1 + BF(xbar)) against the prior's mixture density over
// the interval. Throws fpr::degenerate_error when the interval carries no
// probability mass.
double h0_given_bf_in(const BhPrior& prior, const BfInterval& interval, CondMethod method);

// Rows for consecutive bins [e1,e2), ..., [em, inf), with mu chosen as
// umpbt_mu(gamma_star(alpha), n). Edges must be positive and strictly
// increasing.
std::vector<JohnsonTableRow> johnson_table(double alpha, int n,
                                           const std::vector<double>& bf_edges);

}  // namespace fpr::bayes
