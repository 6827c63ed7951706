#include "fpr/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fpr/errors.hpp"
#include "fpr/normal.hpp"
#include "fpr/quadrature.hpp"

namespace fpr::bayes {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const BhPrior& prior) {
    detail::require_arg(std::isfinite(prior.mu) && prior.mu > 0.0,
                        "bayes: alternative mean mu must be positive and finite");
    detail::require_arg(prior.n >= 1, "bayes: sample count n must be >= 1");
}

void validate(const BfInterval& interval) {
    detail::require_arg(interval.lo >= 0.0 && !std::isnan(interval.lo),
                        "bayes: interval lower edge must be >= 0");
    detail::require_arg(!std::isnan(interval.hi) && interval.lo < interval.hi,
                        "bayes: interval edges must satisfy lo < hi");
}

// Upper-tail mass P[Z >= z], tolerating the infinite edges produced by
// interval bounds 0 and +inf.
double upper_mass(double z) {
    if (z == kInf) return 0.0;
    if (z == -kInf) return 1.0;
    return stdnorm::cdf(-z);
}

// xbar threshold for BF >= g; -inf for g == 0 (no constraint).
double xbar_at_bf(const BhPrior& prior, double g) {
    if (g == 0.0) return -kInf;
    return std::log(g) / (prior.n * prior.mu) + 0.5 * prior.mu;
}

struct IntervalMasses {
    double h0;     // P[xbar in interval | H0]
    double h_mu;   // P[xbar in interval | H_mu]
};

IntervalMasses interval_masses(const BhPrior& prior, const BfInterval& interval) {
    const double root_n = std::sqrt(static_cast<double>(prior.n));
    const double x_lo = xbar_at_bf(prior, interval.lo);
    const double x_hi = xbar_at_bf(prior, interval.hi);
    IntervalMasses m;
    m.h0 = upper_mass(root_n * x_lo) - upper_mass(root_n * x_hi);
    m.h_mu = upper_mass(root_n * (x_lo - prior.mu)) - upper_mass(root_n * (x_hi - prior.mu));
    return m;
}

}  // namespace

double log_bayes_factor(const BhPrior& prior, const ztest::SampleSummary& s) {
    validate(prior);
    detail::require_arg(s.n >= 1 && std::isfinite(s.xbar), "bayes: malformed sample summary");
    detail::require_arg(s.n == prior.n,
                        "bayes::log_bayes_factor: sample size differs from the prior's n");
    return 0.5 * prior.n * (2.0 * prior.mu * s.xbar - prior.mu * prior.mu);
}

double posterior_h0(double log_bf) {
    detail::require_arg(!std::isnan(log_bf), "bayes::posterior_h0: log BF must not be NaN");
    // 1/(1 + e^l) without overflow: saturates to 0 (resp. 1) for large |l|.
    if (log_bf >= 0.0) {
        const double t = std::exp(-log_bf);
        return t / (1.0 + t);
    }
    return 1.0 / (1.0 + std::exp(log_bf));
}

double posterior_hmu(double log_bf) {
    detail::require_arg(!std::isnan(log_bf), "bayes::posterior_hmu: log BF must not be NaN");
    return posterior_h0(-log_bf);
}

double gamma_star(double alpha) {
    detail::require_domain(alpha > 0.0 && alpha < 0.5,
                           "bayes::gamma_star: alpha must lie in (0, 0.5) for a one-sided test");
    const double z = stdnorm::quantile(1.0 - alpha);
    return std::exp(0.5 * z * z);
}

double umpbt_mu(double gamma, int n) {
    detail::require_domain(gamma > 1.0 && std::isfinite(gamma),
                           "bayes::umpbt_mu: gamma must exceed 1");
    detail::require_arg(n >= 1, "bayes::umpbt_mu: n must be >= 1");
    return std::sqrt(2.0 * std::log(gamma) / n);
}

double bf_threshold_in_xbar(const BhPrior& prior, double gamma) {
    validate(prior);
    detail::require_domain(gamma > 0.0, "bayes::bf_threshold_in_xbar: gamma must be positive");
    return xbar_at_bf(prior, gamma);
}

double positive_prob(const BhPrior& prior, double gamma) {
    validate(prior);
    detail::require_domain(gamma > 0.0, "bayes::positive_prob: gamma must be positive");
    const IntervalMasses m = interval_masses(prior, {gamma, kInf});
    return 0.5 * (m.h0 + m.h_mu);
}

double false_positive_prob(const BhPrior& prior, double gamma) {
    validate(prior);
    detail::require_domain(gamma > 0.0, "bayes::false_positive_prob: gamma must be positive");
    const double root_n = std::sqrt(static_cast<double>(prior.n));
    return 0.5 * upper_mass(root_n * xbar_at_bf(prior, gamma));
}

double bin_prob(const BhPrior& prior, const BfInterval& interval) {
    validate(prior);
    validate(interval);
    const IntervalMasses m = interval_masses(prior, interval);
    return 0.5 * (m.h0 + m.h_mu);
}

double h0_given_bf_in(const BhPrior& prior, const BfInterval& interval, CondMethod method) {
    validate(prior);
    validate(interval);

    if (method == CondMethod::Ratio) {
        const IntervalMasses m = interval_masses(prior, interval);
        const double total = m.h0 + m.h_mu;
        if (!(total > 0.0))
            throw degenerate_error("bayes::h0_given_bf_in: interval carries no probability mass");
        return m.h0 / total;
    }

    // Quadrature route: E[1/(1+BF) | BF in I] against the mixture density
    // (1/2)*sqrt(n)*(phi(sqrt(n)x) + phi(sqrt(n)(x-mu))). The two bumps have
    // width 1/sqrt(n); clipping at 10 of those widths leaves mass below
    // double precision.
    const double root_n = std::sqrt(static_cast<double>(prior.n));
    const double clip_lo = -10.0 / root_n;
    const double clip_hi = prior.mu + 10.0 / root_n;
    const double a = std::max(xbar_at_bf(prior, interval.lo), clip_lo);
    const double b = std::min(xbar_at_bf(prior, interval.hi), clip_hi);
    if (!(a < b))
        throw degenerate_error("bayes::h0_given_bf_in: interval carries no probability mass");

    const auto density = [&](double x) {
        return 0.5 * root_n *
               (stdnorm::pdf(root_n * x) + stdnorm::pdf(root_n * (x - prior.mu)));
    };
    const auto weighted = [&](double x) {
        const double lbf = 0.5 * prior.n * (2.0 * prior.mu * x - prior.mu * prior.mu);
        return posterior_h0(lbf) * density(x);
    };

    const double mass = quadrature::adaptive_simpson(density, a, b, 1e-10);
    if (!(mass > 0.0))
        throw degenerate_error("bayes::h0_given_bf_in: interval carries no probability mass");
    return quadrature::adaptive_simpson(weighted, a, b, 1e-10) / mass;
}

std::vector<JohnsonTableRow> johnson_table(double alpha, int n,
                                           const std::vector<double>& bf_edges) {
    detail::require_arg(!bf_edges.empty(), "bayes::johnson_table: need at least one edge");
    detail::require_arg(bf_edges.front() > 0.0, "bayes::johnson_table: edges must be positive");
    detail::require_arg(std::is_sorted(bf_edges.begin(), bf_edges.end()) &&
                            std::adjacent_find(bf_edges.begin(), bf_edges.end()) == bf_edges.end(),
                        "bayes::johnson_table: edges must be strictly increasing");

    const BhPrior prior{umpbt_mu(gamma_star(alpha), n), n};
    const double root_n = std::sqrt(static_cast<double>(n));

    const auto p_at_edge = [&](double edge) {
        if (edge == kInf) return 0.0;
        return stdnorm::cdf(-root_n * bf_threshold_in_xbar(prior, edge));
    };

    std::vector<JohnsonTableRow> rows;
    rows.reserve(bf_edges.size());
    for (std::size_t i = 0; i < bf_edges.size(); ++i) {
        const double hi = (i + 1 < bf_edges.size()) ? bf_edges[i + 1] : kInf;
        const BfInterval interval{bf_edges[i], hi};
        rows.push_back({interval, p_at_edge(interval.lo), p_at_edge(hi),
                        bin_prob(prior, interval),
                        h0_given_bf_in(prior, interval, CondMethod::Ratio)});
    }
    return rows;
}

}  // namespace fpr::bayes
