#include "fpr/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "fpr/bayes.hpp"
#include "fpr/errors.hpp"

namespace fpr::scenarios {

namespace {

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

}  // namespace

ScenarioReport extreme_bf(double gamma, int n, double xbar) {
    detail::require_domain(gamma > 1.0, "scenarios::extreme_bf: gamma must exceed 1");
    detail::require_arg(std::isfinite(xbar), "scenarios::extreme_bf: xbar must be finite");

    const double mu = bayes::umpbt_mu(gamma, n);
    const double lbf = bayes::log_bayes_factor({mu, n}, {n, xbar});
    const double log10_bf = lbf / std::log(10.0);

    ScenarioReport rep;
    rep.scenario_id = "extreme-bf";
    rep.inputs = {{"gamma", gamma}, {"n", static_cast<double>(n)}, {"xbar", xbar}};
    rep.findings = {{"mu", mu},
                    {"log10_bf", log10_bf},
                    {"posterior_hmu", bayes::posterior_hmu(lbf)},
                    {"xbar_minus_mu", std::abs(xbar - mu)}};
    rep.narrative = "The threshold-derived alternative fixes mu = " + num(mu) +
                    "; an observed mean of " + num(xbar) +
                    " is then read as support for that mu with log10 Bayes factor " +
                    num(log10_bf) + ", even though the observation misses mu by " +
                    num(std::abs(xbar - mu)) + ".";
    return rep;
}

ScenarioReport gamma_dependence(double gamma1, double gamma2, int n) {
    detail::require_domain(gamma1 > 1.0 && gamma2 > 1.0,
                           "scenarios::gamma_dependence: thresholds must exceed 1");
    if (gamma1 == gamma2)
        throw degenerate_error("scenarios::gamma_dependence: thresholds are identical");
    detail::require_arg(gamma1 < gamma2,
                        "scenarios::gamma_dependence: expected gamma1 < gamma2");

    const double mu1 = bayes::umpbt_mu(gamma1, n);
    const double mu2 = bayes::umpbt_mu(gamma2, n);
    const double t1 = bayes::bf_threshold_in_xbar({mu1, n}, gamma1);
    const double t2 = bayes::bf_threshold_in_xbar({mu2, n}, gamma2);
    const double both_from = std::max(t1, t2);

    ScenarioReport rep;
    rep.scenario_id = "gamma-dependence";
    rep.inputs = {{"gamma1", gamma1}, {"gamma2", gamma2}, {"n", static_cast<double>(n)}};
    rep.findings = {{"mu1", mu1},
                    {"mu2", mu2},
                    {"xbar_support_1", t1},
                    {"xbar_support_2", t2},
                    {"xbar_support_both_from", both_from}};
    rep.narrative = "Thresholds " + num(gamma1) + " and " + num(gamma2) +
                    " derive different alternatives (mu = " + num(mu1) + " vs " + num(mu2) +
                    ") from the same design; for xbar >= " + num(both_from) +
                    " both analysts simultaneously claim strong support, each for a"
                    " different hypothesis.";
    return rep;
}

ScenarioReport pooling_inconsistency(double gamma, int n) {
    detail::require_domain(gamma > 1.0, "scenarios::pooling_inconsistency: gamma must exceed 1");
    detail::require_arg(n >= 1 && n <= std::numeric_limits<int>::max() / 2,
                        "scenarios::pooling_inconsistency: n out of range");

    const double mu_n = bayes::umpbt_mu(gamma, n);
    const double mu_2n = bayes::umpbt_mu(gamma, 2 * n);

    ScenarioReport rep;
    rep.scenario_id = "pooling";
    rep.inputs = {{"gamma", gamma}, {"n", static_cast<double>(n)}};
    rep.findings = {{"mu_n", mu_n}, {"mu_2n", mu_2n}, {"ratio", mu_n / mu_2n}};
    rep.narrative = "The same threshold implies mu = " + num(mu_n) + " for n = " + num(n) +
                    " but mu = " + num(mu_2n) + " for the pooled 2n = " + num(2.0 * n) +
                    " (ratio sqrt(2)): grouping two identical experiments changes which"
                    " hypothesis the data supposedly supports.";
    return rep;
}

}  // namespace fpr::scenarios
