#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fpr/bayes.hpp"
#include "fpr/errors.hpp"
#include "fpr/ztest.hpp"

using namespace fpr;
using bayes::BfInterval;
using bayes::BhPrior;
using bayes::CondMethod;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

BhPrior umpbt_prior(double gamma, int n) { return {bayes::umpbt_mu(gamma, n), n}; }
}  // namespace

TEST_CASE("log_bayes_factor: anchors") {
    // Zero exactly at xbar = mu/2.
    CHECK(bayes::log_bayes_factor({0.3, 50}, {50, 0.15}) == 0.0);
    // Hand evaluation: 4*(2*0.5*1 - 0.25)/2.
    CHECK(std::abs(bayes::log_bayes_factor({0.5, 4}, {4, 1.0}) - 1.5) < 1e-12);
    // The runaway case: mu tuned to gamma=3.87, n=100, observed mean 100.
    const double lbf = bayes::log_bayes_factor({0.164514, 100}, {100, 100.0});
    CHECK(std::abs(lbf - 1643.7867571902) < 1e-8);
    CHECK(std::abs(lbf / std::log(10.0) - 713.8875180733443) < 0.2);
    CHECK_THROWS_AS(bayes::log_bayes_factor({0.5, 4}, {5, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(bayes::log_bayes_factor({-0.5, 4}, {4, 1.0}), std::invalid_argument);
}

TEST_CASE("log_bayes_factor: strictly increasing in xbar") {
    const BhPrior prior{0.25, 36};
    double prev = -kInf;
    for (double xbar = -3.0; xbar <= 3.0; xbar += 0.125) {
        const double cur = bayes::log_bayes_factor(prior, {36, xbar});
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("posteriors: anchors and saturation") {
    CHECK(bayes::posterior_h0(0.0) == 0.5);
    CHECK(bayes::posterior_hmu(0.0) == 0.5);
    CHECK(std::abs(bayes::posterior_h0(std::log(3.87)) - 1.0 / 4.87) < 1e-12);
    CHECK(std::abs(bayes::posterior_h0(std::log(3.87)) - 0.2053) < 1e-3);
    CHECK(std::abs(bayes::posterior_hmu(std::log(3.87)) - 0.7946) < 1e-3);
    // 10^714-scale factor: the H0 posterior underflows cleanly to zero.
    CHECK(bayes::posterior_h0(1643.8) == 0.0);
    CHECK(bayes::posterior_hmu(1643.8) == 1.0);
    CHECK(bayes::posterior_h0(-1643.8) == 1.0);
}

TEST_CASE("posteriors: normalization and swap symmetry") {
    for (double l = -700.0; l <= 700.0; l += 13.7) {
        CHECK(std::abs(bayes::posterior_h0(l) + bayes::posterior_hmu(l) - 1.0) < 1e-12);
        CHECK(bayes::posterior_hmu(-l) == bayes::posterior_h0(l));
    }
    // Beyond the representable range of exp, both saturate consistently.
    for (double l : {800.0, 5000.0}) {
        CHECK(bayes::posterior_h0(l) == 0.0);
        CHECK(bayes::posterior_hmu(l) == 1.0);
        CHECK(bayes::posterior_h0(-l) == 1.0);
        CHECK(bayes::posterior_hmu(-l) == 0.0);
    }
}

TEST_CASE("posterior_h0: strictly decreasing in the log factor") {
    double prev = 2.0;
    for (double l = -30.0; l <= 30.0; l += 0.5) {
        const double cur = bayes::posterior_h0(l);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("gamma_star: anchors and domain") {
    CHECK(std::abs(bayes::gamma_star(0.05) - 3.8681320923537865) < 1e-10);
    CHECK(std::abs(bayes::gamma_star(0.05) - 3.868) < 5e-3);
    CHECK(std::abs(bayes::gamma_star(0.01) - 14.968488362247705) < 1e-9);
    CHECK(std::abs(bayes::gamma_star(0.01) - 14.95) < 5e-2);
    CHECK(bayes::gamma_star(0.4999) > 1.0);
    CHECK(bayes::gamma_star(0.4999) < 1.0001);
    CHECK_THROWS_AS(bayes::gamma_star(0.5), std::domain_error);
    CHECK_THROWS_AS(bayes::gamma_star(0.75), std::domain_error);
    CHECK_THROWS_AS(bayes::gamma_star(0.0), std::domain_error);
}

TEST_CASE("umpbt_mu: anchors, scaling law, domain") {
    CHECK(std::abs(bayes::umpbt_mu(3.87, 100) - 0.16451471101647355) < 1e-10);
    CHECK(std::abs(bayes::umpbt_mu(3.87, 100) - 0.16451) < 1e-4);
    CHECK(std::abs(bayes::umpbt_mu(std::exp(2.0), 2) - std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(bayes::umpbt_mu(3.87, 200) - 0.11632946776469368) < 1e-10);
    for (double gamma : {1.5, 3.87, 20.0, 1000.0}) {
        for (int n : {1, 9, 150}) {
            CHECK(std::abs(bayes::umpbt_mu(gamma, 2 * n) * std::sqrt(2.0) -
                           bayes::umpbt_mu(gamma, n)) < 1e-12);
        }
    }
    CHECK_THROWS_AS(bayes::umpbt_mu(1.0, 10), std::domain_error);
    CHECK_THROWS_AS(bayes::umpbt_mu(0.5, 10), std::domain_error);
}

TEST_CASE("bf_threshold_in_xbar: anchors") {
    const BhPrior prior = umpbt_prior(3.868, 100);
    CHECK(std::abs(bayes::bf_threshold_in_xbar(prior, 3.868) - 0.164485) < 1e-5);
    CHECK(bayes::bf_threshold_in_xbar(prior, 1.0) == prior.mu / 2.0);
    const double expected =
        std::log(5.44) / (100.0 * prior.mu) + prior.mu / 2.0;  // direct closed form
    CHECK(std::abs(bayes::bf_threshold_in_xbar(prior, 5.44) - expected) < 1e-15);
    CHECK(std::abs(expected - 0.1852) < 1e-3);
}

TEST_CASE("UMPBT threshold equals the frequentist rejection threshold") {
    for (double alpha : {0.1, 0.05, 0.01, 0.005}) {
        for (int n : {1, 10, 100, 10000}) {
            const double gamma = bayes::gamma_star(alpha);
            const double bf_t = bayes::bf_threshold_in_xbar(umpbt_prior(gamma, n), gamma);
            const double z_t = ztest::rejection_threshold({alpha, n});
            CHECK(std::abs(bf_t - z_t) <= 1e-9);
        }
    }
}

TEST_CASE("positive_prob: anchors") {
    for (int n : {1, 25, 100, 4096}) {
        const BhPrior prior = umpbt_prior(3.868, n);
        CHECK(std::abs(bayes::positive_prob(prior, 3.868) - 0.275) < 1e-3);
        CHECK(std::abs(bayes::positive_prob(prior, 21.77) - 0.0752) < 1e-3);
    }
    // Exact 0.275 when gamma is the exact counterpart of alpha = 0.05.
    const double gamma = bayes::gamma_star(0.05);
    CHECK(std::abs(bayes::positive_prob(umpbt_prior(gamma, 100), gamma) - 0.275) < 1e-12);
    // gamma -> 0+ accepts everything.
    CHECK(std::abs(bayes::positive_prob({0.3, 10}, 1e-300) - 1.0) < 1e-12);
}

TEST_CASE("false_positive_prob: anchors") {
    const double gamma = bayes::gamma_star(0.05);
    CHECK(std::abs(bayes::false_positive_prob(umpbt_prior(gamma, 50), gamma) - 0.025) < 1e-4);
    // gamma -> 0+: always reject, H0 holds half the time.
    CHECK(std::abs(bayes::false_positive_prob({0.7, 4}, 1e-300) - 0.5) < 1e-12);
    // BF >= 1 rule at the critical sample size sqrt(n) = 2 z*/mu: exactly 0.025.
    const double mu = 2.0 * 1.6448536269514726 / 11.0;  // n = 121
    CHECK(std::abs(bayes::false_positive_prob({mu, 121}, 1.0) - 0.025) < 1e-4);
}

TEST_CASE("BF >= 1 false-positive rate stays below 0.025 once sqrt(n)*mu >= 2 z*") {
    const double zstar = 1.6448536269514726;
    for (int n : {16, 100, 400, 2500}) {
        const double mu_min = 2.0 * zstar / std::sqrt(static_cast<double>(n));
        for (double factor : {1.0, 1.2, 3.0, 10.0}) {
            const double fp = bayes::false_positive_prob({mu_min * factor, n}, 1.0);
            CHECK(fp <= 0.025 + 1e-9);
        }
    }
}

TEST_CASE("bin_prob: anchors and total mass") {
    const BhPrior prior = umpbt_prior(3.868, 100);
    CHECK(std::abs(bayes::bin_prob(prior, {3.87, 5.44}) - 0.05) < 2e-3);
    CHECK(std::abs(bayes::bin_prob(prior, {21.77, kInf}) - 0.075) < 2e-3);
    CHECK(bayes::bin_prob(prior, {0.0, kInf}) == 1.0);
}

TEST_CASE("bin partition sums to the positive probability") {
    const double gamma = 3.868;
    for (int n : {1, 100, 3600}) {
        const BhPrior prior = umpbt_prior(gamma, n);
        const std::vector<double> edges{gamma, 5.44, 7.92, 12.31, 21.77};
        double total = 0.0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const double hi = i + 1 < edges.size() ? edges[i + 1] : kInf;
            total += bayes::bin_prob(prior, {edges[i], hi});
        }
        CHECK(std::abs(total - bayes::positive_prob(prior, gamma)) < 1e-9);
    }
}

TEST_CASE("moderate factors become vanishingly rare at large n") {
    // mu = 0.5, n = 10^4: the factor mass in [1/20, 20] is far below 1e-10.
    const double mass = bayes::bin_prob({0.5, 10000}, {0.05, 20.0});
    CHECK(mass < 1e-10);
    CHECK(mass >= 0.0);
}

TEST_CASE("h0_given_bf_in: anchors via both methods") {
    const double gamma = bayes::gamma_star(0.05);
    const BhPrior prior = umpbt_prior(gamma, 100);

    const double tail = bayes::h0_given_bf_in(prior, {gamma, kInf}, CondMethod::Ratio);
    CHECK(std::abs(tail - 0.0909) < 1e-3);  // exactly 1/11 at the matched gamma
    CHECK(std::abs(tail - 1.0 / 11.0) < 1e-12);

    CHECK(std::abs(bayes::h0_given_bf_in(prior, {3.87, 5.44}, CondMethod::Ratio) - 0.18) < 5e-3);
    CHECK(std::abs(bayes::h0_given_bf_in(prior, {7.92, 12.31}, CondMethod::Ratio) - 0.09) <
          5e-3);

    for (const BfInterval interval :
         {BfInterval{3.87, 5.44}, BfInterval{7.92, 12.31}, BfInterval{21.77, kInf}}) {
        const double ratio = bayes::h0_given_bf_in(prior, interval, CondMethod::Ratio);
        const double quad = bayes::h0_given_bf_in(prior, interval, CondMethod::Quadrature);
        CHECK(std::abs(ratio - quad) < 1e-6);
    }
}

TEST_CASE("h0_given_bf_in: zero-mass interval is a degenerate conditioning") {
    const BhPrior prior = umpbt_prior(3.87, 100);
    CHECK_THROWS_AS(bayes::h0_given_bf_in(prior, {1e300, kInf}, CondMethod::Ratio),
                    fpr::degenerate_error);
    CHECK_THROWS_AS(bayes::h0_given_bf_in(prior, {1e300, kInf}, CondMethod::Quadrature),
                    fpr::degenerate_error);
}

TEST_CASE("johnson_table: the five-bin decomposition") {
    const std::vector<double> edges{3.87, 5.44, 7.92, 12.31, 21.77};
    const auto rows = bayes::johnson_table(0.05, 100, edges);
    REQUIRE(rows.size() == 5);

    const double expected_p[] = {0.05, 0.032, 0.019, 0.0094, 0.0035};
    const double expected_share[] = {0.18, 0.13, 0.09, 0.06};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(std::abs(rows[i].p_lo - expected_p[i]) / expected_p[i] < 0.10);
        CHECK(rows[i].p_hi < rows[i].p_lo);
        const double expected_mass = i + 1 < rows.size() ? 0.05 : 0.075;
        CHECK(std::abs(rows[i].prob_bin - expected_mass) < 3e-3);
        if (i < 4) CHECK(std::abs(rows[i].prob_h0_given_bin - expected_share[i]) < 1e-2);
    }
    CHECK(rows.back().p_hi == 0.0);
    // The exact conditional share of the last bin is ~0.023, not the commonly
    // rounded 0.03; reported as computed.
    CHECK(std::abs(rows.back().prob_h0_given_bin - 0.0234) < 1e-3);

    double weighted = 0.0;
    for (const auto& row : rows) weighted += row.prob_bin * row.prob_h0_given_bin;
    CHECK(std::abs(weighted - 0.025) < 1e-3);
}

TEST_CASE("johnson_table: is invariant in n") {
    const std::vector<double> edges{3.87, 5.44, 7.92, 12.31, 21.77};
    const auto rows_small = bayes::johnson_table(0.05, 4, edges);
    const auto rows_large = bayes::johnson_table(0.05, 40000, edges);
    for (std::size_t i = 0; i < rows_small.size(); ++i) {
        CHECK(std::abs(rows_small[i].prob_bin - rows_large[i].prob_bin) < 1e-12);
        CHECK(std::abs(rows_small[i].prob_h0_given_bin - rows_large[i].prob_h0_given_bin) <
              1e-12);
    }
}

TEST_CASE("johnson_table: rejects bad edges") {
    CHECK_THROWS_AS(bayes::johnson_table(0.05, 100, {5.44, 3.87}), std::invalid_argument);
    CHECK_THROWS_AS(bayes::johnson_table(0.05, 100, {3.87, 3.87}), std::invalid_argument);
    CHECK_THROWS_AS(bayes::johnson_table(0.05, 100, {}), std::invalid_argument);
    CHECK_THROWS_AS(bayes::johnson_table(0.05, 100, {-1.0, 2.0}), std::invalid_argument);
}
