#include "fpr/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "fpr/errors.hpp"
#include "fpr/normal.hpp"
#include "fpr/positivity.hpp"
#include "fpr/rng.hpp"
#include "fpr/ztest.hpp"

namespace fpr::mc {

namespace {

unsigned resolve_workers(unsigned workers, std::uint64_t k) {
    if (workers == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        workers = hw ? hw : 1;
    }
    workers = std::min(workers, 64u);
    // Tiny runs are not worth the thread spawn.
    if (k < 4096) workers = 1;
    return std::max(workers, 1u);
}

// Runs fn(begin, end, partial) over contiguous chunks of [0, k) and returns
// the per-chunk partials in chunk order.
template <class Partial, class ChunkFn>
std::vector<Partial> run_chunks(std::uint64_t k, unsigned workers, const ChunkFn& fn) {
    std::vector<Partial> parts(workers);
    if (workers == 1) {
        fn(0, k, parts[0]);
        return parts;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (k + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = std::min<std::uint64_t>(k, w * chunk);
        const std::uint64_t end = std::min<std::uint64_t>(k, begin + chunk);
        pool.emplace_back([&fn, &parts, w, begin, end] { fn(begin, end, parts[w]); });
    }
    for (auto& t : pool) t.join();
    return parts;
}

double binomial_se(double p, std::uint64_t trials) {
    if (trials == 0) return 0.0;
    return std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(trials));
}

SimulationReport assemble_report(std::uint64_t k, const Tallies& counts) {
    SimulationReport rep;
    rep.k = k;
    rep.counts = counts;
    rep.k_positive = counts.fp + counts.tp;
    const double kd = static_cast<double>(k);
    rep.empirical_r = static_cast<double>(rep.k_positive) / kd;
    rep.empirical_fp_among_all = static_cast<double>(counts.fp) / kd;
    rep.empirical_fp_among_positives =
        rep.k_positive ? static_cast<double>(counts.fp) / static_cast<double>(rep.k_positive)
                       : 0.0;
    rep.stderr_estimates = {binomial_se(rep.empirical_r, k),
                            binomial_se(rep.empirical_fp_among_positives, rep.k_positive),
                            binomial_se(rep.empirical_fp_among_all, k)};
    return rep;
}

void validate(const WorldConfig& cfg) {
    detail::require_arg(cfg.k >= 1, "mc: world must contain at least one experiment");
    detail::require_arg(cfg.eta >= 0.0 && cfg.eta <= 1.0, "mc: eta must lie in [0, 1]");
    detail::require_arg(std::isfinite(cfg.mu_alt) && cfg.mu_alt > 0.0,
                        "mc: mu_alt must be positive and finite");
    detail::require_arg(cfg.n >= 1, "mc: n must be >= 1");
    detail::require_arg(cfg.alpha > 0.0 && cfg.alpha < 1.0, "mc: alpha must lie in (0, 1)");
}

void validate(const BhWorldConfig& cfg) {
    detail::require_arg(cfg.k >= 1, "mc: world must contain at least one experiment");
    detail::require_arg(std::isfinite(cfg.prior.mu) && cfg.prior.mu > 0.0 && cfg.prior.n >= 1,
                        "mc: malformed prior");
    detail::require_arg(std::isfinite(cfg.gamma) && cfg.gamma > 0.0,
                        "mc: gamma must be positive");
    detail::require_arg(!cfg.bf_edges.empty(), "mc: need at least one histogram edge");
    detail::require_arg(cfg.bf_edges.front() > 0.0, "mc: histogram edges must be positive");
    detail::require_arg(
        std::is_sorted(cfg.bf_edges.begin(), cfg.bf_edges.end()) &&
            std::adjacent_find(cfg.bf_edges.begin(), cfg.bf_edges.end()) == cfg.bf_edges.end(),
        "mc: histogram edges must be strictly increasing");
}

}  // namespace

SimulationReport simulate_world(const WorldConfig& cfg, unsigned workers) {
    validate(cfg);
    const double threshold = ztest::rejection_threshold({cfg.alpha, cfg.n});
    const double inv_root_n = 1.0 / std::sqrt(static_cast<double>(cfg.n));
    const unsigned w = resolve_workers(workers, cfg.k);

    const auto parts = run_chunks<Tallies>(
        cfg.k, w, [&](std::uint64_t begin, std::uint64_t end, Tallies& t) {
            for (std::uint64_t i = begin; i < end; ++i) {
                const bool h0_true = rng::uniform_open(cfg.seed, 2 * i) < cfg.eta;
                const double mean = h0_true ? 0.0 : cfg.mu_alt;
                const double xbar =
                    mean + stdnorm::quantile(rng::uniform_open(cfg.seed, 2 * i + 1)) * inv_root_n;
                // Same tie convention as ztest::decide: the threshold itself rejects.
                const bool positive = xbar >= threshold;
                if (h0_true)
                    ++(positive ? t.fp : t.tn);
                else
                    ++(positive ? t.tp : t.fn);
            }
        });

    Tallies total;
    for (const Tallies& t : parts) {
        total.fp += t.fp;
        total.tn += t.tn;
        total.tp += t.tp;
        total.fn += t.fn;
    }
    return assemble_report(cfg.k, total);
}

std::pair<SimulationReport, BinHistogram> simulate_bh(const BhWorldConfig& cfg,
                                                      unsigned workers) {
    validate(cfg);
    const double log_gamma = std::log(cfg.gamma);
    std::vector<double> log_edges;
    log_edges.reserve(cfg.bf_edges.size());
    for (double e : cfg.bf_edges) log_edges.push_back(std::log(e));

    const double mu = cfg.prior.mu;
    const double n = static_cast<double>(cfg.prior.n);
    const double inv_root_n = 1.0 / std::sqrt(n);
    const unsigned w = resolve_workers(workers, cfg.k);

    struct Partial {
        Tallies tallies;
        std::vector<std::uint64_t> bin_counts;
        std::vector<std::uint64_t> bin_fp;
    };

    const auto parts = run_chunks<Partial>(
        cfg.k, w, [&](std::uint64_t begin, std::uint64_t end, Partial& p) {
            p.bin_counts.assign(log_edges.size(), 0);
            p.bin_fp.assign(log_edges.size(), 0);
            for (std::uint64_t i = begin; i < end; ++i) {
                const bool h0_true = rng::uniform_open(cfg.seed, 2 * i) < 0.5;
                const double mean = h0_true ? 0.0 : mu;
                const double xbar =
                    mean + stdnorm::quantile(rng::uniform_open(cfg.seed, 2 * i + 1)) * inv_root_n;
                const double lbf = 0.5 * n * (2.0 * mu * xbar - mu * mu);
                const bool positive = lbf >= log_gamma;
                if (h0_true)
                    ++(positive ? p.tallies.fp : p.tallies.tn);
                else
                    ++(positive ? p.tallies.tp : p.tallies.fn);
                if (lbf >= log_edges.front()) {
                    const auto it = std::upper_bound(log_edges.begin(), log_edges.end(), lbf);
                    const std::size_t bin = static_cast<std::size_t>(it - log_edges.begin()) - 1;
                    ++p.bin_counts[bin];
                    if (h0_true) ++p.bin_fp[bin];
                }
            }
        });

    Tallies total;
    BinHistogram hist;
    hist.edges = cfg.bf_edges;
    hist.counts.assign(cfg.bf_edges.size(), 0);
    hist.fp_counts.assign(cfg.bf_edges.size(), 0);
    for (const Partial& p : parts) {
        total.fp += p.tallies.fp;
        total.tn += p.tallies.tn;
        total.tp += p.tallies.tp;
        total.fn += p.tallies.fn;
        for (std::size_t b = 0; b < hist.counts.size(); ++b) {
            hist.counts[b] += p.bin_counts[b];
            hist.fp_counts[b] += p.bin_fp[b];
        }
    }
    return {assemble_report(cfg.k, total), std::move(hist)};
}

BoundCheck verify_bound(const SimulationReport& report, double alpha) {
    detail::require_domain(alpha > 0.0 && alpha < 1.0, "mc::verify_bound: alpha must lie in (0, 1)");
    if (report.k_positive == 0)
        throw degenerate_error("mc::verify_bound: report contains no positive results");

    const double r_hat = report.empirical_r;
    const double share = report.empirical_fp_among_positives;
    const double raw = positivity::fp_bound(alpha, r_hat);
    const double bound = std::min(1.0, raw);

    // First-order standard error of (share - bound(r_hat)): binomial noise on
    // the share plus the bound's sensitivity to the estimated ratio. The
    // sensitivity term drops out where the cap flattens the bound.
    const double se_share = binomial_se(share, report.k_positive);
    const double se_r = binomial_se(r_hat, report.k);
    const double d_bound_dr = alpha / ((1.0 - alpha) * r_hat * r_hat);
    const double band = 4.0 * (se_share + (raw < 1.0 ? d_bound_dr * se_r : 0.0));

    const double slack = bound + band - share;
    return {slack >= 0.0, slack, bound, band};
}

}  // namespace fpr::mc
