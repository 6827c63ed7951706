#pragma once

// Seedable simulation of experiment worlds. Every random draw is a pure
// function of (seed, experiment index), so a run's output is independent of
// how the index range is split across workers.

#include <cstdint>
#include <utility>
#include <vector>

#include "fpr/bayes.hpp"

namespace fpr::mc {

struct Tallies {
    std::uint64_t fp = 0;
    std::uint64_t tn = 0;
    std::uint64_t tp = 0;
    std::uint64_t fn = 0;
};

struct RateStdErrors {
    double r;
    double fp_among_positives;
    double fp_among_all;
};

struct SimulationReport {
    std::uint64_t k = 0;
    Tallies counts;
    std::uint64_t k_positive = 0;
    double empirical_r = 0.0;
    double empirical_fp_among_positives = 0.0;  // 0 when k_positive == 0
    double empirical_fp_among_all = 0.0;
    RateStdErrors stderr_estimates{0.0, 0.0, 0.0};
};

// A frequentist world: fraction eta of experiments have a true null, the
// rest have true mean mu_alt; each runs a one-sided level-alpha test on n
// unit-variance measurements.
struct WorldConfig {
    std::uint64_t k;
    double eta;
    double mu_alt;
    int n;
    double alpha;
    std::uint64_t seed;
};

// A world where the two-point prior holds exactly: H0 and H_mu each drawn
// with probability 1/2, positives declared at BF >= gamma, positives at or
// above the first edge binned by bf_edges.
struct BhWorldConfig {
    std::uint64_t k;
    bayes::BhPrior prior;
    double gamma;                  // > 0
    std::vector<double> bf_edges;  // positive, strictly increasing
    std::uint64_t seed;
};

// Per-bin result counts for bins [e1,e2), ..., [em, inf), plus how many in
// each bin had a true null.
struct BinHistogram {
    std::vector<double> edges;
    std::vector<std::uint64_t> counts;
    std::vector<std::uint64_t> fp_counts;
};

// Outcome of checking a report against the positivity bound at its
// empirical ratio. slack = capped bound + band - observed share; holds
// iff slack >= 0. band is a 4-standard-error allowance.
struct BoundCheck {
    bool holds;
    double slack;
    double bound;  // min(1, fp_bound(alpha, empirical_r))
    double band;
};

// workers == 0 picks the hardware concurrency. Identical config gives an
// identical report for every worker count.
SimulationReport simulate_world(const WorldConfig& cfg, unsigned workers = 0);

std::pair<SimulationReport, BinHistogram> simulate_bh(const BhWorldConfig& cfg,
                                                      unsigned workers = 0);

// Throws fpr::degenerate_error when the report has no positives.
BoundCheck verify_bound(const SimulationReport& report, double alpha);

}  // namespace fpr::mc
