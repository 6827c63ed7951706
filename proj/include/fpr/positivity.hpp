#pragma once

// The positivity-ratio bound: among results produced at significance level
// alpha with a fraction r of them positive, at most alpha*(1-r)/(r*(1-alpha))
// of the positive ones can be false positives.

#include <utility>
#include <vector>

namespace fpr::positivity {

// A world of experiments: eta of them have a true null, and among the
// false-null cases a fraction beta comes out negative.
struct PositivityScenario {
    double alpha;  // in (0, 1)
    double eta;    // in [0, 1]
    double beta;   // in [0, 1]
};

// The four cell proportions; they sum to 1.
struct CaseDecomposition {
    double false_positive;  // eta * alpha
    double true_negative;   // eta * (1 - alpha)
    double true_positive;   // (1 - eta) * (1 - beta)
    double false_negative;  // (1 - eta) * beta
};

// cells[i][j] = fp_bound(alphas[j], ratios[i]), raw (uncapped).
struct BoundTable {
    std::vector<double> alphas;
    std::vector<double> ratios;
    std::vector<std::vector<double>> cells;
};

// Raw bound alpha*(1-r)/(r*(1-alpha)); may exceed 1, display caps at 100%.
// Throws std::domain_error for r <= 0 (no positive results, nothing to bound).
double fp_bound(double alpha, double r);

// r = eta*alpha + (1-eta)*(1-beta), the positive-column mass of decompose().
double positivity_ratio(const PositivityScenario& sc);

// eta*alpha / r: the realized share of false positives among positives.
// Throws fpr::degenerate_error when the scenario yields no positives.
double fp_among_positives(const PositivityScenario& sc);

CaseDecomposition decompose(const PositivityScenario& sc);

// min(1, (1-r)/(1-alpha)): the largest true-null fraction consistent with
// observing positivity ratio r.
double eta_upper_bound(double alpha, double r);

// Smallest r with fp_bound(alpha, r) <= target: alpha/(alpha + target*(1-alpha)).
double min_ratio_for_target(double alpha, double target);

BoundTable bound_table(std::vector<double> alphas, std::vector<double> ratios);

// (target, min_ratio_for_target) pairs, the flowchart behind the bound.
std::vector<std::pair<double, double>> guidance(double alpha, const std::vector<double>& targets);

}  // namespace fpr::positivity
