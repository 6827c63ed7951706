#include "fpr/positivity.hpp"

#include <cmath>
#include <stdexcept>

#include "fpr/errors.hpp"

namespace fpr::positivity {

namespace {

void validate(const PositivityScenario& sc) {
    detail::require_arg(sc.alpha > 0.0 && sc.alpha < 1.0,
                        "positivity: alpha must lie in (0, 1)");
    detail::require_arg(sc.eta >= 0.0 && sc.eta <= 1.0, "positivity: eta must lie in [0, 1]");
    detail::require_arg(sc.beta >= 0.0 && sc.beta <= 1.0, "positivity: beta must lie in [0, 1]");
}

void validate_alpha(double alpha) {
    detail::require_domain(alpha > 0.0 && alpha < 1.0, "positivity: alpha must lie in (0, 1)");
}

}  // namespace

double fp_bound(double alpha, double r) {
    validate_alpha(alpha);
    detail::require_domain(r > 0.0 && r <= 1.0,
                           "positivity::fp_bound: positivity ratio r must be > 0 (and <= 1)");
    return alpha * (1.0 - r) / (r * (1.0 - alpha));
}

double positivity_ratio(const PositivityScenario& sc) {
    validate(sc);
    return sc.eta * sc.alpha + (1.0 - sc.eta) * (1.0 - sc.beta);
}

double fp_among_positives(const PositivityScenario& sc) {
    const double r = positivity_ratio(sc);
    if (!(r > 0.0))
        throw degenerate_error("positivity::fp_among_positives: scenario produces no positives");
    return sc.eta * sc.alpha / r;
}

CaseDecomposition decompose(const PositivityScenario& sc) {
    validate(sc);
    return {sc.eta * sc.alpha, sc.eta * (1.0 - sc.alpha),
            (1.0 - sc.eta) * (1.0 - sc.beta), (1.0 - sc.eta) * sc.beta};
}

double eta_upper_bound(double alpha, double r) {
    validate_alpha(alpha);
    detail::require_arg(r >= 0.0 && r <= 1.0, "positivity::eta_upper_bound: r must lie in [0, 1]");
    return std::min(1.0, (1.0 - r) / (1.0 - alpha));
}

double min_ratio_for_target(double alpha, double target) {
    validate_alpha(alpha);
    detail::require_domain(target > 0.0, "positivity::min_ratio_for_target: target must be > 0");
    return alpha / (alpha + target * (1.0 - alpha));
}

BoundTable bound_table(std::vector<double> alphas, std::vector<double> ratios) {
    detail::require_arg(!alphas.empty() && !ratios.empty(),
                        "positivity::bound_table: need at least one alpha and one ratio");
    BoundTable table;
    table.cells.reserve(ratios.size());
    for (double r : ratios) {
        std::vector<double> row;
        row.reserve(alphas.size());
        for (double a : alphas) row.push_back(fp_bound(a, r));
        table.cells.push_back(std::move(row));
    }
    table.alphas = std::move(alphas);
    table.ratios = std::move(ratios);
    return table;
}

std::vector<std::pair<double, double>> guidance(double alpha,
                                                const std::vector<double>& targets) {
    detail::require_arg(!targets.empty(), "positivity::guidance: need at least one target");
    std::vector<std::pair<double, double>> rows;
    rows.reserve(targets.size());
    for (double t : targets) rows.emplace_back(t, min_ratio_for_target(alpha, t));
    return rows;
}

}  // namespace fpr::positivity
