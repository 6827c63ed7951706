#pragma once

// Deterministic demonstrations of what goes wrong when the alternative
// hypothesis is manufactured from the evidence threshold itself.

#include <string>
#include <utility>
#include <vector>

namespace fpr::scenarios {

struct ScenarioReport {
    std::string scenario_id;  // "extreme-bf" | "gamma-dependence" | "pooling"
    std::vector<std::pair<std::string, double>> inputs;
    std::vector<std::pair<std::string, double>> findings;
    std::string narrative;
};

// A wildly off-prior observation still registers as overwhelming support for
// the auto-generated alternative. Reports mu, log10 BF at xbar, the
// posterior of H_mu, and |xbar - mu|.
ScenarioReport extreme_bf(double gamma, int n, double xbar);

// Two analysts with different thresholds derive different alternatives from
// the same data; reports both mu values and the xbar region where each
// simultaneously claims strong support for their own. Requires
// 1 < gamma1 < gamma2.
ScenarioReport gamma_dependence(double gamma1, double gamma2, int n);

// Pooling two identical experiments halves mu^2: the combined data supports
// a different alternative than either part did. Reports mu at n and 2n and
// their ratio sqrt(2).
ScenarioReport pooling_inconsistency(double gamma, int n);

}  // namespace fpr::scenarios
