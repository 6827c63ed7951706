#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "fpr/bayes.hpp"
#include "fpr/montecarlo.hpp"
#include "fpr/positivity.hpp"
#include "fpr/scenarios.hpp"

namespace fpr::render {

using ordered_json = nlohmann::ordered_json;

enum class OutputFormat { Text, Csv, Json, Svg };

// Accepts "text", "csv", "json", "svg"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

// Shortest representation that parses back to the same double ("inf" for
// infinities). Used by every machine-readable emitter.
std::string format_number(double v);

// Human percentage in the mixed two-significant-digit table style: one
// decimal below 10%, whole percents from there up, capped at 100%.
std::string format_percent(double fraction);

// Bound tables: text grid, full-precision CSV matrix, JSON, or an SVG heatmap.
std::string render_table(const positivity::BoundTable& table, OutputFormat fmt);

// Evidence-decomposition tables: text grid, CSV with columns
// bf_lo,bf_hi,p_lo,p_hi,prob_bin,prob_h0_given_bin, JSON, or SVG bars.
std::string render_table(const std::vector<bayes::JohnsonTableRow>& rows, OutputFormat fmt);

// Simulation report plus bound check; config lands verbatim in the output.
// No SVG form.
std::string render_simulation(const mc::SimulationReport& report, const mc::BoundCheck& check,
                              const ordered_json& config, OutputFormat fmt);

// Prior-world report with its Bayes-factor histogram. No SVG form.
std::string render_bh_simulation(const mc::SimulationReport& report,
                                 const mc::BinHistogram& hist, const ordered_json& config,
                                 OutputFormat fmt);

// Scenario reports as narrative text, name/value CSV, or JSON.
std::string render_scenario(const scenarios::ScenarioReport& report, OutputFormat fmt);

// Guidance pairs (target, smallest acceptable positivity ratio).
std::string render_guidance(double alpha, const std::vector<std::pair<double, double>>& rows,
                            OutputFormat fmt);

// Flat (name, value) output for the scalar subcommands; extras carry
// preformatted strings such as percent renderings.
std::string render_scalars(const std::vector<std::pair<std::string, double>>& values,
                           const std::vector<std::pair<std::string, std::string>>& extras,
                           OutputFormat fmt);

}  // namespace fpr::render
