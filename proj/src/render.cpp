#include "fpr/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fpr::render {

namespace {

std::string g6(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

[[noreturn]] void reject_svg() {
    throw std::invalid_argument("svg output is only available for table commands");
}

// White-to-red ramp over the capped bound value.
std::string heat_color(double v) {
    v = std::clamp(v, 0.0, 1.0);
    const int r = static_cast<int>(std::lround(255.0 - v * (255.0 - 178.0)));
    const int g = static_cast<int>(std::lround(255.0 - v * (255.0 - 34.0)));
    const int b = g;
    char buf[32];
    std::snprintf(buf, sizeof buf, "rgb(%d,%d,%d)", r, g, b);
    return buf;
}

std::string svg_open(int width, int height) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                  "font-family=\"monospace\" font-size=\"12\">\n",
                  width, height);
    return buf;
}

std::string svg_text(double x, double y, const std::string& s, const char* anchor = "middle") {
    char buf[64];
    std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"%s\">", x, y,
                  anchor);
    return std::string(buf) + s + "</text>\n";
}

std::string svg_rect(double x, double y, double w, double h, const std::string& fill) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"%s\" "
                  "stroke=\"#444\"/>\n",
                  x, y, w, h, fill.c_str());
    return buf;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "svg") return OutputFormat::Svg;
    throw std::invalid_argument("unknown output format '" + name + "' (text|csv|json|svg)");
}

std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_percent(double fraction) {
    const double pct = std::min(fraction, 1.0) * 100.0;
    char buf[32];
    if (pct >= 9.95)
        std::snprintf(buf, sizeof buf, "%.0f%%", pct);
    else
        std::snprintf(buf, sizeof buf, "%.1f%%", pct);
    return buf;
}

std::string render_table(const positivity::BoundTable& table, OutputFormat fmt) {
    if (table.alphas.empty() || table.ratios.empty() || table.cells.empty())
        throw std::invalid_argument("render_table: empty table");

    switch (fmt) {
        case OutputFormat::Text: {
            std::vector<std::string> row_labels;
            row_labels.reserve(table.ratios.size());
            std::size_t label_w = std::string("r \\ alpha").size();
            for (double r : table.ratios) {
                row_labels.push_back("r=" + g6(r));
                label_w = std::max(label_w, row_labels.back().size());
            }
            std::ostringstream out;
            out << pad_right("r \\ alpha", label_w);
            for (double a : table.alphas) out << pad_left(g6(a), 10);
            out << '\n';
            for (std::size_t i = 0; i < table.ratios.size(); ++i) {
                out << pad_right(row_labels[i], label_w);
                for (double cell : table.cells[i]) out << pad_left(format_percent(cell), 10);
                out << '\n';
            }
            return out.str();
        }
        case OutputFormat::Csv: {
            std::ostringstream out;
            out << "r";
            for (double a : table.alphas) out << ',' << format_number(a);
            out << '\n';
            for (std::size_t i = 0; i < table.ratios.size(); ++i) {
                out << format_number(table.ratios[i]);
                for (double cell : table.cells[i]) out << ',' << format_number(cell);
                out << '\n';
            }
            return out.str();
        }
        case OutputFormat::Json: {
            ordered_json j;
            j["alphas"] = table.alphas;
            j["ratios"] = table.ratios;
            j["cells"] = table.cells;
            auto& pct = j["percent"];
            for (const auto& row : table.cells) {
                std::vector<std::string> prow;
                prow.reserve(row.size());
                for (double cell : row) prow.push_back(format_percent(cell));
                pct.push_back(prow);
            }
            return j.dump(2) + "\n";
        }
        case OutputFormat::Svg: {
            const double cw = 92, ch = 34, left = 96, top = 42;
            const int width = static_cast<int>(left + cw * table.alphas.size() + 16);
            const int height = static_cast<int>(top + ch * table.ratios.size() + 16);
            std::string svg = svg_open(width, height);
            svg += svg_text(left / 2.0, top - 16, "r \\ alpha");
            for (std::size_t c = 0; c < table.alphas.size(); ++c)
                svg += svg_text(left + cw * (c + 0.5), top - 16, "alpha=" + g6(table.alphas[c]));
            for (std::size_t i = 0; i < table.ratios.size(); ++i) {
                svg += svg_text(left - 8, top + ch * (i + 0.65), "r=" + g6(table.ratios[i]),
                                "end");
                for (std::size_t c = 0; c < table.cells[i].size(); ++c) {
                    const double v = table.cells[i][c];
                    svg += svg_rect(left + cw * c, top + ch * i, cw, ch, heat_color(v));
                    svg += svg_text(left + cw * (c + 0.5), top + ch * (i + 0.65),
                                    format_percent(v));
                }
            }
            return svg + "</svg>\n";
        }
    }
    throw std::logic_error("render_table: unreachable");
}

std::string render_table(const std::vector<bayes::JohnsonTableRow>& rows, OutputFormat fmt) {
    if (rows.empty()) throw std::invalid_argument("render_table: empty table");

    switch (fmt) {
        case OutputFormat::Text: {
            std::ostringstream out;
            out << pad_left("bf_lo", 10) << pad_left("bf_hi", 10) << pad_left("p_lo", 12)
                << pad_left("p_hi", 12) << pad_left("P[bin]", 12) << pad_left("P[H0|bin]", 12)
                << '\n';
            for (const auto& row : rows) {
                out << pad_left(g6(row.interval.lo), 10) << pad_left(g6(row.interval.hi), 10)
                    << pad_left(g6(row.p_lo), 12) << pad_left(g6(row.p_hi), 12)
                    << pad_left(g6(row.prob_bin), 12) << pad_left(g6(row.prob_h0_given_bin), 12)
                    << '\n';
            }
            return out.str();
        }
        case OutputFormat::Csv: {
            std::ostringstream out;
            out << "bf_lo,bf_hi,p_lo,p_hi,prob_bin,prob_h0_given_bin\n";
            for (const auto& row : rows) {
                out << format_number(row.interval.lo) << ',' << format_number(row.interval.hi)
                    << ',' << format_number(row.p_lo) << ',' << format_number(row.p_hi) << ','
                    << format_number(row.prob_bin) << ',' << format_number(row.prob_h0_given_bin)
                    << '\n';
            }
            return out.str();
        }
        case OutputFormat::Json: {
            ordered_json j = ordered_json::array();
            for (const auto& row : rows) {
                j.push_back({{"bf_lo", row.interval.lo},
                             {"bf_hi", row.interval.hi},
                             {"p_lo", row.p_lo},
                             {"p_hi", row.p_hi},
                             {"prob_bin", row.prob_bin},
                             {"prob_h0_given_bin", row.prob_h0_given_bin}});
            }
            return j.dump(2) + "\n";
        }
        case OutputFormat::Svg: {
            double vmax = 0.0;
            for (const auto& row : rows)
                vmax = std::max({vmax, row.prob_bin, row.prob_h0_given_bin});
            const double gw = 110, bar_w = 38, plot_h = 200, left = 56, top = 46;
            const int width = static_cast<int>(left + gw * rows.size() + 16);
            const int height = static_cast<int>(top + plot_h + 54);
            std::string svg = svg_open(width, height);
            svg += svg_rect(left, top - 30, 12, 12, "rgb(70,130,180)");
            svg += svg_text(left + 20, top - 20, "P[bin]", "start");
            svg += svg_rect(left + 110, top - 30, 12, 12, "rgb(178,34,34)");
            svg += svg_text(left + 130, top - 20, "P[H0|bin]", "start");
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const double x0 = left + gw * i + 10;
                const double h1 = vmax > 0 ? rows[i].prob_bin / vmax * plot_h : 0;
                const double h2 = vmax > 0 ? rows[i].prob_h0_given_bin / vmax * plot_h : 0;
                svg += svg_rect(x0, top + plot_h - h1, bar_w, h1, "rgb(70,130,180)");
                svg += svg_rect(x0 + bar_w + 6, top + plot_h - h2, bar_w, h2, "rgb(178,34,34)");
                svg += svg_text(x0 + bar_w + 3, top + plot_h + 16,
                                "[" + g6(rows[i].interval.lo) + "," + g6(rows[i].interval.hi) +
                                    ")");
                svg += svg_text(x0 + bar_w + 3, top + plot_h + 32,
                                "p=" + g6(rows[i].p_lo), "middle");
            }
            return svg + "</svg>\n";
        }
    }
    throw std::logic_error("render_table: unreachable");
}

namespace {

ordered_json report_json(const mc::SimulationReport& report) {
    ordered_json j;
    j["tallies"] = {{"fp", report.counts.fp},
                    {"tn", report.counts.tn},
                    {"tp", report.counts.tp},
                    {"fn", report.counts.fn}};
    j["rates"] = {{"r", report.empirical_r},
                  {"fp_among_positives", report.empirical_fp_among_positives},
                  {"fp_among_all", report.empirical_fp_among_all}};
    j["stderr"] = {{"r", report.stderr_estimates.r},
                   {"fp_among_positives", report.stderr_estimates.fp_among_positives},
                   {"fp_among_all", report.stderr_estimates.fp_among_all}};
    return j;
}

void report_text(std::ostringstream& out, const mc::SimulationReport& report) {
    out << "experiments          " << report.k << '\n'
        << "false positives      " << report.counts.fp << '\n'
        << "true negatives       " << report.counts.tn << '\n'
        << "true positives       " << report.counts.tp << '\n'
        << "false negatives      " << report.counts.fn << '\n'
        << "positives            " << report.k_positive << "  (r = " << g6(report.empirical_r)
        << ", se " << g6(report.stderr_estimates.r) << ")\n"
        << "fp among positives   " << g6(report.empirical_fp_among_positives) << "  (se "
        << g6(report.stderr_estimates.fp_among_positives) << ")\n"
        << "fp among all         " << g6(report.empirical_fp_among_all) << "  (se "
        << g6(report.stderr_estimates.fp_among_all) << ")\n";
}

}  // namespace

std::string render_simulation(const mc::SimulationReport& report, const mc::BoundCheck& check,
                              const ordered_json& config, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Text: {
            std::ostringstream out;
            report_text(out, report);
            out << "bound at observed r  " << g6(check.bound) << "  -> "
                << (check.holds ? "holds" : "VIOLATED") << " (slack " << g6(check.slack)
                << ", band " << g6(check.band) << ")\n";
            return out.str();
        }
        case OutputFormat::Csv: {
            std::ostringstream head, row;
            bool first = true;
            for (const auto& [key, value] : config.items()) {
                head << (first ? "" : ",") << key;
                row << (first ? "" : ",")
                    << (value.is_string() ? value.get<std::string>() : value.dump());
                first = false;
            }
            head << ",fp,tn,tp,fn,k_positive,r,fp_among_positives,fp_among_all"
                 << ",se_r,se_fp_among_positives,se_fp_among_all,bound,holds,slack\n";
            row << ',' << report.counts.fp << ',' << report.counts.tn << ',' << report.counts.tp
                << ',' << report.counts.fn << ',' << report.k_positive << ','
                << format_number(report.empirical_r) << ','
                << format_number(report.empirical_fp_among_positives) << ','
                << format_number(report.empirical_fp_among_all) << ','
                << format_number(report.stderr_estimates.r) << ','
                << format_number(report.stderr_estimates.fp_among_positives) << ','
                << format_number(report.stderr_estimates.fp_among_all) << ','
                << format_number(check.bound) << ',' << (check.holds ? "true" : "false") << ','
                << format_number(check.slack) << '\n';
            return head.str() + row.str();
        }
        case OutputFormat::Json: {
            ordered_json j;
            j["config"] = config;
            const ordered_json rep = report_json(report);
            j["tallies"] = rep["tallies"];
            j["rates"] = rep["rates"];
            j["stderr"] = rep["stderr"];
            j["bound"] = {{"value", check.bound}, {"holds", check.holds}, {"slack", check.slack}};
            return j.dump(2) + "\n";
        }
        case OutputFormat::Svg:
            reject_svg();
    }
    throw std::logic_error("render_simulation: unreachable");
}

std::string render_bh_simulation(const mc::SimulationReport& report,
                                 const mc::BinHistogram& hist, const ordered_json& config,
                                 OutputFormat fmt) {
    const double kd = static_cast<double>(report.k);
    switch (fmt) {
        case OutputFormat::Text: {
            std::ostringstream out;
            report_text(out, report);
            out << '\n'
                << pad_left("bf_lo", 10) << pad_left("bf_hi", 10) << pad_left("count", 10)
                << pad_left("fp", 8) << pad_left("fraction", 12) << pad_left("fp_share", 12)
                << '\n';
            for (std::size_t i = 0; i < hist.edges.size(); ++i) {
                const double hi = (i + 1 < hist.edges.size())
                                      ? hist.edges[i + 1]
                                      : std::numeric_limits<double>::infinity();
                const double share =
                    hist.counts[i] ? static_cast<double>(hist.fp_counts[i]) / hist.counts[i] : 0.0;
                out << pad_left(g6(hist.edges[i]), 10) << pad_left(g6(hi), 10)
                    << pad_left(std::to_string(hist.counts[i]), 10)
                    << pad_left(std::to_string(hist.fp_counts[i]), 8)
                    << pad_left(g6(hist.counts[i] / kd), 12) << pad_left(g6(share), 12) << '\n';
            }
            return out.str();
        }
        case OutputFormat::Csv: {
            std::ostringstream out;
            out << "bf_lo,bf_hi,count,fp_count,fraction,fp_share\n";
            for (std::size_t i = 0; i < hist.edges.size(); ++i) {
                const double hi = (i + 1 < hist.edges.size())
                                      ? hist.edges[i + 1]
                                      : std::numeric_limits<double>::infinity();
                const double share =
                    hist.counts[i] ? static_cast<double>(hist.fp_counts[i]) / hist.counts[i] : 0.0;
                out << format_number(hist.edges[i]) << ',' << format_number(hi) << ','
                    << hist.counts[i] << ',' << hist.fp_counts[i] << ','
                    << format_number(hist.counts[i] / kd) << ',' << format_number(share) << '\n';
            }
            return out.str();
        }
        case OutputFormat::Json: {
            ordered_json j;
            j["config"] = config;
            const ordered_json rep = report_json(report);
            j["tallies"] = rep["tallies"];
            j["rates"] = rep["rates"];
            j["stderr"] = rep["stderr"];
            auto& bins = j["bins"];
            bins = ordered_json::array();
            for (std::size_t i = 0; i < hist.edges.size(); ++i) {
                const double hi = (i + 1 < hist.edges.size())
                                      ? hist.edges[i + 1]
                                      : std::numeric_limits<double>::infinity();
                const double share =
                    hist.counts[i] ? static_cast<double>(hist.fp_counts[i]) / hist.counts[i] : 0.0;
                bins.push_back({{"bf_lo", hist.edges[i]},
                                {"bf_hi", hi},
                                {"count", hist.counts[i]},
                                {"fp_count", hist.fp_counts[i]},
                                {"fraction", hist.counts[i] / kd},
                                {"fp_share", share}});
            }
            return j.dump(2) + "\n";
        }
        case OutputFormat::Svg:
            reject_svg();
    }
    throw std::logic_error("render_bh_simulation: unreachable");
}

std::string render_scenario(const scenarios::ScenarioReport& report, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Text: {
            std::ostringstream out;
            out << "scenario: " << report.scenario_id << '\n';
            for (const auto& [name, value] : report.inputs)
                out << "  " << pad_right(name, 24) << g6(value) << '\n';
            out << "findings:\n";
            for (const auto& [name, value] : report.findings)
                out << "  " << pad_right(name, 24) << g6(value) << '\n';
            out << report.narrative << '\n';
            return out.str();
        }
        case OutputFormat::Csv: {
            std::ostringstream out;
            out << "name,value\n";
            for (const auto& [name, value] : report.inputs)
                out << name << ',' << format_number(value) << '\n';
            for (const auto& [name, value] : report.findings)
                out << name << ',' << format_number(value) << '\n';
            return out.str();
        }
        case OutputFormat::Json: {
            ordered_json j;
            j["scenario"] = report.scenario_id;
            ordered_json inputs, findings;
            for (const auto& [name, value] : report.inputs) inputs[name] = value;
            for (const auto& [name, value] : report.findings) findings[name] = value;
            j["inputs"] = inputs;
            j["findings"] = findings;
            j["narrative"] = report.narrative;
            return j.dump(2) + "\n";
        }
        case OutputFormat::Svg:
            reject_svg();
    }
    throw std::logic_error("render_scenario: unreachable");
}

std::string render_guidance(double alpha, const std::vector<std::pair<double, double>>& rows,
                            OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Text: {
            std::ostringstream out;
            out << "significance level alpha = " << g6(alpha) << '\n';
            for (const auto& [target, ratio] : rows) {
                out << "  false positives among positives <= " << pad_right(format_percent(target), 7)
                    << " requires r >= " << g6(ratio) << '\n';
            }
            return out.str();
        }
        case OutputFormat::Csv: {
            std::ostringstream out;
            out << "target,min_ratio\n";
            for (const auto& [target, ratio] : rows)
                out << format_number(target) << ',' << format_number(ratio) << '\n';
            return out.str();
        }
        case OutputFormat::Json: {
            ordered_json j;
            j["alpha"] = alpha;
            auto& guide = j["guide"];
            guide = ordered_json::array();
            for (const auto& [target, ratio] : rows)
                guide.push_back({{"target", target}, {"min_ratio", ratio}});
            return j.dump(2) + "\n";
        }
        case OutputFormat::Svg:
            reject_svg();
    }
    throw std::logic_error("render_guidance: unreachable");
}

std::string render_scalars(const std::vector<std::pair<std::string, double>>& values,
                           const std::vector<std::pair<std::string, std::string>>& extras,
                           OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Text: {
            std::ostringstream out;
            for (const auto& [name, value] : values)
                out << name << " = " << format_number(value) << '\n';
            for (const auto& [name, value] : extras) out << name << " = " << value << '\n';
            return out.str();
        }
        case OutputFormat::Csv: {
            std::ostringstream head, row;
            bool first = true;
            for (const auto& [name, value] : values) {
                head << (first ? "" : ",") << name;
                row << (first ? "" : ",") << format_number(value);
                first = false;
            }
            for (const auto& [name, value] : extras) {
                head << (first ? "" : ",") << name;
                row << (first ? "" : ",") << value;
                first = false;
            }
            return head.str() + "\n" + row.str() + "\n";
        }
        case OutputFormat::Json: {
            ordered_json j;
            for (const auto& [name, value] : values) j[name] = value;
            for (const auto& [name, value] : extras) j[name] = value;
            return j.dump(2) + "\n";
        }
        case OutputFormat::Svg:
            reject_svg();
    }
    throw std::logic_error("render_scalars: unreachable");
}

}  // namespace fpr::render
