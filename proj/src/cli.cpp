#include "fpr/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fpr/bayes.hpp"
#include "fpr/errors.hpp"
#include "fpr/montecarlo.hpp"
#include "fpr/positivity.hpp"
#include "fpr/render.hpp"
#include "fpr/scenarios.hpp"
#include "fpr/ztest.hpp"

namespace fpr::cli {

namespace {

using render::OutputFormat;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitArgError = 2;
constexpr int kExitNumericError = 3;

const std::vector<double> kDefaultEdges{3.87, 5.44, 7.92, 12.31, 21.77};

struct CommonOpts {
    std::string format = "text";
    std::string out_path;
    std::string config_path;
};

void add_common(CLI::App* cmd, CommonOpts& common) {
    cmd->add_option("--format", common.format, "Output format: text|csv|json|svg")
        ->capture_default_str();
    cmd->add_option("--out", common.out_path, "Write the result to this file instead of stdout");
    cmd->add_option("--config", common.config_path,
                    "JSON file with default values for this command's options");
}

int emit(const std::string& payload, const CommonOpts& common, std::ostream& out,
         std::ostream& err) {
    if (common.out_path.empty()) {
        out << payload;
        return kExitOk;
    }
    std::ofstream file(common.out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << common.out_path << "'\n";
        return kExitArgError;
    }
    file << payload;
    return file ? kExitOk : kExitArgError;
}

std::string json_scalar_to_token(const ordered_json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_array()) {
        std::string joined;
        for (const auto& item : value) {
            if (!joined.empty()) joined += ',';
            joined += item.is_string() ? item.get<std::string>()
                                       : render::format_number(item.get<double>());
        }
        return joined;
    }
    if (value.is_number_float()) return render::format_number(value.get<double>());
    return value.dump();  // integers, booleans
}

// Locates the leaf subcommand named on the command line (descending once for
// scenario's nested commands) so config keys can be checked against its
// option list.
CLI::App* find_leaf(CLI::App& app, const std::vector<std::string>& args) {
    CLI::App* current = &app;
    for (const std::string& token : args) {
        if (!token.empty() && token.front() == '-') continue;
        CLI::App* next = current->get_subcommand_no_throw(token);
        if (next == nullptr) break;
        current = next;
        if (current->get_subcommands({}).empty()) break;
    }
    return current == &app ? nullptr : current;
}

bool option_present(const std::vector<std::string>& args, const std::string& long_name) {
    const std::string eq_form = long_name + "=";
    for (const std::string& token : args) {
        if (token == long_name) return true;
        if (token.rfind(eq_form, 0) == 0) return true;
    }
    return false;
}

// Applies config-file values as defaults: every key that names an option of
// the chosen subcommand and is absent from the command line gets appended as
// an ordinary flag before parsing.
void apply_config_defaults(CLI::App& app, std::vector<std::string>& args, std::ostream& err) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return;

    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open config file '" + path + "'");
    ordered_json cfg;
    try {
        file >> cfg;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!cfg.is_object()) throw std::invalid_argument("config file must hold a JSON object");

    CLI::App* leaf = find_leaf(app, args);
    if (leaf == nullptr) return;  // no subcommand yet; parse will report it

    for (const auto& [key, value] : cfg.items()) {
        const std::string long_name = "--" + key;
        if (leaf->get_option_no_throw(long_name) == nullptr) {
            err << "note: config key '" << key << "' does not apply to '"
                << leaf->get_name() << "'; ignored\n";
            continue;
        }
        if (option_present(args, long_name)) continue;
        args.push_back(long_name);
        args.push_back(json_scalar_to_token(value));
    }
}

ordered_json inf_safe(double v) {
    // JSON has no infinity literal; the table emitters only ever feed finite
    // config values, but guard anyway.
    if (std::isfinite(v)) return v;
    return render::format_number(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"false-positive rates under significance testing and positivity bias", "fpr"};
    app.require_subcommand(1);

    // ---- positivity -------------------------------------------------------
    struct {
        double alpha = 0.05, r = 0.5;
        CommonOpts common;
    } bound_opts;
    CLI::App* bound = app.add_subcommand(
        "bound", "Maximal share of false positives among positive results");
    bound->add_option("--alpha", bound_opts.alpha, "Significance level")->required();
    bound->add_option("--r", bound_opts.r, "Positivity ratio")->required();
    add_common(bound, bound_opts.common);

    struct {
        std::vector<double> alphas{0.1, 0.05, 0.01, 0.005};
        std::vector<double> ratios{0.5, 0.2, 0.1};
        CommonOpts common;
    } table_opts;
    CLI::App* table = app.add_subcommand("table", "Bound table over alpha x positivity ratio");
    table->add_option("--alphas", table_opts.alphas, "Significance levels (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    table->add_option("--ratios", table_opts.ratios, "Positivity ratios (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    add_common(table, table_opts.common);

    struct {
        double alpha = 0.01, target = 0.05;
        CommonOpts common;
    } minratio_opts;
    CLI::App* minratio = app.add_subcommand(
        "min-ratio", "Smallest positivity ratio keeping the bound at or below a target");
    minratio->add_option("--alpha", minratio_opts.alpha, "Significance level")->required();
    minratio->add_option("--target", minratio_opts.target, "Bound target")->required();
    add_common(minratio, minratio_opts.common);

    struct {
        double alpha = 0.05;
        std::vector<double> targets{0.05, 0.10, 0.21};
        CommonOpts common;
    } guide_opts;
    CLI::App* guide = app.add_subcommand(
        "guide", "Decision guide: bound targets and the positivity ratios they require");
    guide->add_option("--alpha", guide_opts.alpha, "Significance level")->capture_default_str();
    guide->add_option("--targets", guide_opts.targets, "Bound targets (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    add_common(guide, guide_opts.common);

    // ---- bayes ------------------------------------------------------------
    struct {
        double alpha = 0.05;
        int n = 100;
        std::vector<double> edges = kDefaultEdges;
        CommonOpts common;
    } johnson_opts;
    CLI::App* johnson = app.add_subcommand(
        "johnson", "Bayes-factor bins with p-values, masses and conditional H0 shares");
    johnson->add_option("--alpha", johnson_opts.alpha, "Significance level")
        ->capture_default_str();
    johnson->add_option("--n", johnson_opts.n, "Measurements per experiment")
        ->capture_default_str();
    johnson->add_option("--edges", johnson_opts.edges, "Bayes-factor bin edges")
        ->delimiter(',')
        ->capture_default_str();
    add_common(johnson, johnson_opts.common);

    // ---- ztest ------------------------------------------------------------
    struct {
        int n = 1;
        double xbar = 0.0;
        CommonOpts common;
    } pvalue_opts;
    CLI::App* pvalue = app.add_subcommand("pvalue", "One-sided p-value of an empirical mean");
    pvalue->add_option("--n", pvalue_opts.n, "Measurement count")->required();
    pvalue->add_option("--xbar", pvalue_opts.xbar, "Empirical mean")->required();
    add_common(pvalue, pvalue_opts.common);

    struct {
        double alpha = 0.05;
        int n = 1;
        CommonOpts common;
    } threshold_opts;
    CLI::App* threshold = app.add_subcommand("threshold", "Rejection threshold for the mean");
    threshold->add_option("--alpha", threshold_opts.alpha, "Significance level")->required();
    threshold->add_option("--n", threshold_opts.n, "Measurement count")->required();
    add_common(threshold, threshold_opts.common);

    struct {
        int n = 1;
        double xbar = 0.0, level = 0.95;
        CommonOpts common;
    } ci_opts;
    CLI::App* ci = app.add_subcommand("ci", "Confidence interval for the mean");
    ci->add_option("--n", ci_opts.n, "Measurement count")->required();
    ci->add_option("--xbar", ci_opts.xbar, "Empirical mean")->required();
    ci->add_option("--level", ci_opts.level, "Confidence level")->capture_default_str();
    add_common(ci, ci_opts.common);

    // ---- montecarlo -------------------------------------------------------
    struct {
        std::uint64_t k = 1000000;
        double eta = 0.5, mu = 0.5, alpha = 0.05;
        int n = 100;
        std::uint64_t seed = 0;
        unsigned workers = 0;
        CommonOpts common;
    } sim_opts;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Simulate a world of level-alpha experiments and check the bound");
    simulate->add_option("--k", sim_opts.k, "Number of experiments")->capture_default_str();
    simulate->add_option("--eta", sim_opts.eta, "Fraction of experiments with a true null")
        ->required();
    simulate->add_option("--mu", sim_opts.mu, "True mean when the null is false")->required();
    simulate->add_option("--n", sim_opts.n, "Measurements per experiment")->required();
    simulate->add_option("--alpha", sim_opts.alpha, "Significance level")->required();
    simulate->add_option("--seed", sim_opts.seed, "Random seed")->capture_default_str();
    simulate->add_option("--workers", sim_opts.workers, "Worker threads (0 = hardware)")
        ->capture_default_str();
    add_common(simulate, sim_opts.common);

    struct {
        std::uint64_t k = 1000000;
        double gamma = 3.87;
        int n = 100;
        std::vector<double> edges = kDefaultEdges;
        std::uint64_t seed = 0;
        unsigned workers = 0;
        CommonOpts common;
    } simbh_opts;
    CLI::App* simulate_bh = app.add_subcommand(
        "simulate-bh",
        "Simulate experiments under the two-point prior with the threshold-derived mu");
    simulate_bh->add_option("--k", simbh_opts.k, "Number of experiments")->capture_default_str();
    simulate_bh->add_option("--gamma", simbh_opts.gamma, "Evidence threshold")
        ->capture_default_str();
    simulate_bh->add_option("--n", simbh_opts.n, "Measurements per experiment")
        ->capture_default_str();
    simulate_bh->add_option("--edges", simbh_opts.edges, "Bayes-factor bin edges")
        ->delimiter(',')
        ->capture_default_str();
    simulate_bh->add_option("--seed", simbh_opts.seed, "Random seed")->capture_default_str();
    simulate_bh->add_option("--workers", simbh_opts.workers, "Worker threads (0 = hardware)")
        ->capture_default_str();
    add_common(simulate_bh, simbh_opts.common);

    // ---- scenarios --------------------------------------------------------
    CLI::App* scenario =
        app.add_subcommand("scenario", "Incoherence demonstrations for threshold-derived priors");
    scenario->require_subcommand(1);

    struct {
        double gamma = 3.87, xbar = 100.0;
        int n = 100;
        CommonOpts common;
    } extreme_opts;
    CLI::App* extreme = scenario->add_subcommand(
        "extreme-bf", "Astronomical Bayes factor for an observation nowhere near mu");
    extreme->add_option("--gamma", extreme_opts.gamma, "Evidence threshold")
        ->capture_default_str();
    extreme->add_option("--n", extreme_opts.n, "Measurements per experiment")
        ->capture_default_str();
    extreme->add_option("--xbar", extreme_opts.xbar, "Observed empirical mean")
        ->capture_default_str();
    add_common(extreme, extreme_opts.common);

    struct {
        double gamma1 = 3.87, gamma2 = 20.0;
        int n = 100;
        CommonOpts common;
    } gammadep_opts;
    CLI::App* gammadep = scenario->add_subcommand(
        "gamma-dependence", "Different thresholds imply different alternative hypotheses");
    gammadep->add_option("--gamma1", gammadep_opts.gamma1, "First analyst's threshold")
        ->capture_default_str();
    gammadep->add_option("--gamma2", gammadep_opts.gamma2, "Second analyst's threshold")
        ->capture_default_str();
    gammadep->add_option("--n", gammadep_opts.n, "Measurements per experiment")
        ->capture_default_str();
    add_common(gammadep, gammadep_opts.common);

    struct {
        double gamma = 3.87;
        int n = 100;
        CommonOpts common;
    } pooling_opts;
    CLI::App* pooling = scenario->add_subcommand(
        "pooling", "Pooling identical experiments changes the supported alternative");
    pooling->add_option("--gamma", pooling_opts.gamma, "Evidence threshold")
        ->capture_default_str();
    pooling->add_option("--n", pooling_opts.n, "Measurements per experiment")
        ->capture_default_str();
    add_common(pooling, pooling_opts.common);

    // ---- parse ------------------------------------------------------------
    try {
        std::vector<std::string> argv = args;
        apply_config_defaults(app, argv, err);
        std::reverse(argv.begin(), argv.end());  // CLI11 consumes a reversed vector
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitArgError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitArgError;
    }

    // ---- dispatch ---------------------------------------------------------
    try {
        if (*bound) {
            const double raw = positivity::fp_bound(bound_opts.alpha, bound_opts.r);
            return emit(render::render_scalars(
                            {{"alpha", bound_opts.alpha},
                             {"r", bound_opts.r},
                             {"bound_raw", raw},
                             {"bound_capped", std::min(1.0, raw)}},
                            {{"percent", render::format_percent(raw)}},
                            render::parse_format(bound_opts.common.format)),
                        bound_opts.common, out, err);
        }
        if (*table) {
            const auto t = positivity::bound_table(table_opts.alphas, table_opts.ratios);
            return emit(render::render_table(t, render::parse_format(table_opts.common.format)),
                        table_opts.common, out, err);
        }
        if (*minratio) {
            const double r =
                positivity::min_ratio_for_target(minratio_opts.alpha, minratio_opts.target);
            return emit(render::render_scalars(
                            {{"alpha", minratio_opts.alpha},
                             {"target", minratio_opts.target},
                             {"min_ratio", r}},
                            {}, render::parse_format(minratio_opts.common.format)),
                        minratio_opts.common, out, err);
        }
        if (*guide) {
            const auto rows = positivity::guidance(guide_opts.alpha, guide_opts.targets);
            return emit(render::render_guidance(guide_opts.alpha, rows,
                                                render::parse_format(guide_opts.common.format)),
                        guide_opts.common, out, err);
        }
        if (*johnson) {
            const auto rows =
                bayes::johnson_table(johnson_opts.alpha, johnson_opts.n, johnson_opts.edges);
            return emit(
                render::render_table(rows, render::parse_format(johnson_opts.common.format)),
                johnson_opts.common, out, err);
        }
        if (*pvalue) {
            const double p = ztest::p_value({pvalue_opts.n, pvalue_opts.xbar});
            return emit(render::render_scalars({{"n", static_cast<double>(pvalue_opts.n)},
                                                {"xbar", pvalue_opts.xbar},
                                                {"p_value", p}},
                                               {},
                                               render::parse_format(pvalue_opts.common.format)),
                        pvalue_opts.common, out, err);
        }
        if (*threshold) {
            const double t =
                ztest::rejection_threshold({threshold_opts.alpha, threshold_opts.n});
            return emit(
                render::render_scalars({{"alpha", threshold_opts.alpha},
                                        {"n", static_cast<double>(threshold_opts.n)},
                                        {"threshold", t}},
                                       {}, render::parse_format(threshold_opts.common.format)),
                threshold_opts.common, out, err);
        }
        if (*ci) {
            const auto [lo, hi] =
                ztest::confidence_interval({ci_opts.n, ci_opts.xbar}, ci_opts.level);
            return emit(render::render_scalars({{"n", static_cast<double>(ci_opts.n)},
                                                {"xbar", ci_opts.xbar},
                                                {"level", ci_opts.level},
                                                {"lo", lo},
                                                {"hi", hi}},
                                               {}, render::parse_format(ci_opts.common.format)),
                        ci_opts.common, out, err);
        }
        if (*simulate) {
            const mc::WorldConfig cfg{sim_opts.k, sim_opts.eta,   sim_opts.mu,
                                      sim_opts.n, sim_opts.alpha, sim_opts.seed};
            const auto report = mc::simulate_world(cfg, sim_opts.workers);
            const auto check = mc::verify_bound(report, cfg.alpha);
            ordered_json config;
            config["k"] = cfg.k;
            config["eta"] = cfg.eta;
            config["mu"] = cfg.mu_alt;
            config["n"] = cfg.n;
            config["alpha"] = cfg.alpha;
            config["seed"] = cfg.seed;
            return emit(render::render_simulation(report, check, config,
                                                  render::parse_format(sim_opts.common.format)),
                        sim_opts.common, out, err);
        }
        if (*simulate_bh) {
            const bayes::BhPrior prior{bayes::umpbt_mu(simbh_opts.gamma, simbh_opts.n),
                                       simbh_opts.n};
            const mc::BhWorldConfig cfg{simbh_opts.k, prior, simbh_opts.gamma, simbh_opts.edges,
                                        simbh_opts.seed};
            const auto [report, hist] = mc::simulate_bh(cfg, simbh_opts.workers);
            ordered_json config;
            config["k"] = cfg.k;
            config["gamma"] = cfg.gamma;
            config["mu"] = prior.mu;
            config["n"] = prior.n;
            config["seed"] = cfg.seed;
            config["edges"] = ordered_json::array();
            for (double e : cfg.bf_edges) config["edges"].push_back(inf_safe(e));
            return emit(
                render::render_bh_simulation(report, hist, config,
                                             render::parse_format(simbh_opts.common.format)),
                simbh_opts.common, out, err);
        }
        if (*scenario) {
            scenarios::ScenarioReport report;
            const CommonOpts* common = nullptr;
            if (*extreme) {
                report = scenarios::extreme_bf(extreme_opts.gamma, extreme_opts.n,
                                               extreme_opts.xbar);
                common = &extreme_opts.common;
            } else if (*gammadep) {
                report = scenarios::gamma_dependence(gammadep_opts.gamma1, gammadep_opts.gamma2,
                                                     gammadep_opts.n);
                common = &gammadep_opts.common;
            } else {
                report = scenarios::pooling_inconsistency(pooling_opts.gamma, pooling_opts.n);
                common = &pooling_opts.common;
            }
            return emit(render::render_scenario(report, render::parse_format(common->format)),
                        *common, out, err);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitArgError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitArgError;
    } catch (const degenerate_error& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumericError;
    } catch (const std::exception& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumericError;
    }

    err << "error: no subcommand selected\n";
    return kExitArgError;
}

}  // namespace fpr::cli
