#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "csv.hpp"
#include "mstat/specfun.hpp"

namespace {

using mstat::cli::json;

std::pair<int, int> parse_year_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("expected YYYY:YYYY, got '" + text + "'");
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

std::pair<double, double> parse_scan_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("expected LO:HI, got '" + text + "'");
    }
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
}

void emit(const json& j, bool table) {
    if (table) {
        std::cout << mstat::cli::render_table(j);
    } else {
        std::cout << j.dump(2) << '\n';
    }
}

struct FamilyFlags {
    std::string family;
    mstat::cli::FamilyParams params;

    void attach(CLI::App* app, bool positional_family) {
        if (positional_family) {
            app->add_option("family", family,
                            "lognormal | exponential | truncated-exponential | pareto | "
                            "uniform | power")
                ->required();
        } else {
            app->add_option("--dist", family, "distribution family")->required();
        }
        attach_params(app, "");
    }

    void attach_second(CLI::App* app) {
        app->add_option("--dist2", family, "second distribution family");
        attach_params(app, "2");
    }

    mstat::cli::FamilyParams& p() { return params; }

private:
    void attach_params(CLI::App* app, const std::string& suffix) {
        const auto opt = [app, &suffix](const char* name, std::optional<double>& target) {
            app->add_option("--" + std::string(name) + suffix, target);
        };
        opt("m", params.m);
        opt("sigma", params.sigma);
        opt("lambda", params.lambda);
        opt("mu", params.mu);
        opt("alpha", params.alpha);
        opt("beta", params.beta);
        opt("a", params.a);
        opt("b", params.b);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiplicative (geometric) statistics toolkit"};
    app.require_subcommand(1);
    bool table = false;
    bool json_mode = true;  // default output
    app.add_flag("--table", table, "human-readable table output (4 decimals)");
    app.add_flag("--json", json_mode, "JSON output (default)");

    // describe
    std::string describe_file;
    bool describe_percent = false;
    auto* describe = app.add_subcommand("describe", "multiplicative summary of a value series");
    describe->add_option("file", describe_file, "CSV with header year,value")->required();
    describe->add_flag("--percent", describe_percent, "values are percentages; divide by 100");

    // returns
    std::string returns_file;
    mstat::cli::ReturnsOptions returns_opt;
    std::string train_text;
    auto* returns = app.add_subcommand("returns", "accumulation analytics of a return series");
    returns->add_option("file", returns_file, "CSV with header year,rate")->required();
    returns->add_option("--k", returns_opt.ks, "k-interval orders (default 1,2,3)")
        ->delimiter(',');
    returns->add_option("--train", train_text, "training window YYYY:YYYY for a forecast");
    returns->add_option("--horizon", returns_opt.horizon, "forecast horizon in periods");
    returns->add_flag("--percent", returns_opt.percent, "rates are percentages");

    // trend
    std::string trend_file;
    mstat::cli::TrendOptions trend_opt;
    auto* trend = app.add_subcommand("trend", "exponential trend fit of a value series");
    trend->add_option("file", trend_file, "CSV with header year,value")->required();
    trend->add_option("--t-origin", trend_opt.t_origin, "t value of the first year (default 1)");
    trend->add_option("--bins", trend_opt.bins, "residual histogram bins (default 6)");
    trend->add_flag("--percent", trend_opt.percent, "values are percentages");

    // dist
    FamilyFlags dist_flags;
    bool numeric_check = false;
    auto* dist_cmd = app.add_subcommand("dist", "closed-form distribution parameters");
    dist_flags.attach(dist_cmd, /*positional_family=*/true);
    dist_cmd->add_flag("--numeric-check", numeric_check,
                       "also report quadrature values and the max relative deviation");

    // match
    mstat::cli::MatchOptions match_opt;
    std::string scan_text;
    auto* match = app.add_subcommand(
        "match", "exponential/Pareto pair with equal multiplicative parameters");
    match->add_option("--lambda", match_opt.lambda, "exponential rate (default 1)");
    match->add_option("--scan", scan_text, "crossing scan range LO:HI (default 1:100)");
    match->add_option("--points", match_opt.tail_points, "tail series length (default 200)");

    // mc
    mstat::cli::McOptions mc_opt;
    FamilyFlags mc_dist;
    FamilyFlags mc_dist2;
    std::string mc_mode = "unbiased";
    auto* mc = app.add_subcommand("mc", "Monte Carlo verification of the estimator theorems");
    mc->add_option("check", mc_opt.check,
                   "geo-mean-unbiased | dg-of-mean | geo-var-unbiased | scan-inequalities")
        ->required();
    mc_dist.attach(mc, /*positional_family=*/false);
    mc_dist2.attach_second(mc);
    mc->add_option("--n", mc_opt.n, "sample size per replicate (default 10)");
    mc->add_option("--reps", mc_opt.reps, "replicates (default 100000)");
    mc->add_option("--trials", mc_opt.trials, "inequality trials (default 10000)");
    mc->add_option("--sample-size", mc_opt.sample_size,
                   "per-trial sample size for scan-inequalities (default 16)");
    mc->add_option("--seed", mc_opt.seed, "RNG seed (default 0)");
    mc->add_option("--mode", mc_mode, "geo-var-unbiased estimator mode: unbiased | biased");

    // plotdata
    int figure = 0;
    mstat::cli::PlotOptions plot_opt;
    auto* plotdata = app.add_subcommand("plotdata", "CSV series for figures 1-4");
    plotdata->add_option("figure", figure, "1: Pareto means; 2: matched tails; 3-4: d(a,b)")
        ->required();
    plotdata->add_option("--min", plot_opt.min, "grid lower bound");
    plotdata->add_option("--max", plot_opt.max, "grid upper bound");
    plotdata->add_option("--points", plot_opt.points, "grid size");
    plotdata->add_option("--lambda", plot_opt.lambda, "exponential rate (figure 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*describe) {
            emit(mstat::cli::cmd_describe(describe_file, describe_percent), table);
        } else if (*returns) {
            if (!train_text.empty()) {
                returns_opt.train = parse_year_range(train_text);
            }
            emit(mstat::cli::cmd_returns(returns_file, returns_opt), table);
        } else if (*trend) {
            emit(mstat::cli::cmd_trend(trend_file, trend_opt), table);
        } else if (*dist_cmd) {
            emit(mstat::cli::cmd_dist(
                     mstat::cli::make_spec(dist_flags.family, dist_flags.p()), numeric_check),
                 table);
        } else if (*match) {
            if (!scan_text.empty()) {
                std::tie(match_opt.scan_lo, match_opt.scan_hi) = parse_scan_range(scan_text);
            }
            emit(mstat::cli::cmd_match(match_opt), table);
        } else if (*mc) {
            mc_opt.dist = mstat::cli::make_spec(mc_dist.family, mc_dist.p());
            if (!mc_dist2.family.empty()) {
                mc_opt.dist_b = mstat::cli::make_spec(mc_dist2.family, mc_dist2.p());
            }
            if (mc_mode == "biased") {
                mc_opt.mode = mstat::stats::VarianceMode::biased;
            } else if (mc_mode != "unbiased") {
                throw std::invalid_argument("--mode must be 'unbiased' or 'biased'");
            }
            const auto result = mstat::cli::cmd_mc(mc_opt);
            emit(result.output, table);
            return result.pass ? 0 : 3;
        } else if (*plotdata) {
            std::cout << mstat::cli::cmd_plotdata(figure, plot_opt);
        }
    } catch (const mstat::specfun::ConvergenceError& e) {
        std::cerr << "mstat: numeric failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "mstat: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
