#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "csv.hpp"
#include "mstat/finance.hpp"
#include "mstat/mc.hpp"
#include "mstat/regress.hpp"
#include "mstat/specfun.hpp"

namespace mstat::cli {

namespace {

double require(const std::optional<double>& v, const char* family, const char* name) {
    if (!v) {
        throw std::invalid_argument(std::string(family) + ": missing required parameter --" +
                                    name);
    }
    return *v;
}

json dist_to_json(const dist::DistributionSpec& spec) {
    json j;
    j["family"] = dist::family_name(spec);
    std::visit(
        [&j](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, dist::Lognormal>) {
                j["m"] = f.m;
                j["sigma"] = f.sigma;
            } else if constexpr (std::is_same_v<T, dist::Exponential>) {
                j["lambda"] = f.lambda;
            } else if constexpr (std::is_same_v<T, dist::TruncatedExponential>) {
                j["lambda"] = f.lambda;
                j["mu"] = f.mu;
            } else if constexpr (std::is_same_v<T, dist::Pareto>) {
                j["alpha"] = f.alpha;
                j["beta"] = f.beta;
            } else if constexpr (std::is_same_v<T, dist::Uniform>) {
                j["a"] = f.a;
                j["b"] = f.b;
            } else {
                j["alpha"] = f.alpha;
                j["b"] = f.b;
            }
        },
        spec);
    return j;
}

json optional_to_json(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

std::string format_csv_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

dist::DistributionSpec make_spec(const std::string& family, const FamilyParams& p) {
    dist::DistributionSpec spec;
    if (family == "lognormal") {
        spec = dist::Lognormal{require(p.m, "lognormal", "m"),
                               require(p.sigma, "lognormal", "sigma")};
    } else if (family == "exponential") {
        spec = dist::Exponential{require(p.lambda, "exponential", "lambda")};
    } else if (family == "truncated-exponential") {
        spec = dist::TruncatedExponential{require(p.lambda, "truncated-exponential", "lambda"),
                                          require(p.mu, "truncated-exponential", "mu")};
    } else if (family == "pareto") {
        spec = dist::Pareto{require(p.alpha, "pareto", "alpha"),
                            require(p.beta, "pareto", "beta")};
    } else if (family == "uniform") {
        spec = dist::Uniform{require(p.a, "uniform", "a"), require(p.b, "uniform", "b")};
    } else if (family == "power") {
        spec = dist::Power{require(p.alpha, "power", "alpha"), require(p.b, "power", "b")};
    } else {
        throw std::invalid_argument("unknown distribution family '" + family + "'");
    }
    dist::validate(spec);
    return spec;
}

json param_set_to_json(const dist::ParamSet& ps) {
    json j;
    j["mean"] = optional_to_json(ps.mean);
    j["variance"] = optional_to_json(ps.variance);
    j["median"] = optional_to_json(ps.median);
    j["geo_mean"] = ps.geo_mean;
    j["geo_var"] = ps.geo_var;
    j["geo_std"] = ps.geo_std;
    j["divergence"] = optional_to_json(ps.divergence);
    return j;
}

json cmd_describe(const std::string& file, bool percent) {
    const DataTable table = parse_csv(file, CsvSchema::yearly_values, percent);
    const auto summary = stats::summarize(stats::Sample(table.values));
    json j;
    j["n"] = summary.n;
    j["geo_mean"] = summary.geo_mean;
    j["geo_var_biased"] = summary.geo_var_biased;
    j["geo_var_unbiased"] = summary.geo_var_unbiased;
    j["geo_std_biased"] = summary.geo_std_biased;
    j["geo_std_unbiased"] = summary.geo_std_unbiased;
    j["arith_mean"] = summary.arith_mean;
    j["arith_std"] = summary.arith_std;
    j["median"] = summary.median;
    return j;
}

json cmd_returns(const std::string& file, const ReturnsOptions& opt) {
    const DataTable table = parse_csv(file, CsvSchema::returns, opt.percent);
    const finance::ReturnSeries series = finance::build_series(table.years, table.values);
    const finance::HorizonReport report = finance::horizon_report(series, opt.ks);

    json j;
    j["n"] = report.n;
    j["fv_geometric"] = report.fv_geometric;
    j["fv_arithmetic"] = report.fv_arithmetic;
    j["pv_geometric"] = report.pv_geometric;
    j["pv_arithmetic"] = report.pv_arithmetic;
    j["k_intervals"] = json::array();
    for (const auto& ki : report.k_intervals) {
        j["k_intervals"].push_back({{"k", ki.k}, {"lo", ki.lo}, {"hi", ki.hi}});
    }
    if (opt.train) {
        const auto [first, last] = *opt.train;
        const finance::Forecast f = finance::forecast(series, first, last, opt.horizon);
        json fj;
        fj["train_first"] = first;
        fj["train_last"] = last;
        fj["horizon"] = opt.horizon;
        fj["projected_geometric"] = f.projected_geometric;
        fj["projected_arithmetic"] = f.projected_arithmetic;
        fj["realized"] = optional_to_json(f.realized);
        j["forecast"] = std::move(fj);
    }
    return j;
}

json cmd_trend(const std::string& file, const TrendOptions& opt) {
    const DataTable table = parse_csv(file, CsvSchema::yearly_values, opt.percent);
    if (table.size() < 2 || table.years.front() == table.years.back()) {
        throw std::invalid_argument("trend: at least two distinct years required");
    }
    for (std::size_t i = 1; i < table.size(); ++i) {
        if (table.years[i] == table.years[i - 1]) {
            throw std::invalid_argument("trend: duplicate year " +
                                        std::to_string(table.years[i]));
        }
    }

    std::vector<double> ts(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        ts[i] = static_cast<double>(table.years[i] - table.years.front() + opt.t_origin);
    }
    const auto fit = regress::fit_exp_trend(ts, table.values);
    const auto residuals = regress::log_residuals(fit, ts, table.values, opt.bins);

    json j;
    j["n"] = fit.n;
    j["t_origin"] = opt.t_origin;
    j["alpha_hat"] = fit.alpha_hat;
    j["beta_hat"] = fit.beta_hat;
    j["geo_mean_y"] = fit.geo_mean_y;
    j["x_mean"] = fit.x_mean;
    j["x_var"] = fit.x_var;
    j["points"] = json::array();
    for (std::size_t i = 0; i < table.size(); ++i) {
        j["points"].push_back({{"year", table.years[i]},
                               {"t", ts[i]},
                               {"value", table.values[i]},
                               {"predicted", regress::predict(fit, ts[i])},
                               {"residual", residuals.residuals[i]}});
    }
    j["histogram"] = {{"bin_edges", residuals.histogram.bin_edges},
                      {"counts", residuals.histogram.counts},
                      {"residual_mean", residuals.histogram.residual_mean}};
    return j;
}

json cmd_dist(const dist::DistributionSpec& spec, bool numeric_check) {
    json j = dist_to_json(spec);
    const dist::ParamSet ps = dist::params(spec);
    j.update(param_set_to_json(ps));
    if (numeric_check) {
        const dist::MultMoments numeric = dist::numeric_mult_params(spec);
        const double dev_mean = std::abs(numeric.geo_mean - ps.geo_mean) / ps.geo_mean;
        const double dev_var = std::abs(numeric.geo_var - ps.geo_var) / ps.geo_var;
        j["numeric_check"] = {{"geo_mean", numeric.geo_mean},
                              {"geo_var", numeric.geo_var},
                              {"max_rel_dev", std::max(dev_mean, dev_var)}};
    }
    return j;
}

json cmd_match(const MatchOptions& opt) {
    if (!(opt.lambda > 0.0)) {
        throw std::domain_error("match: lambda must be > 0");
    }
    if (!(opt.scan_lo < opt.scan_hi) || !(opt.scan_lo > 0.0)) {
        throw std::domain_error("match: scan range must satisfy 0 < lo < hi");
    }
    if (opt.tail_points < 2) {
        throw std::invalid_argument("match: tail_points must be >= 2");
    }

    const auto [alpha, beta] = dist::match_exp_pareto(opt.lambda);
    const dist::DistributionSpec expo = dist::Exponential{opt.lambda};
    const dist::DistributionSpec pareto = dist::Pareto{alpha, beta};

    json j;
    j["lambda"] = opt.lambda;
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["exponential"] = param_set_to_json(dist::params(expo));
    j["pareto"] = param_set_to_json(dist::params(pareto));
    j["crossings"] = dist::tail_crossings(pareto, expo, opt.scan_lo, opt.scan_hi);
    j["tails"] = json::array();
    const double ratio = opt.scan_hi / opt.scan_lo;
    for (int i = 0; i < opt.tail_points; ++i) {
        const double x =
            opt.scan_lo * std::pow(ratio, static_cast<double>(i) / (opt.tail_points - 1));
        j["tails"].push_back({{"x", x},
                              {"tail_exponential", dist::tail(expo, x)},
                              {"tail_pareto", dist::tail(pareto, x)}});
    }
    return j;
}

double mc_tolerance(const std::string& check) {
    if (check == "geo-mean-unbiased") return 0.01;
    if (check == "dg-of-mean") return 0.02;
    if (check == "geo-var-unbiased") return 0.02;
    throw std::invalid_argument("unknown mc check '" + check + "'");
}

McResult cmd_mc(const McOptions& opt) {
    json j;
    j["check"] = opt.check;
    j["dist"] = dist_to_json(opt.dist);
    j["seed"] = opt.seed;

    if (opt.check == "scan-inequalities") {
        const dist::DistributionSpec second = opt.dist_b.value_or(opt.dist);
        j["dist_b"] = dist_to_json(second);
        j["sample_size"] = opt.sample_size;
        j["trials"] = opt.trials;
        const mc::InequalityScan scan =
            mc::scan_inequalities(opt.dist, second, opt.sample_size, opt.trials, opt.seed);
        j["violations_superadd"] = scan.violations_superadd;
        j["violations_gdisp"] = scan.violations_gdisp;
        j["worst_margin_superadd"] = scan.worst_margin_superadd;
        j["worst_margin_gdisp"] = scan.worst_margin_gdisp;
        // Superadditivity is a theorem; the dispersion inequality is only
        // scanned and reported.
        const bool pass = scan.violations_superadd == 0;
        j["pass"] = pass;
        return {std::move(j), pass};
    }

    const mc::McConfig cfg{opt.dist, opt.n, opt.reps, opt.seed};
    mc::McReport report;
    if (opt.check == "geo-mean-unbiased") {
        report = mc::check_geo_mean_unbiased(cfg);
    } else if (opt.check == "dg-of-mean") {
        report = mc::check_dg_of_geo_mean(cfg);
    } else if (opt.check == "geo-var-unbiased") {
        report = mc::check_geo_var_unbiased(cfg, opt.mode);
        j["mode"] = opt.mode == stats::VarianceMode::unbiased ? "unbiased" : "biased";
    } else {
        throw std::invalid_argument("unknown mc check '" + opt.check + "'");
    }

    const double tolerance = mc_tolerance(opt.check);
    j["n"] = opt.n;
    j["reps"] = opt.reps;
    j["estimate"] = report.estimate;
    j["target"] = report.target;
    j["relative_error"] = report.relative_error;
    j["reps_used"] = report.reps_used;
    j["tolerance"] = tolerance;
    const bool pass = report.relative_error <= tolerance;
    j["pass"] = pass;
    return {std::move(j), pass};
}

std::string cmd_plotdata(int figure, const PlotOptions& opt) {
    std::ostringstream out;
    switch (figure) {
        case 1: {
            // Pareto (beta = 1) additive mean, geometric mean and median
            // against alpha; the mean column is empty where it does not exist.
            const double lo = opt.min.value_or(0.2);
            const double hi = opt.max.value_or(5.0);
            const int points = opt.points > 0 ? opt.points : 97;
            if (!(lo > 0.0 && lo < hi) || points < 2) {
                throw std::domain_error("plotdata 1: need 0 < min < max and points >= 2");
            }
            out << "alpha,mean,geo_mean,median\n";
            for (int i = 0; i < points; ++i) {
                const double alpha = lo + (hi - lo) * i / (points - 1);
                const dist::ParamSet ps = dist::pareto_params(alpha, 1.0);
                out << format_csv_number(alpha) << ',';
                if (ps.mean) out << format_csv_number(*ps.mean);
                out << ',' << format_csv_number(ps.geo_mean) << ','
                    << format_csv_number(*ps.median) << '\n';
            }
            break;
        }
        case 2: {
            // Tails of the multiplicatively matched exponential/Pareto pair.
            const double lambda = opt.lambda.value_or(
                std::exp(-(specfun::euler_gamma() + M_PI / std::sqrt(6.0))));
            const double lo = opt.min.value_or(0.1);
            const double hi = opt.max.value_or(100.0);
            const int points = opt.points > 0 ? opt.points : 201;
            if (!(lambda > 0.0)) throw std::domain_error("plotdata 2: lambda must be > 0");
            if (!(lo > 0.0 && lo < hi) || points < 2) {
                throw std::domain_error("plotdata 2: need 0 < min < max and points >= 2");
            }
            const auto [alpha, beta] = dist::match_exp_pareto(lambda);
            const dist::DistributionSpec expo = dist::Exponential{lambda};
            const dist::DistributionSpec pareto = dist::Pareto{alpha, beta};
            out << "x,tail_exponential,tail_pareto\n";
            for (int i = 0; i < points; ++i) {
                const double x = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
                out << format_csv_number(x) << ',' << format_csv_number(dist::tail(expo, x))
                    << ',' << format_csv_number(dist::tail(pareto, x)) << '\n';
            }
            break;
        }
        case 3: {
            // Divergence d(a, b) of the uniform family as a function of b
            // for fixed a; the a = b point is excluded.
            const double hi = opt.max.value_or(10.0);
            const int points = opt.points > 0 ? opt.points : 100;
            if (points < 1) throw std::domain_error("plotdata 3: points must be >= 1");
            out << "a,b,d\n";
            for (double a : {0.5, 1.0, 1.5}) {
                if (!(hi > a)) throw std::domain_error("plotdata 3: max must exceed a = 1.5");
                for (int i = 1; i <= points; ++i) {
                    const double b = a + (hi - a) * i / points;
                    const dist::ParamSet ps = dist::uniform_params(a, b);
                    out << format_csv_number(a) << ',' << format_csv_number(b) << ','
                        << format_csv_number(*ps.divergence) << '\n';
                }
            }
            break;
        }
        case 4: {
            // Divergence d(a, b) as a function of a for fixed b, from a = 0
            // up to (but excluding) a = b.
            const int points = opt.points > 0 ? opt.points : 100;
            if (points < 1) throw std::domain_error("plotdata 4: points must be >= 1");
            out << "b,a,d\n";
            for (double b : {0.5, 1.0, 1.5}) {
                for (int i = 0; i < points; ++i) {
                    const double a = b * i / points;
                    const dist::ParamSet ps = dist::uniform_params(a, b);
                    out << format_csv_number(b) << ',' << format_csv_number(a) << ','
                        << format_csv_number(*ps.divergence) << '\n';
                }
            }
            break;
        }
        default:
            throw std::invalid_argument("unknown figure " + std::to_string(figure) +
                                        " (expected 1-4)");
    }
    return out.str();
}

namespace {

void render_value(std::ostringstream& out, const std::string& path, const json& j) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            render_value(out, path.empty() ? key : path + "." + key, value);
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            render_value(out, path + "[" + std::to_string(i) + "]", j[i]);
        }
    } else if (j.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", j.get<double>());
        out << path << ": " << buf << '\n';
    } else if (j.is_null()) {
        out << path << ": -\n";
    } else {
        out << path << ": " << j.dump() << '\n';
    }
}

}  // namespace

std::string render_table(const json& j) {
    std::ostringstream out;
    render_value(out, "", j);
    return out.str();
}

}  // namespace mstat::cli
