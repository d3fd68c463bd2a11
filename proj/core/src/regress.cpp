#include "mstat/regress.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mstat/stats.hpp"

namespace mstat::regress {

namespace {

void check_design(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("fit_exp_trend: series lengths differ (" +
                                    std::to_string(xs.size()) + " vs " +
                                    std::to_string(ys.size()) + ")");
    }
    if (xs.size() < 2) {
        throw std::invalid_argument("fit_exp_trend: requires n >= 2");
    }
    for (std::size_t i = 0; i < ys.size(); ++i) {
        if (!(ys[i] > 0.0) || !std::isfinite(ys[i])) {
            throw std::domain_error("fit_exp_trend: response at index " + std::to_string(i) +
                                    " must be a positive finite real");
        }
    }
}

double mean_of(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) {
        s += x;
    }
    return s / static_cast<double>(v.size());
}

}  // namespace

ExpTrendFit fit_exp_trend(std::span<const double> xs, std::span<const double> ys) {
    check_design(xs, ys);
    const std::size_t n = xs.size();

    const double x_mean = mean_of(xs);
    double z_mean = 0.0;
    for (double y : ys) {
        z_mean += std::log(y);
    }
    z_mean /= static_cast<double>(n);

    double sxx = 0.0;
    double sxz = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - x_mean;
        sxx += dx * dx;
        sxz += dx * (std::log(ys[i]) - z_mean);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("fit_exp_trend: explanatory values are all equal");
    }

    const double alpha = sxz / sxx;
    return ExpTrendFit{
        .alpha_hat = alpha,
        .beta_hat = z_mean - alpha * x_mean,
        .x_mean = x_mean,
        .x_var = sxx / static_cast<double>(n),
        .geo_mean_y = std::exp(z_mean),
        .n = n,
    };
}

double predict(const ExpTrendFit& fit, double x) {
    return std::exp(fit.alpha_hat * x + fit.beta_hat);
}

ExpApproxForm exp_approx_form(std::span<const double> xs, std::span<const double> ys) {
    const ExpTrendFit fit = fit_exp_trend(xs, ys);
    const double c_g =
        stats::addmult_cov(xs, stats::Sample(std::vector<double>(ys.begin(), ys.end())));
    return ExpApproxForm{c_g, fit.x_mean, fit.x_var, fit.geo_mean_y};
}

double eval(const ExpApproxForm& form, double x) {
    return std::pow(form.c_g, (x - form.x_mean) / form.x_var) * form.geo_y;
}

ResidualReport log_residuals(const ExpTrendFit& fit, std::span<const double> xs,
                             std::span<const double> ys, int bins) {
    if (xs.size() != ys.size() || xs.size() != fit.n) {
        throw std::invalid_argument("log_residuals: data length does not match the fit");
    }
    if (bins < 1) {
        throw std::invalid_argument("log_residuals: bins must be >= 1");
    }

    std::vector<double> residuals(xs.size());
    double mean = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        residuals[i] = std::log(ys[i]) - (fit.alpha_hat * xs[i] + fit.beta_hat);
        mean += residuals[i];
    }
    mean /= static_cast<double>(residuals.size());

    const auto [lo_it, hi_it] = std::minmax_element(residuals.begin(), residuals.end());
    double lo = *lo_it;
    double hi = *hi_it;
    if (lo == hi) {
        // Noiseless fit: all residuals identical, give the histogram a
        // unit-width span so the edges stay strictly increasing.
        lo -= 0.5;
        hi += 0.5;
    }

    LogResidualHistogram hist;
    hist.residual_mean = mean;
    hist.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i) {
        hist.bin_edges[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / bins;
    }
    hist.counts.assign(static_cast<std::size_t>(bins), 0);
    const double width = (hi - lo) / bins;
    for (double r : residuals) {
        auto idx = static_cast<std::size_t>(
            std::clamp(static_cast<long>((r - lo) / width), 0L, static_cast<long>(bins - 1)));
        ++hist.counts[idx];
    }
    return ResidualReport{std::move(residuals), std::move(hist)};
}

double geo_mean_response(std::span<const double> ys) {
    if (ys.empty()) {
        throw std::invalid_argument("geo_mean_response: at least one observation required");
    }
    return stats::geo_mean(stats::Sample(std::vector<double>(ys.begin(), ys.end())));
}

}  // namespace mstat::regress
