#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mstat::regress {

/// Exponential trend y = exp(alpha·x + beta) fitted by least squares on
/// the log-transformed response.
struct ExpTrendFit {
    double alpha_hat;
    double beta_hat;
    double x_mean;
    double x_var;  // biased (1/n)
    double geo_mean_y;
    std::size_t n;
};

/// OLS of ln y on x. Requires n >= 2, non-constant xs, positive ys.
ExpTrendFit fit_exp_trend(std::span<const double> xs, std::span<const double> ys);

/// exp(alpha_hat·x + beta_hat).
double predict(const ExpTrendFit& fit, double x);

/// The same curve written through the additive-multiplicative
/// covariance: y(x) = c_g^{(x - x̄)/s²ₓ} · geo_y.
struct ExpApproxForm {
    double c_g;
    double x_mean;
    double x_var;  // biased (1/n)
    double geo_y;
};

ExpApproxForm exp_approx_form(std::span<const double> xs, std::span<const double> ys);

double eval(const ExpApproxForm& form, double x);

struct LogResidualHistogram {
    std::vector<double> bin_edges;        // strictly increasing, bins+1 entries
    std::vector<std::size_t> counts;      // sums to n
    double residual_mean;
};

struct ResidualReport {
    std::vector<double> residuals;  // r_i = ln y_i - (alpha·x_i + beta)
    LogResidualHistogram histogram;
};

ResidualReport log_residuals(const ExpTrendFit& fit, std::span<const double> xs,
                             std::span<const double> ys, int bins = 6);

/// exp(mean ln y): the estimator of the multiplicative model's central
/// tendency; identical to the geometric mean of the response.
double geo_mean_response(std::span<const double> ys);

}  // namespace mstat::regress
