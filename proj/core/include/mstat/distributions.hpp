#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mstat/stats.hpp"

namespace mstat::dist {

struct Lognormal {
    double m;
    double sigma;  // > 0
};

struct Exponential {
    double lambda;  // > 0
};

struct TruncatedExponential {
    double lambda;  // > 0
    double mu;      // >= 0 (multiplicative parameters exist only then)
};

struct Pareto {
    double alpha;  // > 0
    double beta;   // > 0
};

struct Uniform {
    double a;  // >= 0
    double b;  // > a
};

struct Power {
    double alpha;  // > 1
    double b;      // > 0
};

using DistributionSpec =
    std::variant<Lognormal, Exponential, TruncatedExponential, Pareto, Uniform, Power>;

/// Throws std::domain_error naming the violated constraint.
void validate(const DistributionSpec& d);

/// Family tag, e.g. "pareto".
std::string family_name(const DistributionSpec& d);

/// Additive and multiplicative parameters of one family. Additive
/// moments that do not exist (Pareto mean for alpha <= 1, variance for
/// alpha <= 2) are absent, never sentinel numbers; divergence
/// E(X)/E_G(X) is absent whenever the mean is.
struct ParamSet {
    std::optional<double> mean;
    std::optional<double> variance;
    std::optional<double> median;
    double geo_mean;
    double geo_var;
    double geo_std;
    std::optional<double> divergence;
};

ParamSet lognormal_params(double m, double sigma);
ParamSet exponential_params(double lambda);
ParamSet pareto_params(double alpha, double beta);
/// Uniform geo_var has no closed form; it is evaluated by quadrature of
/// Var(ln X). The geometric mean is closed-form, handled separately for
/// a > 0 and a = 0.
ParamSet uniform_params(double a, double b);
/// Derived through the reciprocal duality X = 1/Y with Y ~ Pareto(alpha, 1/b).
ParamSet power_params(double alpha, double b);
/// Full set for the left-truncated exponential; geo_var by quadrature.
ParamSet trunc_exp_params(double lambda, double mu);

/// Parameter set for any family.
ParamSet params(const DistributionSpec& d);

/// Geometric mean of the left-truncated exponential:
/// mu·exp(e^{λμ}·E1(λμ)) for mu > 0, the exponential limit e^{-γ}/λ at mu = 0.
double trunc_exp_geo_mean(double lambda, double mu);

/// Exact moments of the exponentially-uniform pair (X exponential with
/// mean y, Y uniform on (0,1)).
struct ExpUniformMoments {
    double e_x;       // 1/2
    double e_lny;     // -1
    double e_xlny;    // -1/4
    double cov_add;   // C(X, ln Y) = 1/4
    double cov_mult;  // e^{1/4}
};
ExpUniformMoments expuniform_cov();

/// Pareto parameters sharing the exponential(lambda) multiplicative
/// mean and variance: alpha = sqrt(6)/pi, beta = e^{-(γ+π/√6)}/lambda.
struct MatchedPareto {
    double alpha;
    double beta;
};
MatchedPareto match_exp_pareto(double lambda);

double cdf(const DistributionSpec& d, double x);

/// Upper tail 1 - F(x); 1 below the support.
double tail(const DistributionSpec& d, double x);

/// Scans [lo, hi] on a log-spaced grid (linear when lo <= 0) for sign
/// changes of F_a - F_b and refines each bracket by bisection. Roots in
/// ascending order; empty when the cdfs never cross strictly.
std::vector<double> tail_crossings(const DistributionSpec& a, const DistributionSpec& b,
                                   double lo, double hi, int grid_cells = 512);

/// Multiplicative moments by quadrature of ln x and ln² x against the
/// density; the oracle the closed forms are tested against.
struct MultMoments {
    double geo_mean;
    double geo_var;
};
MultMoments numeric_mult_params(const DistributionSpec& d);

/// Inverse cdf at u in (0,1).
double quantile(const DistributionSpec& d, double u);

/// n i.i.d. draws by inverse-cdf transform from a seeded deterministic
/// generator; identical (d, n, seed) always yields identical output.
stats::Sample sample(const DistributionSpec& d, std::size_t n, std::uint64_t seed);

/// Paired draws from the exponentially-uniform model: y_i uniform(0,1),
/// x_i exponential with mean y_i. Deterministic in the seed.
std::pair<std::vector<double>, std::vector<double>> sample_exp_uniform_pairs(
    std::size_t n, std::uint64_t seed);

}  // namespace mstat::dist
