#include "mstat/distributions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mstat/specfun.hpp"
#include "rng.hpp"

namespace mstat::dist {

namespace {

constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void constraint_error(const std::string& what) { throw std::domain_error(what); }

ParamSet finish(ParamSet p) {
    p.geo_std = std::exp(std::sqrt(std::log(p.geo_var)));
    if (p.mean) {
        p.divergence = *p.mean / p.geo_mean;
    }
    return p;
}

/// Density of the family at x (0 outside the support).
double density(const DistributionSpec& d, double x) {
    return std::visit(
        [x](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Lognormal>) {
                if (x <= 0.0) return 0.0;
                const double z = (std::log(x) - f.m) / f.sigma;
                return std::exp(-0.5 * z * z) / (x * f.sigma * std::sqrt(2.0 * kPi));
            } else if constexpr (std::is_same_v<T, Exponential>) {
                return x < 0.0 ? 0.0 : f.lambda * std::exp(-f.lambda * x);
            } else if constexpr (std::is_same_v<T, TruncatedExponential>) {
                return x < f.mu ? 0.0 : f.lambda * std::exp(-f.lambda * (x - f.mu));
            } else if constexpr (std::is_same_v<T, Pareto>) {
                if (x < f.beta) return 0.0;
                return f.alpha * std::pow(f.beta, f.alpha) * std::pow(x, -(f.alpha + 1.0));
            } else if constexpr (std::is_same_v<T, Uniform>) {
                return (x < f.a || x > f.b) ? 0.0 : 1.0 / (f.b - f.a);
            } else {
                static_assert(std::is_same_v<T, Power>);
                if (x < 0.0 || x > f.b) return 0.0;
                return f.alpha / std::pow(f.b, f.alpha) * std::pow(x, f.alpha - 1.0);
            }
        },
        d);
}

struct Support {
    double lo;
    double hi;  // may be +inf
};

Support support(const DistributionSpec& d) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return std::visit(
        [inf](const auto& f) -> Support {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Lognormal>) {
                return {0.0, inf};
            } else if constexpr (std::is_same_v<T, Exponential>) {
                return {0.0, inf};
            } else if constexpr (std::is_same_v<T, TruncatedExponential>) {
                return {f.mu, inf};
            } else if constexpr (std::is_same_v<T, Pareto>) {
                return {f.beta, inf};
            } else if constexpr (std::is_same_v<T, Uniform>) {
                return {f.a, f.b};
            } else {
                return {0.0, f.b};
            }
        },
        d);
}

}  // namespace

void validate(const DistributionSpec& d) {
    std::visit(
        [](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Lognormal>) {
                if (!(f.sigma > 0.0)) constraint_error("lognormal: sigma must be > 0");
                if (!std::isfinite(f.m)) constraint_error("lognormal: m must be finite");
            } else if constexpr (std::is_same_v<T, Exponential>) {
                if (!(f.lambda > 0.0)) constraint_error("exponential: lambda must be > 0");
            } else if constexpr (std::is_same_v<T, TruncatedExponential>) {
                if (!(f.lambda > 0.0))
                    constraint_error("truncated-exponential: lambda must be > 0");
                if (!(f.mu >= 0.0))
                    constraint_error(
                        "truncated-exponential: mu must be >= 0 "
                        "(multiplicative parameters exist only then)");
            } else if constexpr (std::is_same_v<T, Pareto>) {
                if (!(f.alpha > 0.0)) constraint_error("pareto: alpha must be > 0");
                if (!(f.beta > 0.0)) constraint_error("pareto: beta must be > 0");
            } else if constexpr (std::is_same_v<T, Uniform>) {
                if (!(f.a >= 0.0)) constraint_error("uniform: a must be >= 0");
                if (!(f.b > f.a)) constraint_error("uniform: b must be > a");
            } else {
                static_assert(std::is_same_v<T, Power>);
                if (!(f.alpha > 1.0)) constraint_error("power: alpha must be > 1");
                if (!(f.b > 0.0)) constraint_error("power: b must be > 0");
            }
        },
        d);
}

std::string family_name(const DistributionSpec& d) {
    return std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Lognormal>) return "lognormal";
            if constexpr (std::is_same_v<T, Exponential>) return "exponential";
            if constexpr (std::is_same_v<T, TruncatedExponential>)
                return "truncated-exponential";
            if constexpr (std::is_same_v<T, Pareto>) return "pareto";
            if constexpr (std::is_same_v<T, Uniform>) return "uniform";
            return "power";
        },
        d);
}

ParamSet lognormal_params(double m, double sigma) {
    validate(Lognormal{m, sigma});
    const double s2 = sigma * sigma;
    ParamSet p;
    p.mean = std::exp(m + s2 / 2.0);
    p.variance = std::exp(2.0 * m + s2) * (std::exp(s2) - 1.0);
    p.median = std::exp(m);
    p.geo_mean = std::exp(m);
    p.geo_var = std::exp(s2);
    return finish(p);
}

ParamSet exponential_params(double lambda) {
    validate(Exponential{lambda});
    ParamSet p;
    p.mean = 1.0 / lambda;
    p.variance = 1.0 / (lambda * lambda);
    p.median = std::log(2.0) / lambda;
    p.geo_mean = std::exp(-specfun::euler_gamma()) / lambda;
    p.geo_var = std::exp(kPi * kPi / 6.0);
    return finish(p);
}

double trunc_exp_geo_mean(double lambda, double mu) {
    validate(TruncatedExponential{lambda, mu});
    if (mu == 0.0) {
        return std::exp(-specfun::euler_gamma()) / lambda;
    }
    // E(ln Y) = ln mu + e^{λμ}·E1(λμ), by parts from the shifted density.
    return mu * std::exp(std::exp(lambda * mu) * specfun::e1(lambda * mu));
}

ParamSet trunc_exp_params(double lambda, double mu) {
    validate(TruncatedExponential{lambda, mu});
    if (mu == 0.0) {
        return exponential_params(lambda);
    }
    ParamSet p;
    p.mean = mu + 1.0 / lambda;
    p.variance = 1.0 / (lambda * lambda);
    p.median = mu + std::log(2.0) / lambda;
    p.geo_mean = trunc_exp_geo_mean(lambda, mu);
    // Var(ln Y) has no closed form here; quadrature against the density.
    const DistributionSpec spec = TruncatedExponential{lambda, mu};
    const double ln_mean = std::log(p.geo_mean);
    const double ln_sq = specfun::integrate(
        [&spec](double x) {
            const double l = std::log(x);
            return l * l * density(spec, x);
        },
        {mu, std::numeric_limits<double>::infinity(), 1e-10, 20000});
    p.geo_var = std::exp(ln_sq - ln_mean * ln_mean);
    return finish(p);
}

ParamSet pareto_params(double alpha, double beta) {
    validate(Pareto{alpha, beta});
    ParamSet p;
    if (alpha > 1.0) {
        p.mean = alpha * beta / (alpha - 1.0);
    }
    if (alpha > 2.0) {
        p.variance = alpha * beta * beta / ((alpha - 2.0) * (alpha - 1.0) * (alpha - 1.0));
    }
    p.median = std::pow(2.0, 1.0 / alpha) * beta;
    p.geo_mean = beta * std::exp(1.0 / alpha);
    p.geo_var = std::exp(1.0 / (alpha * alpha));
    return finish(p);
}

ParamSet uniform_params(double a, double b) {
    validate(Uniform{a, b});
    ParamSet p;
    p.mean = (a + b) / 2.0;
    p.variance = (b - a) * (b - a) / 12.0;
    p.median = p.mean;
    // exp((b ln b - a ln a)/(b - a) - 1); the a·ln a term vanishes at a = 0,
    // where the mean log collapses to ln b - 1.
    const double a_log_term = a > 0.0 ? a * std::log(a) : 0.0;
    const double ln_mean = (b * std::log(b) - a_log_term) / (b - a) - 1.0;
    p.geo_mean = std::exp(ln_mean);
    const DistributionSpec spec = Uniform{a, b};
    const double ln_sq = specfun::integrate(
        [&spec](double x) {
            const double l = std::log(x);
            return l * l * density(spec, x);
        },
        {a, b, 1e-11, 20000});
    p.geo_var = std::exp(ln_sq - ln_mean * ln_mean);
    return finish(p);
}

ParamSet power_params(double alpha, double b) {
    validate(Power{alpha, b});
    ParamSet p;
    p.mean = alpha * b / (alpha + 1.0);
    const double ex2 = alpha * b * b / (alpha + 2.0);
    p.variance = ex2 - *p.mean * *p.mean;
    p.median = b / std::pow(2.0, 1.0 / alpha);
    // Reciprocal duality with Pareto(alpha, 1/b): geo means multiply to 1,
    // geo variances coincide.
    p.geo_mean = b * std::exp(-1.0 / alpha);
    p.geo_var = std::exp(1.0 / (alpha * alpha));
    return finish(p);
}

ParamSet params(const DistributionSpec& d) {
    return std::visit(
        [](const auto& f) -> ParamSet {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Lognormal>) {
                return lognormal_params(f.m, f.sigma);
            } else if constexpr (std::is_same_v<T, Exponential>) {
                return exponential_params(f.lambda);
            } else if constexpr (std::is_same_v<T, TruncatedExponential>) {
                return trunc_exp_params(f.lambda, f.mu);
            } else if constexpr (std::is_same_v<T, Pareto>) {
                return pareto_params(f.alpha, f.beta);
            } else if constexpr (std::is_same_v<T, Uniform>) {
                return uniform_params(f.a, f.b);
            } else {
                return power_params(f.alpha, f.b);
            }
        },
        d);
}

ExpUniformMoments expuniform_cov() {
    // X | Y=y exponential with mean y, Y uniform(0,1):
    // E X = ∫ y dy = 1/2; E ln Y = -1; E(X ln Y) = ∫ y ln y dy = -1/4.
    const double e_x = 0.5;
    const double e_lny = -1.0;
    const double e_xlny = -0.25;
    const double cov_add = e_xlny - e_x * e_lny;
    return {e_x, e_lny, e_xlny, cov_add, std::exp(cov_add)};
}

MatchedPareto match_exp_pareto(double lambda) {
    validate(Exponential{lambda});
    const double alpha = std::sqrt(6.0) / kPi;
    const double beta =
        std::exp(-(specfun::euler_gamma() + kPi / std::sqrt(6.0))) / lambda;
    return {alpha, beta};
}

double cdf(const DistributionSpec& d, double x) {
    validate(d);
    return std::visit(
        [x](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Lognormal>) {
                if (x <= 0.0) return 0.0;
                return detail::normal_cdf((std::log(x) - f.m) / f.sigma);
            } else if constexpr (std::is_same_v<T, Exponential>) {
                return x < 0.0 ? 0.0 : 1.0 - std::exp(-f.lambda * x);
            } else if constexpr (std::is_same_v<T, TruncatedExponential>) {
                return x < f.mu ? 0.0 : 1.0 - std::exp(-f.lambda * (x - f.mu));
            } else if constexpr (std::is_same_v<T, Pareto>) {
                return x < f.beta ? 0.0 : 1.0 - std::pow(f.beta / x, f.alpha);
            } else if constexpr (std::is_same_v<T, Uniform>) {
                if (x <= f.a) return 0.0;
                if (x >= f.b) return 1.0;
                return (x - f.a) / (f.b - f.a);
            } else {
                static_assert(std::is_same_v<T, Power>);
                if (x <= 0.0) return 0.0;
                if (x >= f.b) return 1.0;
                return std::pow(x / f.b, f.alpha);
            }
        },
        d);
}

double tail(const DistributionSpec& d, double x) { return 1.0 - cdf(d, x); }

std::vector<double> tail_crossings(const DistributionSpec& a, const DistributionSpec& b,
                                   double lo, double hi, int grid_cells) {
    validate(a);
    validate(b);
    if (!(lo < hi)) {
        throw std::domain_error("tail_crossings: requires lo < hi");
    }
    if (grid_cells < 1) {
        throw std::domain_error("tail_crossings: grid_cells must be >= 1");
    }

    const auto diff = [&a, &b](double x) { return cdf(a, x) - cdf(b, x); };
    const bool log_spaced = lo > 0.0;
    const double step =
        log_spaced ? std::pow(hi / lo, 1.0 / grid_cells) : (hi - lo) / grid_cells;

    std::vector<double> roots;
    double x_prev = lo;
    double d_prev = diff(lo);
    for (int i = 1; i <= grid_cells; ++i) {
        const double x =
            i == grid_cells ? hi : (log_spaced ? lo * std::pow(step, i) : lo + step * i);
        const double d_here = diff(x);
        if (d_prev == 0.0) {
            roots.push_back(x_prev);
        } else if (d_here != 0.0 && std::signbit(d_here) != std::signbit(d_prev)) {
            const double tol = 1e-12 * std::max(1.0, std::abs(x));
            roots.push_back(specfun::find_root(diff, x_prev, x, tol));
        }
        x_prev = x;
        d_prev = d_here;
    }
    return roots;
}

MultMoments numeric_mult_params(const DistributionSpec& d) {
    validate(d);
    const Support s = support(d);
    const specfun::QuadratureSpec quad{s.lo, s.hi, 1e-10, 20000};
    const double ln_mean = specfun::integrate(
        [&d](double x) { return std::log(x) * density(d, x); }, quad);
    const double ln_sq = specfun::integrate(
        [&d](double x) {
            const double l = std::log(x);
            return l * l * density(d, x);
        },
        quad);
    return {std::exp(ln_mean), std::exp(ln_sq - ln_mean * ln_mean)};
}

double quantile(const DistributionSpec& d, double u) {
    validate(d);
    if (!(u > 0.0 && u < 1.0)) {
        throw std::domain_error("quantile: u must lie strictly in (0, 1)");
    }
    return std::visit(
        [u](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Lognormal>) {
                return std::exp(f.m + f.sigma * detail::normal_quantile(u));
            } else if constexpr (std::is_same_v<T, Exponential>) {
                return -std::log1p(-u) / f.lambda;
            } else if constexpr (std::is_same_v<T, TruncatedExponential>) {
                return f.mu - std::log1p(-u) / f.lambda;
            } else if constexpr (std::is_same_v<T, Pareto>) {
                return f.beta * std::pow(1.0 - u, -1.0 / f.alpha);
            } else if constexpr (std::is_same_v<T, Uniform>) {
                return f.a + (f.b - f.a) * u;
            } else {
                static_assert(std::is_same_v<T, Power>);
                return f.b * std::pow(u, 1.0 / f.alpha);
            }
        },
        d);
}

stats::Sample sample(const DistributionSpec& d, std::size_t n, std::uint64_t seed) {
    validate(d);
    if (n < 1) {
        throw std::invalid_argument("sample: n must be >= 1");
    }
    detail::SplitMix64 rng(seed);
    std::vector<double> draws;
    draws.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        draws.push_back(quantile(d, rng.next_uniform()));
    }
    return stats::Sample(std::move(draws));
}

std::pair<std::vector<double>, std::vector<double>> sample_exp_uniform_pairs(
    std::size_t n, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("sample_exp_uniform_pairs: n must be >= 1");
    }
    detail::SplitMix64 rng(seed);
    std::vector<double> xs;
    std::vector<double> ys;
    xs.reserve(n);
    ys.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double y = rng.next_uniform();
        const double x = -y * std::log1p(-rng.next_uniform());
        ys.push_back(y);
        xs.push_back(x);
    }
    return {std::move(xs), std::move(ys)};
}

}  // namespace mstat::dist
