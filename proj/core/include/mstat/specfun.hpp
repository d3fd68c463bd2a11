#pragma once

#include <functional>
#include <limits>
#include <stdexcept>

namespace mstat::specfun {

/// Euler–Mascheroni constant to full double precision.
inline constexpr double euler_gamma() noexcept { return 0.5772156649015329; }

/// Exponential integral E1(x) = ∫_x^∞ e^{-t}/t dt for x > 0.
///
/// Power series with the -γ - ln x leading term for x <= 1, modified
/// Lentz continued fraction for x > 1. Absolute error below 1e-12 over
/// the whole positive axis.
double e1(double x);

/// Exponential integral Ei(x) = -E1(-x) for x < 0.
/// Positive arguments (principal value) are out of scope and rejected.
double ei_neg(double x);

/// Integration request. Infinite bounds are expressed with
/// +/-std::numeric_limits<double>::infinity() and handled internally by
/// a rational change of variables onto a finite interval.
struct QuadratureSpec {
    double lower;
    double upper;
    double abs_tol = 1e-10;
    int max_subdivisions = 2000;
};

/// Thrown when adaptive refinement exhausts max_subdivisions before the
/// error estimate drops below abs_tol. Carries the best estimate so far.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(std::string what, double best_estimate, double error_estimate)
        : std::runtime_error(std::move(what)),
          best_estimate_(best_estimate),
          error_estimate_(error_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

/// Globally adaptive Gauss–Kronrod (7,15) quadrature of f over the
/// interval described by spec. Returns the integral with estimated
/// absolute error below spec.abs_tol; throws ConvergenceError otherwise.
double integrate(const std::function<double(double)>& f, const QuadratureSpec& spec);

inline double integrate(const std::function<double(double)>& f, double lower, double upper,
                        double abs_tol = 1e-10) {
    return integrate(f, QuadratureSpec{lower, upper, abs_tol, 2000});
}

/// Bisection root of f on [lo, hi]; requires a sign change. Returns the
/// bracket midpoint once the bracket width drops below tol.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol = 1e-12);

}  // namespace mstat::specfun
