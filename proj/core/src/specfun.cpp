#include "mstat/specfun.hpp"

#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace mstat::specfun {

namespace {

// 15-point Kronrod nodes on [-1, 1] with the embedded 7-point Gauss rule
// (QUADPACK dqk15 coefficients).
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
// Gauss weights; odd Kronrod nodes (indices 0, 2, 4, 6) carry none.
constexpr double kGaussWeights[4] = {0.129484966168870, 0.279705391489277,
                                     0.381830050505119, 0.417959183673469};

struct CellEstimate {
    double a;
    double b;
    double value;  // Kronrod estimate
    double error;  // |Kronrod - Gauss|

    bool operator<(const CellEstimate& other) const { return error < other.error; }
};

CellEstimate gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f_center = f(center);
    double kronrod = kKronrodWeights[7] * f_center;
    double gauss = kGaussWeights[3] * f_center;

    for (int i = 0; i < 7; ++i) {
        const double offset = half * kKronrodNodes[i];
        const double pair = f(center + offset) + f(center - offset);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1) {
            gauss += kGaussWeights[i / 2] * pair;
        }
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

double e1_series(double x) {
    // E1(x) = -γ - ln x + Σ_{k>=1} (-1)^{k+1} x^k / (k·k!)
    double sum = -euler_gamma() - std::log(x);
    double power = 1.0;      // (-x)^k
    double factorial = 1.0;  // k!
    for (int k = 1; k <= 64; ++k) {
        power *= -x;
        factorial *= k;
        const double term = -power / (k * factorial);
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum) + 1e-300) {
            break;
        }
    }
    return sum;
}

double e1_continued_fraction(double x) {
    // Modified Lentz evaluation of E1(x) = e^{-x}/(x+1- 1/(x+3- 4/(x+5- ...))).
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 200; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            break;
        }
    }
    return h * std::exp(-x);
}

}  // namespace

double e1(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("e1: argument must be > 0 (got " + std::to_string(x) + ")");
    }
    return x <= 1.0 ? e1_series(x) : e1_continued_fraction(x);
}

double ei_neg(double x) {
    if (!(x < 0.0)) {
        throw std::domain_error("ei_neg: argument must be < 0 (got " + std::to_string(x) + ")");
    }
    return -e1(-x);
}

double integrate(const std::function<double(double)>& f, const QuadratureSpec& spec) {
    if (!(spec.abs_tol > 0.0)) {
        throw std::domain_error("integrate: abs_tol must be > 0");
    }
    if (!(spec.lower < spec.upper)) {
        throw std::domain_error("integrate: lower bound must be below upper bound");
    }
    if (spec.max_subdivisions < 1) {
        throw std::domain_error("integrate: max_subdivisions must be >= 1");
    }

    const bool lower_inf = std::isinf(spec.lower);
    const bool upper_inf = std::isinf(spec.upper);

    // Map infinite ranges onto a finite parameter interval. The wrappers
    // guard the 0·inf case where the integrand has already underflowed
    // but the Jacobian is blowing up.
    std::function<double(double)> g;
    double lo;
    double hi;
    if (!lower_inf && !upper_inf) {
        g = f;
        lo = spec.lower;
        hi = spec.upper;
    } else if (!lower_inf && upper_inf) {
        const double a = spec.lower;
        g = [f, a](double t) {
            const double one_minus = 1.0 - t;
            const double y = f(a + t / one_minus);
            return y == 0.0 ? 0.0 : y / (one_minus * one_minus);
        };
        lo = 0.0;
        hi = 1.0;
    } else if (lower_inf && !upper_inf) {
        const double b = spec.upper;
        g = [f, b](double t) {
            const double one_minus = 1.0 - t;
            const double y = f(b - t / one_minus);
            return y == 0.0 ? 0.0 : y / (one_minus * one_minus);
        };
        lo = 0.0;
        hi = 1.0;
    } else {
        g = [f](double t) {
            const double denom = 1.0 - t * t;
            const double y = f(t / denom);
            return y == 0.0 ? 0.0 : y * (1.0 + t * t) / (denom * denom);
        };
        lo = -1.0;
        hi = 1.0;
    }

    std::priority_queue<CellEstimate> active;
    active.push(gauss_kronrod_15(g, lo, hi));
    double total = active.top().value;
    double total_error = active.top().error;
    double settled = 0.0;         // cells too narrow to split further
    double settled_error = 0.0;

    int subdivisions = 0;
    while (total_error + settled_error > spec.abs_tol && !active.empty()) {
        if (subdivisions >= spec.max_subdivisions) {
            throw ConvergenceError(
                "integrate: error estimate " + std::to_string(total_error + settled_error) +
                    " above tolerance after " + std::to_string(subdivisions) + " subdivisions",
                total + settled, total_error + settled_error);
        }
        const CellEstimate worst = active.top();
        active.pop();
        total -= worst.value;
        total_error -= worst.error;

        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Cell width is at floating-point resolution; its error is final.
            settled += worst.value;
            settled_error += worst.error;
            continue;
        }
        ++subdivisions;
        for (const CellEstimate& piece :
             {gauss_kronrod_15(g, worst.a, mid), gauss_kronrod_15(g, mid, worst.b)}) {
            total += piece.value;
            total_error += piece.error;
            active.push(piece);
        }
    }

    const double result = total + settled;
    if (!std::isfinite(result)) {
        throw ConvergenceError("integrate: non-finite estimate (integrand misbehaved)", result,
                               total_error + settled_error);
    }
    return result;
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(lo < hi)) {
        throw std::domain_error("find_root: requires lo < hi");
    }
    if (!(tol > 0.0)) {
        throw std::domain_error("find_root: tol must be > 0");
    }
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if (std::signbit(f_lo) == std::signbit(f_hi)) {
        throw std::domain_error("find_root: no sign change on the given bracket");
    }

    while (hi - lo > tol) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) {
            break;  // bracket at floating-point resolution
        }
        const double f_mid = f(mid);
        if (f_mid == 0.0) {
            return mid;
        }
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return lo + 0.5 * (hi - lo);
}

}  // namespace mstat::specfun
