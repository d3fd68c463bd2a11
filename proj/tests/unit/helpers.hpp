#pragma once

#include <cmath>
#include <random>
#include <vector>

namespace testutil {

inline bool near_rel(double actual, double expected, double rel_tol) {
    return std::abs(actual - expected) <= rel_tol * std::abs(expected);
}

inline bool near_abs(double actual, double expected, double abs_tol) {
    return std::abs(actual - expected) <= abs_tol;
}

/// Positive random sample, log-normally spread, for property tests.
inline std::vector<double> random_positive_sample(std::mt19937_64& rng, std::size_t n,
                                                  double log_sigma = 0.5) {
    std::normal_distribution<double> normal(0.0, log_sigma);
    std::vector<double> v(n);
    for (auto& x : v) {
        x = std::exp(normal(rng));
    }
    return v;
}

inline std::vector<double> elementwise(const std::vector<double>& a,
                                       const std::vector<double>& b, double (*op)(double, double)) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = op(a[i], b[i]);
    }
    return out;
}

}  // namespace testutil
