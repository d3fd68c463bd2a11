#include "mstat/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mstat::stats {

namespace {

double log_mean(std::span<const double> values) {
    double sum = 0.0;
    for (double v : values) {
        sum += std::log(v);
    }
    return sum / static_cast<double>(values.size());
}

double log_sq_dev_sum(std::span<const double> values, double center) {
    double sum = 0.0;
    for (double v : values) {
        const double d = std::log(v) - center;
        sum += d * d;
    }
    return sum;
}

std::size_t divisor(std::size_t n, VarianceMode mode) {
    if (mode == VarianceMode::unbiased) {
        if (n < 2) {
            throw std::domain_error("unbiased geometric dispersion requires n >= 2");
        }
        return n - 1;
    }
    return n;
}

}  // namespace

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("Sample: at least one observation required");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!(values_[i] > 0.0) || !std::isfinite(values_[i])) {
            throw std::domain_error("Sample: value at index " + std::to_string(i) +
                                    " must be a positive finite real (got " +
                                    std::to_string(values_[i]) + ")");
        }
    }
}

double geo_mean(const Sample& s) { return std::exp(log_mean(s.values())); }

double geo_var(const Sample& s, VarianceMode mode) {
    const std::size_t d = divisor(s.size(), mode);
    return std::exp(log_sq_dev_sum(s.values(), log_mean(s.values())) / static_cast<double>(d));
}

double geo_std(const Sample& s, VarianceMode mode) {
    const std::size_t d = divisor(s.size(), mode);
    return std::exp(
        std::sqrt(log_sq_dev_sum(s.values(), log_mean(s.values())) / static_cast<double>(d)));
}

std::pair<double, double> k_interval(double m_g, double s_g, int k) {
    if (!(m_g > 0.0)) {
        throw std::domain_error("k_interval: m_g must be > 0");
    }
    if (!(s_g >= 1.0)) {
        throw std::domain_error("k_interval: s_g must be >= 1");
    }
    if (k < 1) {
        throw std::domain_error("k_interval: k must be >= 1");
    }
    const double factor = std::pow(s_g, k);
    return {m_g / factor, m_g * factor};
}

double addmult_cov(std::span<const double> xs, const Sample& ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("addmult_cov: series lengths differ (" +
                                    std::to_string(xs.size()) + " vs " +
                                    std::to_string(ys.size()) + ")");
    }
    const std::size_t n = xs.size();
    if (n < 2) {
        throw std::invalid_argument("addmult_cov: requires n >= 2");
    }
    double x_mean = 0.0;
    for (double x : xs) {
        x_mean += x;
    }
    x_mean /= static_cast<double>(n);
    const double ln_y_mean = log_mean(ys.values());

    double cov = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cov += (xs[i] - x_mean) * (std::log(ys[i]) - ln_y_mean);
    }
    return std::exp(cov / static_cast<double>(n));
}

double mult_divergence(double t) {
    if (!(t > 0.0)) {
        throw std::domain_error("mult_divergence: t must be > 0");
    }
    const double l = std::log(t);
    return std::exp(l * l);
}

double mult_abs_divergence(double t) {
    if (!(t > 0.0)) {
        throw std::domain_error("mult_abs_divergence: t must be > 0");
    }
    return std::exp(std::abs(std::log(t)));
}

MultiplicativeSummary summarize(const Sample& s) {
    const std::size_t n = s.size();
    if (n < 2) {
        throw std::invalid_argument("summarize: requires n >= 2");
    }

    const double lg = log_mean(s.values());
    const double sq = log_sq_dev_sum(s.values(), lg);

    double arith = 0.0;
    for (double v : s.values()) {
        arith += v;
    }
    arith /= static_cast<double>(n);
    double arith_sq = 0.0;
    for (double v : s.values()) {
        arith_sq += (v - arith) * (v - arith);
    }

    std::vector<double> sorted(s.values().begin(), s.values().end());
    std::sort(sorted.begin(), sorted.end());
    const double median = (n % 2 == 1)
                              ? sorted[n / 2]
                              : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

    return MultiplicativeSummary{
        .n = n,
        .geo_mean = std::exp(lg),
        .geo_var_biased = std::exp(sq / static_cast<double>(n)),
        .geo_var_unbiased = std::exp(sq / static_cast<double>(n - 1)),
        .geo_std_biased = std::exp(std::sqrt(sq / static_cast<double>(n))),
        .geo_std_unbiased = std::exp(std::sqrt(sq / static_cast<double>(n - 1))),
        .arith_mean = arith,
        .arith_std = std::sqrt(arith_sq / static_cast<double>(n - 1)),
        .median = median,
    };
}

}  // namespace mstat::stats
