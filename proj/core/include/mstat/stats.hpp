#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace mstat::stats {

/// An ordered series of strictly positive observations. Positivity is
/// checked once at construction; every multiplicative statistic relies
/// on it.
class Sample {
public:
    /// Throws std::domain_error naming the first offending index if any
    /// value is nonpositive or non-finite; std::invalid_argument if empty.
    explicit Sample(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

private:
    std::vector<double> values_;
};

enum class VarianceMode { biased, unbiased };

/// Geometric mean exp((1/n)Σ ln x_i), accumulated in log space.
double geo_mean(const Sample& s);

/// Geometric variance exp((1/d)Σ ln²(x_i/ḡ)), d = n (biased) or n-1.
double geo_var(const Sample& s, VarianceMode mode);

/// Geometric standard deviation exp(sqrt((1/d)Σ ln²(x_i/ḡ))).
/// Not the square root of geo_var.
double geo_std(const Sample& s, VarianceMode mode);

/// Multiplicative k-interval (m_g·s_g^{-k}, m_g·s_g^{k}).
std::pair<double, double> k_interval(double m_g, double s_g, int k);

/// Additive-multiplicative covariance estimator
/// exp((1/n)Σ (x_i - x̄)(ln y_i - mean ln y)). xs may hold any reals.
double addmult_cov(std::span<const double> xs, const Sample& ys);

/// Square multiplicative divergence e^{ln² t} = t^{ln t}.
double mult_divergence(double t);

/// Absolute multiplicative divergence e^{|ln t|} = max(t, 1/t).
double mult_abs_divergence(double t);

struct MultiplicativeSummary {
    std::size_t n;
    double geo_mean;
    double geo_var_biased;
    double geo_var_unbiased;
    double geo_std_biased;
    double geo_std_unbiased;
    double arith_mean;
    double arith_std;  // unbiased (n-1)
    double median;
};

/// Full descriptive bundle for one sample; requires n >= 2.
MultiplicativeSummary summarize(const Sample& s);

}  // namespace mstat::stats
