#include "mstat/finance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mstat/stats.hpp"

namespace mstat::finance {

namespace {

double arith_mean(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) {
        s += x;
    }
    return s / static_cast<double>(v.size());
}

}  // namespace

ReturnSeries build_series(std::vector<int> years, std::vector<double> rates) {
    if (years.size() != rates.size()) {
        throw std::invalid_argument("build_series: years and rates lengths differ");
    }
    if (years.empty()) {
        throw std::invalid_argument("build_series: at least one period required");
    }

    std::vector<std::size_t> order(years.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&years](std::size_t i, std::size_t j) { return years[i] < years[j]; });

    ReturnSeries s;
    s.years.reserve(years.size());
    s.rates.reserve(years.size());
    s.coefficients.reserve(years.size());
    s.discounts.reserve(years.size());
    for (std::size_t idx : order) {
        const int year = years[idx];
        const double rate = rates[idx];
        if (!s.years.empty() && s.years.back() == year) {
            throw std::domain_error("build_series: duplicate year " + std::to_string(year));
        }
        if (!(rate > -1.0) || !std::isfinite(rate)) {
            throw std::domain_error("build_series: rate for year " + std::to_string(year) +
                                    " must be a finite real > -1 (got " + std::to_string(rate) +
                                    ")");
        }
        s.years.push_back(year);
        s.rates.push_back(rate);
        s.coefficients.push_back(1.0 + rate);
        s.discounts.push_back(1.0 / (1.0 + rate));
    }
    return s;
}

HorizonReport horizon_report(const ReturnSeries& series, std::span<const int> ks) {
    const std::size_t n = series.size();
    if (n < 2) {
        throw std::invalid_argument("horizon_report: requires at least two periods");
    }
    const stats::Sample coeff(series.coefficients);
    const stats::Sample disc(series.discounts);

    const double g_coeff = stats::geo_mean(coeff);
    const double s_hat = stats::geo_std(coeff, stats::VarianceMode::unbiased);

    HorizonReport r;
    r.n = n;
    const auto power = static_cast<double>(n);
    r.fv_geometric = std::pow(g_coeff, power);
    r.fv_arithmetic = std::pow(arith_mean(series.coefficients), power);
    r.pv_geometric = std::pow(stats::geo_mean(disc), power);
    r.pv_arithmetic = std::pow(arith_mean(series.discounts), power);
    r.k_intervals.reserve(ks.size());
    for (int k : ks) {
        const auto [lo, hi] = stats::k_interval(g_coeff, s_hat, k);
        r.k_intervals.push_back({k, lo, hi});
    }
    return r;
}

Forecast forecast(const ReturnSeries& series, int train_first, int train_last, int horizon) {
    if (horizon < 1) {
        throw std::domain_error("forecast: horizon must be >= 1");
    }
    if (train_first > train_last) {
        throw std::invalid_argument("forecast: train range is reversed");
    }

    std::vector<double> train;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series.years[i] >= train_first && series.years[i] <= train_last) {
            train.push_back(series.coefficients[i]);
        }
    }
    if (train.empty()) {
        throw std::invalid_argument("forecast: training window contains no observations");
    }

    Forecast f;
    const auto h = static_cast<double>(horizon);
    f.projected_geometric = std::pow(stats::geo_mean(stats::Sample(train)), h);
    f.projected_arithmetic = std::pow(arith_mean(train), h);

    // Realized return: the raw coefficient product over the horizon years,
    // present only when every year is in the series.
    double product = 1.0;
    int found = 0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const int y = series.years[i];
        if (y > train_last && y <= train_last + horizon) {
            product *= series.coefficients[i];
            ++found;
        }
    }
    if (found == horizon) {
        f.realized = product;
    }
    return f;
}

}  // namespace mstat::finance
