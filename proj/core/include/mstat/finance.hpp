#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mstat::finance {

/// Year-indexed period rates with derived gross accumulation
/// coefficients a = 1 + i and discount factors v = 1/a.
struct ReturnSeries {
    std::vector<int> years;  // strictly increasing
    std::vector<double> rates;
    std::vector<double> coefficients;
    std::vector<double> discounts;

    std::size_t size() const noexcept { return years.size(); }
};

/// Validates (rates > -1, distinct years), sorts by year, derives
/// coefficients and discounts from the exact rates.
ReturnSeries build_series(std::vector<int> years, std::vector<double> rates);

struct KInterval {
    int k;
    double lo;
    double hi;
};

struct HorizonReport {
    std::size_t n;
    double fv_geometric;   // geo_mean(a)^n, equal to the exact product
    double fv_arithmetic;  // arith_mean(a)^n
    double pv_geometric;   // geo_mean(v)^n
    double pv_arithmetic;  // arith_mean(v)^n
    std::vector<KInterval> k_intervals;  // from the unbiased geometric std
};

HorizonReport horizon_report(const ReturnSeries& series, std::span<const int> ks);

struct Forecast {
    double projected_geometric;   // geo_mean(train a)^horizon
    double projected_arithmetic;  // arith_mean(train a)^horizon
    std::optional<double> realized;  // product of actual coefficients, when present
};

/// Projects over `horizon` periods following train_last; realized is
/// the raw coefficient product over those years when all are in the
/// series.
Forecast forecast(const ReturnSeries& series, int train_first, int train_last, int horizon);

}  // namespace mstat::finance
