#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mstat/distributions.hpp"
#include "mstat/stats.hpp"

namespace mstat::cli {

using json = nlohmann::ordered_json;

/// Builds a DistributionSpec from CLI-style parameters, rejecting
/// missing or extraneous ones with the violated constraint in the
/// message. Family names: lognormal, exponential, truncated-exponential,
/// pareto, uniform, power.
struct FamilyParams {
    std::optional<double> m;
    std::optional<double> sigma;
    std::optional<double> lambda;
    std::optional<double> mu;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> a;
    std::optional<double> b;
};
dist::DistributionSpec make_spec(const std::string& family, const FamilyParams& p);

json param_set_to_json(const dist::ParamSet& ps);

json cmd_describe(const std::string& file, bool percent);

struct ReturnsOptions {
    std::vector<int> ks = {1, 2, 3};
    std::optional<std::pair<int, int>> train;
    int horizon = 5;
    bool percent = false;
};
json cmd_returns(const std::string& file, const ReturnsOptions& opt);

struct TrendOptions {
    int t_origin = 1;
    int bins = 6;
    bool percent = false;
};
json cmd_trend(const std::string& file, const TrendOptions& opt);

json cmd_dist(const dist::DistributionSpec& spec, bool numeric_check);

struct MatchOptions {
    double lambda = 1.0;
    double scan_lo = 1.0;
    double scan_hi = 100.0;
    int tail_points = 200;
};
json cmd_match(const MatchOptions& opt);

struct McOptions {
    std::string check;  // geo-mean-unbiased | dg-of-mean | geo-var-unbiased | scan-inequalities
    dist::DistributionSpec dist;
    std::optional<dist::DistributionSpec> dist_b;  // scan-inequalities only
    std::size_t n = 10;
    std::size_t reps = 100000;
    std::size_t trials = 10000;
    std::size_t sample_size = 16;
    std::uint64_t seed = 0;
    stats::VarianceMode mode = stats::VarianceMode::unbiased;
};

struct McResult {
    json output;
    bool pass;  // within the check's pinned tolerance
};
McResult cmd_mc(const McOptions& opt);

/// Pinned relative tolerances for the estimator checks.
double mc_tolerance(const std::string& check);

struct PlotOptions {
    std::optional<double> min;
    std::optional<double> max;
    int points = 0;  // 0 = figure default
    std::optional<double> lambda;
};
/// CSV series for figures 1-4.
std::string cmd_plotdata(int figure, const PlotOptions& opt);

/// Human-readable key/value rendering with 4-decimal rounding.
std::string render_table(const json& j);

}  // namespace mstat::cli
