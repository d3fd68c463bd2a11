#pragma once

#include <cstdint>
#include <cstddef>

#include "mstat/distributions.hpp"
#include "mstat/stats.hpp"

namespace mstat::mc {

struct McConfig {
    dist::DistributionSpec dist;
    std::size_t n;     // sample size per replicate, >= 1
    std::size_t reps;  // >= 1
    std::uint64_t seed;
};

struct McReport {
    double estimate;
    double target;
    double relative_error;  // |estimate - target| / |target|
    std::size_t reps_used;
};

/// Empirical multiplicative expectation of the geometric-mean estimator
/// against the closed-form geometric mean of the family.
McReport check_geo_mean_unbiased(const McConfig& cfg);

/// Empirical multiplicative variance of the geometric-mean estimator
/// against geo_var(dist)^{1/n}.
McReport check_dg_of_geo_mean(const McConfig& cfg);

/// Empirical multiplicative expectation of the geometric variance
/// estimator against geo_var(dist). The unbiased (n-1) form hits the
/// target; the biased (n) form undershoots by e^{-Var(lnX)/n}
/// asymptotically. Requires n >= 2.
McReport check_geo_var_unbiased(const McConfig& cfg,
                                stats::VarianceMode mode = stats::VarianceMode::unbiased);

struct InequalityScan {
    std::size_t violations_superadd;
    std::size_t violations_gdisp;
    double worst_margin_superadd;  // min of geo_mean(x+y) - geo_mean(x) - geo_mean(y)
    double worst_margin_gdisp;     // min of geo_std(x)·geo_std(y) - geo_std(x+y)
};

/// Draws paired positive samples and counts violations (beyond 1e-12
/// relative slack) of superadditivity of the geometric mean and of the
/// geometric-dispersion product inequality. The latter is an empirical
/// scan, not an asserted theorem.
InequalityScan scan_inequalities(const dist::DistributionSpec& dist_a,
                                 const dist::DistributionSpec& dist_b,
                                 std::size_t sample_size, std::size_t trials,
                                 std::uint64_t seed);

}  // namespace mstat::mc
