#include "mstat/mc.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rng.hpp"

namespace mstat::mc {

namespace {

void validate_config(const McConfig& cfg) {
    dist::validate(cfg.dist);
    if (cfg.n < 1) {
        throw std::invalid_argument("McConfig: n must be >= 1");
    }
    if (cfg.reps < 1) {
        throw std::invalid_argument("McConfig: reps must be >= 1");
    }
}

/// Fills out[i] = job(i) for i in [0, reps). Replicates are independent;
/// the buffer is partitioned by index, so results and any later
/// index-order reduction are identical whatever the thread count.
void map_replicates(std::size_t reps, const std::function<double(std::size_t)>& job,
                    std::vector<double>& out) {
    out.resize(reps);
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers =
        reps >= 2048 ? std::max<std::size_t>(1, std::min<std::size_t>(hw, 8)) : 1;
    if (workers == 1) {
        for (std::size_t i = 0; i < reps; ++i) {
            out[i] = job(i);
        }
        return;
    }

    std::exception_ptr failure;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (reps + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(reps, begin + chunk);
        pool.emplace_back([&, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i) {
                    out[i] = job(i);
                }
            } catch (...) {
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

double mean_in_index_order(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) {
        s += x;
    }
    return s / static_cast<double>(v.size());
}

double population_variance(const std::vector<double>& v) {
    const double m = mean_in_index_order(v);
    double s = 0.0;
    for (double x : v) {
        s += (x - m) * (x - m);
    }
    return s / static_cast<double>(v.size());
}

double log_geo_mean_of_replicate(const dist::DistributionSpec& d, std::size_t n,
                                 std::uint64_t seed) {
    const stats::Sample s = dist::sample(d, n, seed);
    double sum = 0.0;
    for (double x : s.values()) {
        sum += std::log(x);
    }
    return sum / static_cast<double>(n);
}

McReport make_report(double estimate, double target, std::size_t reps) {
    return McReport{estimate, target, std::abs(estimate - target) / std::abs(target), reps};
}

}  // namespace

McReport check_geo_mean_unbiased(const McConfig& cfg) {
    validate_config(cfg);
    std::vector<double> log_means;
    map_replicates(
        cfg.reps,
        [&cfg](std::size_t i) {
            return log_geo_mean_of_replicate(cfg.dist, cfg.n, detail::split_seed(cfg.seed, i));
        },
        log_means);
    const double estimate = std::exp(mean_in_index_order(log_means));
    return make_report(estimate, dist::params(cfg.dist).geo_mean, cfg.reps);
}

McReport check_dg_of_geo_mean(const McConfig& cfg) {
    validate_config(cfg);
    std::vector<double> log_means;
    map_replicates(
        cfg.reps,
        [&cfg](std::size_t i) {
            return log_geo_mean_of_replicate(cfg.dist, cfg.n, detail::split_seed(cfg.seed, i));
        },
        log_means);
    const double estimate = std::exp(population_variance(log_means));
    const double target =
        std::pow(dist::params(cfg.dist).geo_var, 1.0 / static_cast<double>(cfg.n));
    return make_report(estimate, target, cfg.reps);
}

McReport check_geo_var_unbiased(const McConfig& cfg, stats::VarianceMode mode) {
    validate_config(cfg);
    if (cfg.n < 2) {
        throw std::invalid_argument("check_geo_var_unbiased: n must be >= 2");
    }
    std::vector<double> log_vars;
    map_replicates(
        cfg.reps,
        [&cfg, mode](std::size_t i) {
            const stats::Sample s =
                dist::sample(cfg.dist, cfg.n, detail::split_seed(cfg.seed, i));
            return std::log(stats::geo_var(s, mode));
        },
        log_vars);
    const double estimate = std::exp(mean_in_index_order(log_vars));
    return make_report(estimate, dist::params(cfg.dist).geo_var, cfg.reps);
}

InequalityScan scan_inequalities(const dist::DistributionSpec& dist_a,
                                 const dist::DistributionSpec& dist_b,
                                 std::size_t sample_size, std::size_t trials,
                                 std::uint64_t seed) {
    dist::validate(dist_a);
    dist::validate(dist_b);
    if (sample_size < 2) {
        throw std::invalid_argument("scan_inequalities: sample_size must be >= 2");
    }
    if (trials < 1) {
        throw std::invalid_argument("scan_inequalities: trials must be >= 1");
    }

    InequalityScan scan{0, 0, std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity()};
    for (std::size_t t = 0; t < trials; ++t) {
        const stats::Sample x =
            dist::sample(dist_a, sample_size, detail::split_seed(seed, 2 * t));
        const stats::Sample y =
            dist::sample(dist_b, sample_size, detail::split_seed(seed, 2 * t + 1));

        std::vector<double> sum(sample_size);
        for (std::size_t i = 0; i < sample_size; ++i) {
            sum[i] = x[i] + y[i];
        }
        const stats::Sample xy(std::move(sum));

        const double lhs_mean = stats::geo_mean(xy);
        const double rhs_mean = stats::geo_mean(x) + stats::geo_mean(y);
        const double margin_mean = lhs_mean - rhs_mean;
        scan.worst_margin_superadd = std::min(scan.worst_margin_superadd, margin_mean);
        if (margin_mean < -1e-12 * std::max({1.0, lhs_mean, rhs_mean})) {
            ++scan.violations_superadd;
        }

        const double lhs_std = stats::geo_std(x, stats::VarianceMode::biased) *
                               stats::geo_std(y, stats::VarianceMode::biased);
        const double rhs_std = stats::geo_std(xy, stats::VarianceMode::biased);
        const double margin_std = lhs_std - rhs_std;
        scan.worst_margin_gdisp = std::min(scan.worst_margin_gdisp, margin_std);
        if (margin_std < -1e-12 * std::max({1.0, lhs_std, rhs_std})) {
            ++scan.violations_gdisp;
        }
    }
    return scan;
}

}  // namespace mstat::mc
