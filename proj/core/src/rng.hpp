#pragma once

#include <cstdint>

// Internal deterministic RNG plumbing. Not installed: the public surface
// is dist::sample and the mc checks, which are pinned to this stream so
// that identical seeds replay bit-identically on every platform.

namespace mstat::detail {

inline std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based stream split: replicate i of a master seed gets its own
/// statistically independent seed, independent of execution order.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) noexcept {
    std::uint64_t s = master ^ (0x9E3779B97F4A7C15ULL * (index + 1));
    return splitmix64_next(s);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next_u64() noexcept { return splitmix64_next(state_); }

    /// Uniform draw strictly inside (0, 1): 53 random bits centered on
    /// half-ulp offsets, so log/quantile transforms never see 0 or 1.
    double next_uniform() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

/// Inverse standard normal cdf. Acklam's rational approximation followed
/// by one Halley step against the erfc-based cdf; accurate to a few ulp.
double normal_quantile(double p);

/// Standard normal cdf via erfc.
double normal_cdf(double z);

}  // namespace mstat::detail
