#ifndef GEGWP_RNG_HPP
#define GEGWP_RNG_HPP

#include <cstdint>
#include <string_view>

namespace gegwp {

/// Counter-based generator: value i of a stream is a SplitMix64-style
/// finalizer applied to base + i * golden, where base hashes (seed, tag).
/// Random access by counter makes replicate/leaf/position substreams
/// reproducible bit-for-bit regardless of evaluation order.
class CounterRng {
public:
    static CounterRng keyed(std::uint64_t seed, std::string_view tag);

    std::uint64_t bits(std::uint64_t counter) const;
    /// Uniform on (0, 1), 53-bit resolution, never 0 or 1.
    double uniform(std::uint64_t counter) const;
    /// Standard normal via the inverse CDF (deterministic, one draw per
    /// counter).
    double gaussian(std::uint64_t counter) const;

private:
    std::uint64_t base_ = 0;
};

/// Inverse standard normal CDF (rational initial guess plus one Halley
/// refinement against erfc; accurate to full double precision).
double inverse_normal_cdf(double p);

} // namespace gegwp

#endif
