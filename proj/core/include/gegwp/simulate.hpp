#ifndef GEGWP_SIMULATE_HPP
#define GEGWP_SIMULATE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gegwp/gegenbauer.hpp"
#include "gegwp/rng.hpp"
#include "gegwp/wpt.hpp"

namespace gegwp {

struct SimConfig {
    GegenbauerModel model;
    WpTree tree;
    QmfPair filter;
    std::uint64_t seed = 0;
    int replicates = 1;
    double quad_tol = 1e-8;
};

/// Packet-domain simulator: per leaf (j,p), draw 2^(J-j) independent
/// N(0, 2^j beta^2_{j,p}) coefficients and apply the inverse transform.
/// Replicate r draws from the substream with counters r*N + position, so
/// output is deterministic in (seed, r) and independent of scheduling.
std::vector<std::vector<double>> simulate_wp(const SimConfig& config);

/// Exact Gaussian sampling through the Durbin-Levinson recursion on the true
/// autocovariance: X_t is drawn from its exact conditional law given the
/// previous samples.  Throws NonPositiveDefinite when the innovation
/// variance collapses (a numerically broken ACV).
std::vector<std::vector<double>> simulate_hosking(const GegenbauerModel& model, int N,
                                                  std::uint64_t seed, int M,
                                                  double quad_tol = 1e-7);

/// One Durbin-Levinson path over a fixed ACV; counters start at counter0.
std::vector<double> durbin_levinson_sample(std::span<const double> gamma, int N,
                                           const CounterRng& rng,
                                           std::uint64_t counter0);

enum class AcvEstimator { unbiased, biased };

/// Sample autocovariance with the sample mean removed; `unbiased` divides by
/// N-h, `biased` by N.
std::vector<double> sample_acv(std::span<const double> x, int max_lag,
                               AcvEstimator estimator);

} // namespace gegwp

#endif
