#include "gegwp/simulate.hpp"

#include <cmath>

#include "gegwp/errors.hpp"

namespace gegwp {

std::vector<std::vector<double>> simulate_wp(const SimConfig& config) {
    const auto& tree = config.tree;
    const int J = tree.max_depth();
    const std::uint64_t N = std::uint64_t{1} << J;
    if (config.replicates < 1) throw DimensionMismatch("replicates must be >= 1");

    std::vector<double> sigma(tree.leaves().size());
    for (std::size_t i = 0; i < tree.leaves().size(); ++i) {
        const auto& leaf = tree.leaves()[i];
        double beta2 = band_pass_variance(config.model, leaf.j, leaf.p, config.quad_tol);
        sigma[i] = std::sqrt(std::ldexp(std::max(beta2, 0.0), leaf.j));
    }

    auto rng = CounterRng::keyed(config.seed, "wp");
    std::vector<std::vector<double>> out(static_cast<size_t>(config.replicates));
    for (int r = 0; r < config.replicates; ++r) {
        WpCoefficients coeffs{tree, std::vector<std::vector<double>>(sigma.size())};
        std::uint64_t counter = static_cast<std::uint64_t>(r) * N;
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            auto len = std::size_t{1} << (J - tree.leaves()[i].j);
            coeffs.packets[i].resize(len);
            for (std::size_t n = 0; n < len; ++n, ++counter)
                coeffs.packets[i][n] = sigma[i] * rng.gaussian(counter);
        }
        out[static_cast<size_t>(r)] = synthesize(coeffs, config.filter);
    }
    return out;
}

std::vector<double> durbin_levinson_sample(std::span<const double> gamma, int N,
                                           const CounterRng& rng,
                                           std::uint64_t counter0) {
    if (static_cast<int>(gamma.size()) < N)
        throw DimensionMismatch("need gamma up to lag N-1");
    if (!(gamma[0] > 0.0)) throw NonPositiveDefinite("gamma(0) must be positive");

    std::vector<double> x(static_cast<size_t>(N));
    std::vector<double> phi, phi_prev;
    double v = gamma[0];
    x[0] = std::sqrt(v) * rng.gaussian(counter0);
    for (int t = 1; t < N; ++t) {
        // partial autocorrelation step
        double acc = gamma[static_cast<size_t>(t)];
        for (int k = 1; k < t; ++k)
            acc -= phi_prev[static_cast<size_t>(k - 1)] * gamma[static_cast<size_t>(t - k)];
        double phit = acc / v;
        phi.assign(static_cast<size_t>(t), 0.0);
        phi[static_cast<size_t>(t - 1)] = phit;
        for (int k = 1; k < t; ++k)
            phi[static_cast<size_t>(k - 1)] =
                phi_prev[static_cast<size_t>(k - 1)] - phit * phi_prev[static_cast<size_t>(t - 1 - k)];
        v *= (1.0 - phit * phit);
        if (!(v > 0.0))
            throw NonPositiveDefinite("innovation variance collapsed at t=" +
                                      std::to_string(t));
        double mean = 0.0;
        for (int k = 1; k <= t; ++k)
            mean += phi[static_cast<size_t>(k - 1)] * x[static_cast<size_t>(t - k)];
        x[static_cast<size_t>(t)] = mean + std::sqrt(v) * rng.gaussian(counter0 + static_cast<std::uint64_t>(t));
        phi_prev = phi;
    }
    return x;
}

std::vector<std::vector<double>> simulate_hosking(const GegenbauerModel& model, int N,
                                                  std::uint64_t seed, int M,
                                                  double quad_tol) {
    if (N < 1 || M < 1) throw DimensionMismatch("need N >= 1 and M >= 1");
    AcvTable acv = autocovariance(model, N - 1, quad_tol);
    auto rng = CounterRng::keyed(seed, "hosking");
    std::vector<std::vector<double>> out(static_cast<size_t>(M));
    for (int r = 0; r < M; ++r)
        out[static_cast<size_t>(r)] = durbin_levinson_sample(
            acv.gamma, N, rng, static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(N));
    return out;
}

std::vector<double> sample_acv(std::span<const double> x, int max_lag,
                               AcvEstimator estimator) {
    const int N = static_cast<int>(x.size());
    if (max_lag >= N) throw DimensionMismatch("max_lag must be below the series length");
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= N;
    std::vector<double> out(static_cast<size_t>(max_lag) + 1, 0.0);
    for (int h = 0; h <= max_lag; ++h) {
        double s = 0.0;
        for (int t = 0; t + h < N; ++t)
            s += (x[static_cast<size_t>(t)] - mean) * (x[static_cast<size_t>(t + h)] - mean);
        out[static_cast<size_t>(h)] = s / (estimator == AcvEstimator::unbiased ? N - h : N);
    }
    return out;
}

} // namespace gegwp
