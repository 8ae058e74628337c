#ifndef GEGWP_GEGENBAUER_HPP
#define GEGWP_GEGENBAUER_HPP

#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "gegwp/frequency.hpp"

namespace gegwp {

struct GegenbauerFactor {
    double d;        // memory parameter
    Frequency nu;    // singular frequency, cycles/sample
};

/// k-factor seasonal long-memory model with spectral density
///   f(l) = sigma2/(2 pi) * prod_i [4 (cos 2 pi l - cos 2 pi nu_i)^2]^(-d_i).
///
/// Stationarity requires 0 < d_i < 1/2 for interior nu_i and 0 < d_i < 1/4
/// at nu_i in {0, 1/2}; frequencies must be pairwise distinct.  The default
/// sigma2 = 2 pi makes the white-noise density identically 1.
class GegenbauerModel {
public:
    explicit GegenbauerModel(std::vector<GegenbauerFactor> factors,
                             double sigma2 = 2.0 * std::numbers::pi);

    const std::vector<GegenbauerFactor>& factors() const { return factors_; }
    double sigma2() const { return sigma2_; }
    int k() const { return static_cast<int>(factors_.size()); }

private:
    std::vector<GegenbauerFactor> factors_;
    double sigma2_;
};

/// Spectral density at lambda in [0, 1/2].  Throws SingularFrequency when
/// lambda coincides (within 1e-14) with one of the model frequencies.
double psd(const GegenbauerModel& model, double lambda);

/// Band-pass variance beta^2_{j,p} = 2 * integral of f over
/// [p/2^(j+1), (p+1)/2^(j+1)], with the integration split at interior
/// singularities and endpoint singularities removed by the change of
/// variable u = |l - nu|^(1-2d) for the dominant local factor.
double band_pass_variance(const GegenbauerModel& model, int j, int p,
                          double rel_tol = 1e-8);

struct AcvTable {
    std::vector<double> gamma;   // gamma(0..h_max)
    double rel_tol = 0.0;

    double operator()(int h) const { return gamma[static_cast<size_t>(h < 0 ? -h : h)]; }
    double rho(int h) const { return (*this)(h) / gamma[0]; }
    int max_lag() const { return static_cast<int>(gamma.size()) - 1; }
};

/// gamma(h) = 2 * integral_0^(1/2) f(l) cos(2 pi l h) dl for h = 0..h_max,
/// by the same singularity-split quadrature.
AcvTable autocovariance(const GegenbauerModel& model, int h_max,
                        double rel_tol = 1e-7);

/// Large-lag envelope reference h^(2d-1) cos(2 pi nu h) (unnormalized).
double acv_asymptote(double d, double nu, double h);

/// Symmetric Toeplitz covariance Gamma(s,t) = gamma(|s-t|) with a shifted
/// Cholesky check that the smallest eigenvalue is >= -1e-8 * gamma(0).
Eigen::MatrixXd covariance_matrix(const GegenbauerModel& model, int N,
                                  double rel_tol = 1e-7);

} // namespace gegwp

#endif
