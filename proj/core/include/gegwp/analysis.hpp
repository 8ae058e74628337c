#ifndef GEGWP_ANALYSIS_HPP
#define GEGWP_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "gegwp/gegenbauer.hpp"
#include "gegwp/simulate.hpp"
#include "gegwp/wpt.hpp"

namespace gegwp {

/// Squared Hilbert-Schmidt (Frobenius) norm.
double hs_norm_sq(const Eigen::MatrixXd& m);

/// Exact packet-domain covariance W_B^T Gamma W_B.
Eigen::MatrixXd wp_covariance(const Eigen::MatrixXd& gamma, const WpTree& tree,
                              const QmfPair& filter);

/// Omega(i,j) = Gamma(i,j)/sqrt(Gamma(i,i) Gamma(j,j)); throws ZeroVariance
/// on a nonpositive diagonal entry.
Eigen::MatrixXd correlation_from_covariance(const Eigen::MatrixXd& gamma);

/// lambda = ||Omega - I||_HS^2 / (N - 1), the penalty weight that equates the
/// scores of the finest basis and of the untransformed basis.
double lambda_weight(const Eigen::MatrixXd& omega);

struct ScoreReport {
    std::string basis;
    int leaf_cnt = 0;
    double lambda = 0.0;
    double hs_error = 0.0;               // ||Omega[B] - I||_HS^2
    double S = 0.0;                      // hs_error + lambda * leaf_cnt
    std::optional<double> B;             // simulation scores when computed
    std::optional<double> B_pen;
    int M = 0;
    std::uint64_t seed = 0;
};

/// Exact penalized diagonalization score at length N = 2^J.
ScoreReport score_S(const GegenbauerModel& model, const WpTree& tree,
                    const QmfPair& filter, int N, double quad_tol = 1e-7);

enum class SimMethod { wp, hosking };

/// Simulation score over M replicates: per replicate, the unbiased sample
/// ACV to lag N/2 builds a (N/2+1)-dim Toeplitz correlation matrix, and
/// B is the replicate average of ||Omega - Omega_hat_r||_HS^2 against the
/// exact correlation block.  B_pen adds lambda * leaf count with lambda
/// from the exact N-dim correlation.
ScoreReport score_B(const GegenbauerModel& model, const WpTree& tree,
                    const QmfPair& filter, int N, int M, std::uint64_t seed,
                    SimMethod method = SimMethod::wp, double quad_tol = 1e-7);

/// Packet moment count R_p: q times the number of ones in the j-bit binary
/// expansion of p for p != 0; R_0 = 1.
int vanishing_R(int p, int j, int q);

struct DecayPrediction {
    WpNode a, b;
    int R_a = 0, R_b = 0;
    double predicted = 0.0;      // exponent from the covariance decay bound
    double support_radius = 0.0; // (N*+1)(2^j1 + 2^j2)
};

struct DecayFit {
    DecayPrediction prediction;
    double fitted = 0.0;         // least-squares slope of log|cov| vs log|alpha|
    int pairs = 0;
};

/// Fits empirical decay exponents of |Cov(W_j1^p1(k1), W_j2^p2(k2))| over
/// admissible pairs (|alpha| beyond the support radius, alpha = 2^j1 k1 -
/// 2^j2 k2, capped at N/2 to dodge the periodic wrap) for every leaf pair of
/// the tree.  1-factor models only.  Throws InsufficientPairs when nothing
/// is admissible.
std::vector<DecayFit> decay_check(const GegenbauerModel& model, const QmfPair& filter,
                                  const WpTree& tree, int N, double quad_tol = 1e-7);

} // namespace gegwp

#endif
