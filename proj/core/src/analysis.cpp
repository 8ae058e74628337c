#include "gegwp/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "gegwp/errors.hpp"

namespace gegwp {

double hs_norm_sq(const Eigen::MatrixXd& m) { return m.squaredNorm(); }

Eigen::MatrixXd wp_covariance(const Eigen::MatrixXd& gamma, const WpTree& tree,
                              const QmfPair& filter) {
    const int N = 1 << tree.max_depth();
    if (gamma.rows() != N || gamma.cols() != N)
        throw DimensionMismatch("covariance must be 2^J x 2^J for the tree depth");
    Eigen::MatrixXd W = transform_matrix(tree, filter, N);
    Eigen::MatrixXd out = W.transpose() * gamma * W;
    return 0.5 * (out + out.transpose());
}

Eigen::MatrixXd correlation_from_covariance(const Eigen::MatrixXd& gamma) {
    const auto N = gamma.rows();
    if (gamma.cols() != N) throw DimensionMismatch("covariance must be square");
    Eigen::VectorXd inv_sd(N);
    for (Eigen::Index i = 0; i < N; ++i) {
        double v = gamma(i, i);
        if (!(v > 0.0)) throw ZeroVariance("nonpositive variance on the diagonal");
        inv_sd(i) = 1.0 / std::sqrt(v);
    }
    Eigen::MatrixXd omega = inv_sd.asDiagonal() * gamma * inv_sd.asDiagonal();
    for (Eigen::Index i = 0; i < N; ++i) omega(i, i) = 1.0;
    return omega;
}

double lambda_weight(const Eigen::MatrixXd& omega) {
    const auto N = omega.rows();
    if (omega.cols() != N || N < 2) throw DimensionMismatch("need a square matrix, N >= 2");
    Eigen::MatrixXd diff = omega - Eigen::MatrixXd::Identity(N, N);
    return hs_norm_sq(diff) / static_cast<double>(N - 1);
}

ScoreReport score_S(const GegenbauerModel& model, const WpTree& tree,
                    const QmfPair& filter, int N, double quad_tol) {
    Eigen::MatrixXd gamma = covariance_matrix(model, N, quad_tol);
    Eigen::MatrixXd omega = correlation_from_covariance(gamma);
    ScoreReport rep;
    rep.basis = tree_to_json(tree);
    rep.leaf_cnt = tree.leaf_count();
    rep.lambda = lambda_weight(omega);
    Eigen::MatrixXd omega_b = correlation_from_covariance(wp_covariance(gamma, tree, filter));
    rep.hs_error = hs_norm_sq(omega_b - Eigen::MatrixXd::Identity(N, N));
    rep.S = rep.hs_error + rep.lambda * rep.leaf_cnt;
    return rep;
}

ScoreReport score_B(const GegenbauerModel& model, const WpTree& tree,
                    const QmfPair& filter, int N, int M, std::uint64_t seed,
                    SimMethod method, double quad_tol) {
    if ((1 << tree.max_depth()) != N) throw DimensionMismatch("N must equal 2^J");
    const int L = N / 2;   // averaged sample ACV goes to lag N/2

    AcvTable acv = autocovariance(model, N - 1, quad_tol);
    Eigen::MatrixXd omega_exact(L + 1, L + 1);
    for (int s = 0; s <= L; ++s)
        for (int t = 0; t <= L; ++t) omega_exact(s, t) = acv.rho(s - t);

    std::vector<std::vector<double>> series;
    if (method == SimMethod::wp) {
        series = simulate_wp({model, tree, filter, seed, M, quad_tol});
    } else {
        series = simulate_hosking(model, N, seed, M, quad_tol);
    }
    // per-replicate squared HS deviation, averaged over the M estimates;
    // averaging the ACVs before taking the norm would shrink the statistic
    // by ~1/M and make it depend on the replicate budget
    double b = 0.0;
    Eigen::MatrixXd omega_hat(L + 1, L + 1);
    for (const auto& x : series) {
        auto est = sample_acv(x, L, AcvEstimator::unbiased);
        for (int s = 0; s <= L; ++s)
            for (int t = 0; t <= L; ++t)
                omega_hat(s, t) = est[static_cast<size_t>(std::abs(s - t))] / est[0];
        b += hs_norm_sq(omega_exact - omega_hat);
    }
    b /= static_cast<double>(M);

    ScoreReport rep;
    rep.basis = tree_to_json(tree);
    rep.leaf_cnt = tree.leaf_count();
    rep.M = M;
    rep.seed = seed;
    Eigen::MatrixXd omega_full(N, N);
    for (int s = 0; s < N; ++s)
        for (int t = 0; t < N; ++t) omega_full(s, t) = acv.rho(s - t);
    rep.lambda = lambda_weight(omega_full);
    rep.B = b;
    rep.B_pen = b + rep.lambda * rep.leaf_cnt;
    return rep;
}

int vanishing_R(int p, int j, int q) {
    if (p < 0 || j < 0 || p >= (1 << j)) throw DimensionMismatch("bad packet index");
    if (p == 0) return 1;
    int ones = 0;
    for (int b = 0; b < j; ++b) ones += (p >> b) & 1;
    return q * ones;
}

namespace {

double predicted_exponent(const GegenbauerModel& model, WpNode a, WpNode b, int q,
                          int& Ra, int& Rb) {
    double d = model.factors().front().d;
    Ra = vanishing_R(a.p, a.j, q);
    Rb = vanishing_R(b.p, b.j, q);
    if (a.p != 0 && b.p != 0) return 2.0 * d - 1.0 - Ra - Rb;
    if (a.p == 0 && b.p == 0) return 2.0 * d - 1.0;
    return 2.0 * d - 1.0 - (a.p == 0 ? Rb : Ra);
}

} // namespace

std::vector<DecayFit> decay_check(const GegenbauerModel& model, const QmfPair& filter,
                                  const WpTree& tree, int N, double quad_tol) {
    if (model.k() != 1)
        throw DimensionMismatch("decay predictions are stated for 1-factor models");
    if ((1 << tree.max_depth()) != N) throw DimensionMismatch("N must equal 2^J");

    Eigen::MatrixXd gamma = covariance_matrix(model, N, quad_tol);
    // entries below the quadrature noise are not measurements; fitting them
    // would report the slope of noise
    const double floor = std::max(1e-12, 100.0 * quad_tol) * gamma(0, 0);
    Eigen::MatrixXd gamma_b = wp_covariance(gamma, tree, filter);
    gamma.resize(0, 0);

    // leaf offsets in the canonical coefficient layout
    std::vector<int> offset(tree.leaves().size() + 1, 0);
    for (std::size_t i = 0; i < tree.leaves().size(); ++i)
        offset[i + 1] = offset[i] + (1 << (tree.max_depth() - tree.leaves()[i].j));

    const int nstar = filter.support_radius();
    std::vector<DecayFit> fits;
    bool any_pair = false;
    for (std::size_t ia = 0; ia < tree.leaves().size(); ++ia) {
        for (std::size_t ib = ia; ib < tree.leaves().size(); ++ib) {
            WpNode a = tree.leaves()[ia], b = tree.leaves()[ib];
            if (a.p == 0 && b.p == 0 && a.j != b.j) continue;  // stated for equal scales
            double radius = (nstar + 1.0) * ((1 << a.j) + (1 << b.j));
            std::vector<double> lx, ly;
            int la = 1 << (tree.max_depth() - a.j);
            int lb = 1 << (tree.max_depth() - b.j);
            for (int k1 = 0; k1 < la; ++k1) {
                for (int k2 = 0; k2 < lb; ++k2) {
                    if (ia == ib && k2 <= k1) continue;
                    double alpha = std::ldexp(static_cast<double>(k1), a.j) -
                                   std::ldexp(static_cast<double>(k2), b.j);
                    double aa = std::fabs(alpha);
                    if (aa <= radius || aa > N / 2.0) continue;
                    any_pair = true;
                    double cov = std::fabs(gamma_b(offset[ia] + k1, offset[ib] + k2));
                    if (cov < floor) continue;
                    lx.push_back(std::log(aa));
                    ly.push_back(std::log(cov));
                }
            }
            if (lx.size() < 8) continue;
            double mx = 0, my = 0;
            for (std::size_t i = 0; i < lx.size(); ++i) { mx += lx[i]; my += ly[i]; }
            mx /= lx.size(); my /= ly.size();
            double sxx = 0, sxy = 0;
            for (std::size_t i = 0; i < lx.size(); ++i) {
                sxx += (lx[i] - mx) * (lx[i] - mx);
                sxy += (lx[i] - mx) * (ly[i] - my);
            }
            if (sxx == 0.0) continue;
            DecayFit fit;
            fit.prediction.a = a;
            fit.prediction.b = b;
            fit.prediction.support_radius = radius;
            fit.prediction.predicted =
                predicted_exponent(model, a, b, filter.q, fit.prediction.R_a,
                                   fit.prediction.R_b);
            fit.fitted = sxy / sxx;
            fit.pairs = static_cast<int>(lx.size());
            fits.push_back(fit);
        }
    }
    if (!any_pair)
        throw InsufficientPairs("no coefficient pair satisfies the support condition");
    return fits;
}

} // namespace gegwp
