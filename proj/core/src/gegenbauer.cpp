#include "gegwp/gegenbauer.hpp"

#include <cmath>

#include <Eigen/Cholesky>

#include "gegwp/errors.hpp"
#include "gegwp/quadrature.hpp"

namespace gegwp {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSingularEps = 1e-14;
} // namespace

GegenbauerModel::GegenbauerModel(std::vector<GegenbauerFactor> factors, double sigma2)
    : factors_(std::move(factors)), sigma2_(sigma2) {
    if (sigma2_ <= 0.0) throw Error("sigma2 must be positive");
    for (const auto& f : factors_) {
        double nu = f.nu.value;
        if (nu < 0.0 || nu > 0.5)
            throw InvalidFrequency("Gegenbauer frequency outside [0, 1/2]");
        bool edge = nu < kSingularEps || std::fabs(nu - 0.5) < kSingularEps;
        double dmax = edge ? 0.25 : 0.5;
        if (!(f.d > 0.0 && f.d < dmax))
            throw InvalidFrequency("memory parameter d=" + std::to_string(f.d) +
                                   " violates stationarity for nu=" + std::to_string(nu));
    }
    for (std::size_t i = 0; i < factors_.size(); ++i)
        for (std::size_t j = i + 1; j < factors_.size(); ++j)
            if (std::fabs(factors_[i].nu.value - factors_[j].nu.value) < kSingularEps)
                throw DuplicateFrequency("Gegenbauer frequencies must be distinct");
}

double psd(const GegenbauerModel& model, double lambda) {
    double v = model.sigma2() / (2.0 * kPi);
    for (const auto& f : model.factors()) {
        double nu = f.nu.value;
        if (std::fabs(lambda - nu) < kSingularEps)
            throw SingularFrequency("psd evaluated at singular frequency " +
                                    std::to_string(nu));
        double base = 2.0 * std::fabs(std::cos(2.0 * kPi * lambda) - std::cos(2.0 * kPi * nu));
        v *= std::pow(base, -2.0 * f.d);
    }
    return v;
}

double band_pass_variance(const GegenbauerModel& model, int j, int p, double rel_tol) {
    if (p < 0 || p >= (1 << j)) throw DimensionMismatch("packet index out of range");
    double a = std::ldexp(static_cast<double>(p), -(j + 1));
    double b = std::ldexp(static_cast<double>(p + 1), -(j + 1));
    return 2.0 * integrate_psd_cos(model, a, b, 0, rel_tol);
}

AcvTable autocovariance(const GegenbauerModel& model, int h_max, double rel_tol) {
    if (h_max < 0) throw DimensionMismatch("h_max must be nonnegative");
    AcvTable table;
    table.rel_tol = rel_tol;
    table.gamma.resize(static_cast<size_t>(h_max) + 1);
    for (int h = 0; h <= h_max; ++h)
        table.gamma[static_cast<size_t>(h)] =
            2.0 * integrate_psd_cos(model, 0.0, 0.5, h, rel_tol);
    if (!(table.gamma[0] > 0.0))
        throw QuadratureFailure("autocovariance came out with nonpositive gamma(0)");
    for (int h = 1; h <= h_max; ++h)
        if (std::fabs(table.gamma[static_cast<size_t>(h)]) >
            table.gamma[0] * (1.0 + 1e-9))
            throw QuadratureFailure("autocovariance violates |gamma(h)| <= gamma(0)");
    return table;
}

double acv_asymptote(double d, double nu, double h) {
    return std::pow(h, 2.0 * d - 1.0) * std::cos(2.0 * kPi * nu * h);
}

Eigen::MatrixXd covariance_matrix(const GegenbauerModel& model, int N, double rel_tol) {
    if (N < 1) throw DimensionMismatch("N must be positive");
    AcvTable acv = autocovariance(model, N - 1, rel_tol);
    Eigen::MatrixXd G(N, N);
    for (int s = 0; s < N; ++s)
        for (int t = 0; t < N; ++t) G(s, t) = acv(s - t);
    // positive semidefinite up to quadrature noise: Cholesky of the shifted
    // matrix succeeds iff the smallest eigenvalue is >= -1e-8 * gamma(0)
    Eigen::MatrixXd shifted = G + 1e-8 * acv(0) * Eigen::MatrixXd::Identity(N, N);
    Eigen::LLT<Eigen::MatrixXd> llt(shifted);
    if (llt.info() != Eigen::Success)
        throw NonPositiveDefinite("autocovariance table is not positive semidefinite");
    return G;
}

} // namespace gegwp
