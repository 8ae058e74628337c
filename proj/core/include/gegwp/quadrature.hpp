#ifndef GEGWP_QUADRATURE_HPP
#define GEGWP_QUADRATURE_HPP

#include <functional>

namespace gegwp {

class GegenbauerModel;

/// Adaptive Simpson with Richardson correction.  Throws QuadratureFailure
/// when the subdivision depth limit is reached before the local error
/// estimate drops under the (absolute) tolerance budget.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 48);

/// integral_a^b f(l) cos(2 pi l h) dl for a model spectral density, with the
/// interval split at every interior singularity and endpoint-singular pieces
/// integrated after the u = |l - nu|^(1-e) substitution (e the local
/// exponent), which makes the transformed integrand smooth.
double integrate_psd_cos(const GegenbauerModel& model, double a, double b, int h,
                         double rel_tol);

} // namespace gegwp

#endif
