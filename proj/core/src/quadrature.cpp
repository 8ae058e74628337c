#include "gegwp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gegwp/errors.hpp"
#include "gegwp/gegenbauer.hpp"

namespace gegwp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingularEps = 1e-14;

double simpson(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa, double m,
             double fm, double b, double fb, double S, double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double Sl = simpson(a, fa, flm, m, fm);
    double Sr = simpson(m, fm, frm, b, fb);
    double err = Sl + Sr - S;
    if (std::fabs(err) <= 15.0 * tol) return Sl + Sr + err / 15.0;
    if (depth <= 0)
        throw QuadratureFailure("adaptive refinement stalled above tolerance");
    return adapt(f, a, fa, lm, flm, m, fm, Sl, 0.5 * tol, depth - 1) +
           adapt(f, m, fm, rm, frm, b, fb, Sr, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double S = simpson(a, fa, fm, b, fb);
    return adapt(f, a, fa, m, fm, b, fb, S, abs_tol, max_depth);
}

namespace detail {

// Local exponent of the |l - nu|^-e blowup: 2d interior, 4d where the
// symmetric singularity pair merges (nu = 0 or 1/2).
double singular_exponent(const GegenbauerFactor& fac) {
    double nu = fac.nu.value;
    bool edge = nu < kSingularEps || std::fabs(nu - 0.5) < kSingularEps;
    return edge ? 4.0 * fac.d : 2.0 * fac.d;
}

// f(l) * |l - nu_m|^(e_m): the regular remainder near factor m, evaluable
// at l = nu_m itself.
double regular_part(const GegenbauerModel& model, double lambda, int m) {
    const auto& facs = model.factors();
    double v = model.sigma2() / (2.0 * kPi);
    for (int i = 0; i < static_cast<int>(facs.size()); ++i) {
        if (i == m) continue;
        double nu = facs[static_cast<size_t>(i)].nu.value;
        double base = 2.0 * std::fabs(std::cos(2.0 * kPi * lambda) - std::cos(2.0 * kPi * nu));
        v *= std::pow(base, -2.0 * facs[static_cast<size_t>(i)].d);
    }
    const auto& fac = facs[static_cast<size_t>(m)];
    double nu = fac.nu.value;
    if (nu < kSingularEps || std::fabs(nu - 0.5) < kSingularEps) {
        double x = nu < kSingularEps ? lambda : lambda - 0.5;
        double s = nu < kSingularEps ? std::sin(kPi * lambda) : std::cos(kPi * lambda);
        double ratio = std::fabs(x) > 1e-30 ? std::fabs(s / x) : kPi;
        v *= std::pow(4.0 * ratio * ratio, -2.0 * fac.d);
    } else {
        double t = lambda - nu;
        double ratio = std::fabs(t) > 1e-30 ? std::fabs(std::sin(kPi * t) / t) : kPi;
        v *= std::pow(4.0 * std::fabs(std::sin(kPi * (lambda + nu))) * ratio, -2.0 * fac.d);
    }
    return v;
}

} // namespace detail

namespace {

// integral over [lo, lo+w] (side=+1) or [hi-w, hi] (side=-1) touching the
// singularity of factor m at nu, after u = |l - nu|^(1-e):
//   1/(1-e) * int_0^(w^(1-e)) R(nu + side * u^(1/(1-e))) cos(2 pi l h) du
double singular_piece(const GegenbauerModel& model, int m, double nu, int side,
                      double w, int h, double abs_tol) {
    double e = detail::singular_exponent(model.factors()[static_cast<size_t>(m)]);
    double U = std::pow(w, 1.0 - e);
    auto g = [&](double u) {
        double t = u > 0 ? std::pow(u, 1.0 / (1.0 - e)) : 0.0;
        double lam = nu + side * t;
        return detail::regular_part(model, lam, m) *
               std::cos(2.0 * kPi * lam * h) / (1.0 - e);
    };
    return adaptive_simpson(g, 0.0, U, abs_tol);
}

struct Piece {
    double lo, hi;
    int sing_lo = -1;   // factor index singular at lo, or -1
    int sing_hi = -1;
};

std::vector<Piece> split_at_singularities(const GegenbauerModel& model, double a,
                                          double b) {
    const auto& facs = model.factors();
    std::vector<double> cuts{a, b};
    for (const auto& f : facs) {
        double nu = f.nu.value;
        if (nu > a + kSingularEps && nu < b - kSingularEps) cuts.push_back(nu);
    }
    std::sort(cuts.begin(), cuts.end());
    auto factor_at = [&](double x) {
        for (int i = 0; i < static_cast<int>(facs.size()); ++i)
            if (std::fabs(facs[static_cast<size_t>(i)].nu.value - x) < kSingularEps) return i;
        return -1;
    };
    std::vector<Piece> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Piece p{cuts[i], cuts[i + 1], factor_at(cuts[i]), factor_at(cuts[i + 1])};
        if (p.lo >= p.hi) continue;
        if (p.sing_lo >= 0 && p.sing_hi >= 0) {
            double mid = 0.5 * (p.lo + p.hi);
            out.push_back({p.lo, mid, p.sing_lo, -1});
            out.push_back({mid, p.hi, -1, p.sing_hi});
        } else {
            out.push_back(p);
        }
    }
    return out;
}

double regular_range(const GegenbauerModel& model, double lo, double hi, int h,
                     double tol_per_width) {
    if (hi <= lo) return 0.0;
    int chunks = static_cast<int>(std::ceil((hi - lo) * 4.0 * (std::abs(h) + 1)));
    chunks = std::clamp(chunks, 1, 1 << 14);
    auto g = [&](double lam) { return psd(model, lam) * std::cos(2.0 * kPi * lam * h); };
    double total = 0.0;
    for (int c = 0; c < chunks; ++c) {
        double x0 = lo + (hi - lo) * c / chunks;
        double x1 = lo + (hi - lo) * (c + 1) / chunks;
        total += adaptive_simpson(g, x0, x1, tol_per_width * (x1 - x0));
    }
    return total;
}

double integrate_pieces(const GegenbauerModel& model, const std::vector<Piece>& pieces,
                        int h, double abs_tol) {
    double width = 0.0;
    for (const auto& p : pieces) width += p.hi - p.lo;
    double total = 0.0;
    for (const auto& p : pieces) {
        double w = p.hi - p.lo;
        double budget = abs_tol * (w / width);
        if (p.sing_lo >= 0) {
            double nu = model.factors()[static_cast<size_t>(p.sing_lo)].nu.value;
            double w0 = std::min(w, 0.25 / (std::abs(h) + 1.0));
            total += singular_piece(model, p.sing_lo, nu, +1, w0, h, 0.5 * budget);
            total += regular_range(model, p.lo + w0, p.hi, h, 0.5 * budget / std::max(w - w0, 1e-300));
        } else if (p.sing_hi >= 0) {
            double nu = model.factors()[static_cast<size_t>(p.sing_hi)].nu.value;
            double w0 = std::min(w, 0.25 / (std::abs(h) + 1.0));
            total += singular_piece(model, p.sing_hi, nu, -1, w0, h, 0.5 * budget);
            total += regular_range(model, p.lo, p.hi - w0, h, 0.5 * budget / std::max(w - w0, 1e-300));
        } else {
            total += regular_range(model, p.lo, p.hi, h, budget / w);
        }
    }
    return total;
}

} // namespace

double integrate_psd_cos(const GegenbauerModel& model, double a, double b, int h,
                         double rel_tol) {
    auto pieces = split_at_singularities(model, a, b);
    // scale pass: crude non-cancelling magnitude to anchor the absolute budget
    double scale = 0.0;
    for (const auto& p : pieces) {
        double w = p.hi - p.lo;
        int m = p.sing_lo >= 0 ? p.sing_lo : p.sing_hi;
        if (m >= 0) {
            // leading term of the transformed integral: R(nu) * w^(1-e)/(1-e)
            double nu = model.factors()[static_cast<size_t>(m)].nu.value;
            double e = detail::singular_exponent(model.factors()[static_cast<size_t>(m)]);
            scale += detail::regular_part(model, nu, m) * std::pow(w, 1.0 - e) / (1.0 - e);
        } else {
            double mid = 0.5 * (p.lo + p.hi);
            scale += w * (psd(model, p.lo) + 4.0 * psd(model, mid) + psd(model, p.hi)) / 6.0;
        }
    }
    scale = std::max(scale, 1e-300);
    return integrate_pieces(model, pieces, h, rel_tol * scale);
}

} // namespace gegwp
