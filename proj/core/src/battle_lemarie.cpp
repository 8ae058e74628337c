#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

#include "gegwp/filters.hpp"

namespace gegwp::detail {

namespace {

// Centered B-spline of odd degree D evaluated at integer n (long double to
// tame the cancellation in the divided-difference form).
long double bspline_int(int D, int n) {
    long double fact = 1.0L;
    for (int k = 2; k <= D; ++k) fact *= k;
    long double s = 0.0L;
    long double binom = 1.0L;
    for (int k = 0; k <= D + 1; ++k) {
        long double t = n + (D + 1) / 2.0L - k;
        if (t > 0) {
            long double tp = 1.0L;
            for (int e = 0; e < D; ++e) tp *= t;
            s += (k % 2 == 0 ? 1.0L : -1.0L) * binom * tp;
        }
        binom = binom * (D + 1 - k) / (k + 1);
    }
    return s / fact;
}

QmfPair build(int q) {
    // Orthonormalized spline scaling filter of degree m = q-1:
    //   H(l) = sqrt(2) cos(pi l)^(m+1) sqrt(A(l)/A(2l)),
    // where A is the symbol of the spline autocorrelation, i.e. the
    // centered B-spline of degree 2m+1 sampled at the integers.  The taps
    // are recovered from a length-2^14 frequency grid and cut at 1e-14 so
    // the periodized filter stays orthonormal to ~1e-12.  (The effective
    // support at the 1e-9 level is what gets reported downstream.)
    const int m = q - 1;
    const int D = 2 * m + 1;
    const int G = 1 << 14;
    const double pi = std::numbers::pi;

    std::vector<double> acorr(static_cast<size_t>((D + 1) / 2 + 1));
    for (size_t n = 0; n < acorr.size(); ++n)
        acorr[n] = static_cast<double>(bspline_int(D, static_cast<int>(n)));

    auto symbol = [&](double lam) {
        double s = acorr[0];
        for (size_t n = 1; n < acorr.size(); ++n)
            s += 2.0 * acorr[n] * std::cos(2.0 * pi * lam * static_cast<double>(n));
        return s;
    };

    std::vector<double> H(G);
    for (int g = 0; g < G; ++g) {
        double lam = static_cast<double>(g) / G;
        double c = std::cos(pi * lam);
        double cp = 1.0;
        for (int e = 0; e < m + 1; ++e) cp *= c;
        H[static_cast<size_t>(g)] =
            std::sqrt(2.0) * cp * std::sqrt(symbol(lam) / symbol(2.0 * lam));
    }

    const int nmax = 400;
    std::vector<double> taps(2 * nmax + 1);
    for (int n = -nmax; n <= nmax; ++n) {
        double s = 0.0;
        for (int g = 0; g < G; ++g)
            s += H[static_cast<size_t>(g)] *
                 std::cos(2.0 * pi * static_cast<double>(g) * n / G);
        taps[static_cast<size_t>(n + nmax)] = s / G;
    }

    const double cut = 1e-14;
    int lo = -nmax, hi = nmax;
    while (lo < 0 && std::fabs(taps[static_cast<size_t>(lo + nmax)]) < cut) ++lo;
    while (hi > 0 && std::fabs(taps[static_cast<size_t>(hi + nmax)]) < cut) --hi;
    // keep symmetry
    int r = std::max(-lo, hi);
    lo = -r; hi = r;

    QmfPair f;
    f.family = FilterFamily::battle_lemarie;
    f.q = q;
    f.n1 = lo;
    f.n2 = hi;
    f.h.assign(taps.begin() + (lo + nmax), taps.begin() + (hi + nmax) + 1);

    double sum = 0.0;
    for (double v : f.h) sum += v;
    for (double& v : f.h) v *= std::sqrt(2.0) / sum;

    f.g.assign(f.h.size(), 0.0);
    for (size_t i = 0; i < f.g.size(); ++i) {
        int n = f.g_lo() + static_cast<int>(i);
        f.g[i] = ((n % 2 == 0) ? 1.0 : -1.0) * f.h[static_cast<size_t>(1 - n - f.n1)];
    }
    return f;
}

} // namespace

QmfPair make_battle_lemarie(int q) {
    static std::mutex mu;
    static std::map<int, QmfPair> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, build(q)).first;
    return it->second;
}

} // namespace gegwp::detail
