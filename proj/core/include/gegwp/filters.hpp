#ifndef GEGWP_FILTERS_HPP
#define GEGWP_FILTERS_HPP

#include <string>
#include <string_view>
#include <vector>

namespace gegwp {

enum class FilterFamily { daubechies, symmlet, coiflet, battle_lemarie };

std::string to_string(FilterFamily f);

/// Conjugate quadrature mirror filter pair.
///
/// The lowpass taps are h(n) for n = n1..n2 with sum(h) = sqrt(2); the
/// highpass is derived by the mirror relation g(n) = (-1)^n h(1-n), so its
/// support is [1-n2, 1-n1].  Daubechies/symmlet/coiflet filters use n1 = 0;
/// Battle-Lemarie filters are symmetric around 0.
struct QmfPair {
    FilterFamily family;
    int q;                      // vanishing moments of the wavelet
    std::vector<double> h;      // lowpass taps, h[i] = h(n1 + i)
    std::vector<double> g;      // highpass taps, g[i] = g(g_lo() + i)
    int n1 = 0;
    int n2 = 0;

    int length() const { return static_cast<int>(h.size()); }
    int g_lo() const { return 1 - n2; }
    int g_hi() const { return 1 - n1; }
    /// max(|N1|, |N2|), the support radius used in covariance decay bounds.
    int support_radius() const;
    std::string name() const;   // "db10", "sym8", "coif5", "bl6"
};

/// Builds the filter pair for a supported (family, q) combination:
/// Daubechies q in [1,10], Symmlet q in [4,10], Coiflet q in {2,4,6,8,10},
/// Battle-Lemarie q in {2,4,6}.  Throws UnsupportedFamilyOrder otherwise.
QmfPair make_filter(FilterFamily family, int q);

/// Parses short names like "db4", "sym10", "coif5" (q = 10), "bl6".
QmfPair make_filter(std::string_view name);

enum class Channel { low, high };

/// |sum_n c(n) e^{-i 2 pi lambda n}|^2 for the selected tap sequence,
/// lambda in cycles/sample.
double squared_gain(const QmfPair& f, Channel which, double lambda);

/// Squared gain of the filter cascade from the root to sequency-ordered
/// packet (j,p), i.e. the product of per-stage gains at the dyadically
/// scaled frequency.
double packet_gain(const QmfPair& f, int j, int p, double lambda);

/// Number of taps with |h(n)| >= cut.
int effective_support(const QmfPair& f, double cut);

} // namespace gegwp

#endif
