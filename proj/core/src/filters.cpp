#include "gegwp/filters.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <span>

#include "gegwp/errors.hpp"

namespace gegwp {

namespace {
#include "qmf_tables.inc"

std::span<const double> table_for(FilterFamily family, int q) {
    switch (family) {
    case FilterFamily::daubechies:
        switch (q) {
        case 1: return kHaar;
        case 2: return kDb2;
        case 3: return kDb3;
        case 4: return kDb4;
        case 5: return kDb5;
        case 6: return kDb6;
        case 7: return kDb7;
        case 8: return kDb8;
        case 9: return kDb9;
        case 10: return kDb10;
        default: break;
        }
        break;
    case FilterFamily::symmlet:
        switch (q) {
        case 4: return kSym4;
        case 5: return kSym5;
        case 6: return kSym6;
        case 7: return kSym7;
        case 8: return kSym8;
        case 9: return kSym9;
        case 10: return kSym10;
        default: break;
        }
        break;
    case FilterFamily::coiflet:
        // Coiflet of order m has q = 2m wavelet vanishing moments.
        switch (q) {
        case 2: return kCoif1;
        case 4: return kCoif2;
        case 6: return kCoif3;
        case 8: return kCoif4;
        case 10: return kCoif5;
        default: break;
        }
        break;
    case FilterFamily::battle_lemarie:
        break;
    }
    throw UnsupportedFamilyOrder(to_string(family) + " with q=" + std::to_string(q) +
                                 " is not supported");
}

void derive_highpass(QmfPair& f) {
    // g(n) = (-1)^n h(1-n), support [1-n2, 1-n1]
    const int L = f.length();
    f.g.assign(L, 0.0);
    for (int i = 0; i < L; ++i) {
        int n = f.g_lo() + i;
        int hn = 1 - n;                     // index into h support
        double v = f.h[static_cast<size_t>(hn - f.n1)];
        f.g[static_cast<size_t>(i)] = ((n % 2 == 0) ? 1.0 : -1.0) * v;
    }
}

} // namespace

std::string to_string(FilterFamily f) {
    switch (f) {
    case FilterFamily::daubechies: return "daubechies";
    case FilterFamily::symmlet: return "symmlet";
    case FilterFamily::coiflet: return "coiflet";
    case FilterFamily::battle_lemarie: return "battle-lemarie";
    }
    return "?";
}

int QmfPair::support_radius() const {
    return std::max(std::abs(n1), std::abs(n2));
}

std::string QmfPair::name() const {
    switch (family) {
    case FilterFamily::daubechies: return "db" + std::to_string(q);
    case FilterFamily::symmlet: return "sym" + std::to_string(q);
    case FilterFamily::coiflet: return "coif" + std::to_string(q / 2);
    case FilterFamily::battle_lemarie: return "bl" + std::to_string(q);
    }
    return "?";
}

namespace detail {
QmfPair make_battle_lemarie(int q);  // battle_lemarie.cpp
}

QmfPair make_filter(FilterFamily family, int q) {
    if (family == FilterFamily::battle_lemarie) {
        if (q != 2 && q != 4 && q != 6)
            throw UnsupportedFamilyOrder("battle-lemarie supports q in {2,4,6}");
        return detail::make_battle_lemarie(q);
    }
    auto tab = table_for(family, q);
    QmfPair f;
    f.family = family;
    f.q = q;
    f.h.assign(tab.begin(), tab.end());
    f.n1 = 0;
    f.n2 = static_cast<int>(tab.size()) - 1;
    derive_highpass(f);
    return f;
}

QmfPair make_filter(std::string_view name) {
    size_t i = 0;
    while (i < name.size() && !std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
    std::string_view fam = name.substr(0, i);
    int num = 0;
    for (; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            throw UnsupportedFamilyOrder("bad filter name '" + std::string(name) + "'");
        num = num * 10 + (name[i] - '0');
    }
    if (fam == "db" || fam == "haar") return make_filter(FilterFamily::daubechies, fam == "haar" ? 1 : num);
    if (fam == "sym") return make_filter(FilterFamily::symmlet, num);
    if (fam == "coif") return make_filter(FilterFamily::coiflet, 2 * num);
    if (fam == "bl") return make_filter(FilterFamily::battle_lemarie, num);
    throw UnsupportedFamilyOrder("unknown filter name '" + std::string(name) + "'");
}

double squared_gain(const QmfPair& f, Channel which, double lambda) {
    const auto& c = which == Channel::low ? f.h : f.g;
    const int lo = which == Channel::low ? f.n1 : f.g_lo();
    double re = 0.0, im = 0.0;
    for (size_t i = 0; i < c.size(); ++i) {
        double ang = -2.0 * std::numbers::pi * lambda * static_cast<double>(lo + static_cast<int>(i));
        re += c[i] * std::cos(ang);
        im += c[i] * std::sin(ang);
    }
    return re * re + im * im;
}

double packet_gain(const QmfPair& f, int j, int p, double lambda) {
    // Sequency index p maps to the natural (Paley) path via the Gray code;
    // stage i filters the signal downsampled by 2^(i-1).
    int nat = p ^ (p >> 1);
    double gain = 1.0;
    for (int i = 0; i < j; ++i) {
        int bit = (nat >> (j - 1 - i)) & 1;
        double scaled = std::ldexp(lambda, i);
        scaled -= std::floor(scaled);       // gains are 1-periodic
        gain *= squared_gain(f, bit ? Channel::high : Channel::low, scaled);
    }
    return gain;
}

int effective_support(const QmfPair& f, double cut) {
    int first = -1, last = -1;
    for (int i = 0; i < f.length(); ++i) {
        if (std::fabs(f.h[static_cast<size_t>(i)]) >= cut) {
            if (first < 0) first = i;
            last = i;
        }
    }
    return first < 0 ? 0 : last - first + 1;
}

} // namespace gegwp
