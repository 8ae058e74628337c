#include "gegwp/frequency.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "gegwp/errors.hpp"

namespace gegwp {

namespace {

void check_range(double v) {
    if (!(v >= 0.0 && v <= 0.5))
        throw InvalidFrequency("frequency must lie in [0, 1/2], got " + std::to_string(v));
}

} // namespace

Frequency Frequency::of(double v) {
    check_range(v);
    Frequency f;
    f.value = v;
    return f;
}

Frequency Frequency::rational(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw InvalidFrequency("rational frequency needs positive denominator");
    Frequency f;
    f.num = num;
    f.den = den;
    f.value = static_cast<double>(num) / static_cast<double>(den);
    check_range(f.value);
    return f;
}

Frequency Frequency::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        std::int64_t a = 0, b = 0;
        auto r1 = std::from_chars(text.data(), text.data() + slash, a);
        auto r2 = std::from_chars(text.data() + slash + 1, text.data() + text.size(), b);
        if (r1.ec != std::errc{} || r2.ec != std::errc{} ||
            r2.ptr != text.data() + text.size())
            throw InvalidFrequency("cannot parse frequency '" + std::string(text) + "'");
        return rational(a, b);
    }
    double v = 0;
    auto r = std::from_chars(text.data(), text.data() + text.size(), v);
    if (r.ec != std::errc{} || r.ptr != text.data() + text.size())
        throw InvalidFrequency("cannot parse frequency '" + std::string(text) + "'");
    return of(v);
}

std::string Frequency::str() const {
    if (exact()) return std::to_string(num) + "/" + std::to_string(den);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

bool in_dyadic(const Frequency& nu, std::int64_t a, std::int64_t b, int s) {
    if (nu.exact()) {
        // nu.num/nu.den vs a/2^s: compare nu.num*2^s with a*nu.den in 128 bits.
        __extension__ typedef __int128 i128;
        i128 lhs = static_cast<i128>(nu.num) << s;
        i128 lo = static_cast<i128>(a) * nu.den;
        i128 hi = static_cast<i128>(b) * nu.den;
        return lhs >= lo && lhs <= hi;
    }
    double t = std::ldexp(nu.value, s);
    double r = std::round(t);
    if (std::fabs(t - r) < 1e-12) t = r;    // snap to the dyadic boundary
    return t >= static_cast<double>(a) && t <= static_cast<double>(b);
}

} // namespace gegwp
