#ifndef GEGWP_FREQUENCY_HPP
#define GEGWP_FREQUENCY_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace gegwp {

/// A frequency in cycles/sample, restricted to [0, 1/2].
///
/// Frequencies may carry an exact rational representation (num/den) so that
/// inputs such as "1/12" or "0.375" hit dyadic interval boundaries
/// deterministically.  Interval-membership tests against the dyadic grid use
/// the rational form when present and snap doubles to the grid within 1e-12
/// otherwise.
struct Frequency {
    double value = 0.0;
    std::int64_t num = 0;
    std::int64_t den = 0;   // den > 0 marks an exact rational

    Frequency() = default;

    static Frequency of(double v);
    static Frequency rational(std::int64_t num, std::int64_t den);
    /// Accepts "0.375" or "a/b".
    static Frequency parse(std::string_view text);

    bool exact() const { return den > 0; }
    std::string str() const;

    friend bool operator==(const Frequency& a, const Frequency& b) {
        return a.value == b.value;
    }
};

/// Closed-interval test nu in [a/2^s, b/2^s] on the dyadic grid of scale s.
bool in_dyadic(const Frequency& nu, std::int64_t a, std::int64_t b, int s);

} // namespace gegwp

#endif
