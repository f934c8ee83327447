#ifndef COVERMETRIC_STATS_HPP
#define COVERMETRIC_STATS_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "covermetric/errors.hpp"

namespace covermetric {

inline double chi_square_statistic(const std::vector<std::uint64_t>& observed, const std::vector<double>& expected_probs,
                                   std::uint64_t trials) {
    if (observed.size() != expected_probs.size()) throw DomainError("chi_square_statistic: size mismatch");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        double expected = expected_probs[i] * static_cast<double>(trials);
        if (expected <= 0.0) throw DomainError("chi_square_statistic: zero expected count");
        double d = static_cast<double>(observed[i]) - expected;
        stat += d * d / expected;
    }
    return stat;
}

// 99th percentile of the chi-square distribution (significance 0.01).
// Exact values for small df, Wilson-Hilferty beyond the table.
inline double chi_square_critical_001(int df) {
    static constexpr double table[] = {6.6349, 9.2103, 11.3449, 13.2767, 15.0863, 16.8119,
                                       18.4753, 20.0902, 21.6660, 23.2093, 24.7250, 26.2170};
    if (df < 1) throw DomainError("chi_square_critical_001: df must be >= 1");
    if (df <= 12) return table[df - 1];
    const double z99 = 2.3263478740408408;
    double a = 2.0 / (9.0 * df);
    double c = 1.0 - a + z99 * std::sqrt(a);
    return df * c * c * c;
}

}  // namespace covermetric

#endif  // COVERMETRIC_STATS_HPP
