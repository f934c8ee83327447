#ifndef COVERMETRIC_COMBIN_HPP
#define COVERMETRIC_COMBIN_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>

#include "covermetric/errors.hpp"

namespace covermetric {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// C(n, k) exactly; 0 for k < 0, k > n, or n < 0.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline BigInt big_pow(BigInt base, std::uint64_t e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Smallest integer c with c >= 2*sqrt(k), i.e. the least c with c^2 >= 4k.
inline std::int64_t ceil_two_sqrt(std::int64_t k) {
    if (k < 0) throw DomainError("ceil_two_sqrt: negative argument");
    std::int64_t c = 0;
    while (c * c < 4 * k) ++c;
    return c;
}

inline double to_double(const BigRat& r) { return static_cast<double>(r); }

inline double log2_big(const BigInt& v) {
    if (v <= 0) throw DomainError("log2_big: nonpositive argument");
    unsigned msb = boost::multiprecision::msb(v);
    if (msb <= 52) return std::log2(static_cast<double>(v));
    unsigned shift = msb - 52;
    return std::log2(static_cast<double>(v >> shift)) + static_cast<double>(shift);
}

inline double log2_big(const BigRat& r) {
    return log2_big(boost::multiprecision::numerator(r)) - log2_big(boost::multiprecision::denominator(r));
}

}  // namespace covermetric

#endif  // COVERMETRIC_COMBIN_HPP
