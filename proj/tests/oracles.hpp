#ifndef COVERMETRIC_TESTS_ORACLES_HPP
#define COVERMETRIC_TESTS_ORACLES_HPP

// Brute-force oracles used to cross-check the library. These deliberately
// avoid the matching / Koenig code paths they are checking.

#include <cstdint>
#include <utility>
#include <vector>

#include "covermetric/combin.hpp"
#include "covermetric/mat.hpp"

namespace oracle {

// Does the line subset (mask over m+n lines: bits 0..m-1 rows, m..m+n-1
// columns) cover every nonzero entry?
inline bool covers(const covermetric::Mat& a, std::uint32_t mask) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) && !((mask >> i) & 1) && !((mask >> (a.rows() + j)) & 1)) return false;
    return true;
}

// Minimum line-cover size by exhausting all 2^(m+n) subsets.
inline int brute_min_cover(const covermetric::Mat& a) {
    int lines = a.rows() + a.cols();
    int best = lines;
    for (std::uint32_t mask = 0; mask < (1u << lines); ++mask) {
        int sz = __builtin_popcount(mask);
        if (sz < best && covers(a, mask)) best = sz;
    }
    return best;
}

// Number of distinct minimal covers.
inline int count_minimal_covers(const covermetric::Mat& a) {
    int lines = a.rows() + a.cols();
    int best = brute_min_cover(a);
    int count = 0;
    for (std::uint32_t mask = 0; mask < (1u << lines); ++mask)
        if (__builtin_popcount(mask) == best && covers(a, mask)) ++count;
    return count;
}

// Exact raw (pre-retry) probability of one specific matrix under the simple
// error model: sum over t-line subsets whose union supports the matrix of
// q^(-|union|), divided by C(m+n, t).
inline covermetric::BigRat simple_model_matrix_prob(const covermetric::Mat& target, int t) {
    using covermetric::BigInt;
    using covermetric::BigRat;
    const int m = target.rows(), n = target.cols();
    const int lines = m + n;
    BigRat p(0);
    for (std::uint32_t mask = 0; mask < (1u << lines); ++mask) {
        if (__builtin_popcount(mask) != t) continue;
        bool compatible = true;
        int union_size = 0;
        for (int i = 0; i < m && compatible; ++i)
            for (int j = 0; j < n; ++j) {
                bool on = ((mask >> i) & 1) || ((mask >> (m + j)) & 1);
                if (on)
                    ++union_size;
                else if (target.at(i, j)) {
                    compatible = false;
                    break;
                }
            }
        if (compatible)
            p += BigRat(1, covermetric::big_pow(target.field()->q(), static_cast<std::uint64_t>(union_size)));
    }
    return p / BigRat(covermetric::binomial(lines, t));
}

// Probability that a raw simple-model draw is accepted (cover weight exactly
// t), by enumerating subsets and union fills against a provided weight
// functor so the oracle stays independent of the matching code.
template <class WeightFn>
inline covermetric::BigRat simple_model_accept_prob(const covermetric::FieldPtr& f, int m, int n, int t,
                                                    WeightFn&& weight_of) {
    using covermetric::BigInt;
    using covermetric::BigRat;
    const int lines = m + n;
    BigRat accept(0);
    for (std::uint32_t mask = 0; mask < (1u << lines); ++mask) {
        if (__builtin_popcount(mask) != t) continue;
        std::vector<std::pair<int, int>> cells;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (((mask >> i) & 1) || ((mask >> (m + j)) & 1)) cells.emplace_back(i, j);
        std::uint64_t fills = 1;
        for (std::size_t c = 0; c < cells.size(); ++c) fills *= f->q();
        std::uint64_t good = 0;
        for (std::uint64_t fill = 0; fill < fills; ++fill) {
            covermetric::Mat a(f, m, n);
            std::uint64_t v = fill;
            for (const auto& [i, j] : cells) {
                a.set(i, j, static_cast<covermetric::Elem>(v % f->q()));
                v /= f->q();
            }
            if (weight_of(a) == t) ++good;
        }
        accept += BigRat(good, BigInt(fills));
    }
    return accept / BigRat(covermetric::binomial(lines, t));
}

inline std::uint64_t pascal(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
    }
    return c[n][k];
}

}  // namespace oracle

#endif  // COVERMETRIC_TESTS_ORACLES_HPP
