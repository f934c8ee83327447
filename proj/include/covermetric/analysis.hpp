#ifndef COVERMETRIC_ANALYSIS_HPP
#define COVERMETRIC_ANALYSIS_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "covermetric/code.hpp"
#include "covermetric/combin.hpp"
#include "covermetric/cover.hpp"
#include "covermetric/errors.hpp"
#include "covermetric/prange.hpp"
#include "covermetric/rng.hpp"

namespace covermetric {

// q-ary entropy H_q(p) = p log_q(q-1) - p log_q(p) - (1-p) log_q(1-p),
// with 0 log 0 = 0.
inline double entropy_q(std::uint32_t q, double p) {
    if (q < 2) throw DomainError("entropy_q: q must be >= 2");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("entropy_q: p outside [0,1]");
    double lq = std::log(static_cast<double>(q));
    double h = p * std::log(static_cast<double>(q - 1));
    if (p > 0.0) h -= p * std::log(p);
    if (p < 1.0) h -= (1.0 - p) * std::log(1.0 - p);
    return h / lq;
}

inline double entropy2(double p) { return entropy_q(2, p); }

// Inverse of H_q on [0, 1-1/q], by bisection to 1e-12.
inline double entropy_q_inverse(std::uint32_t q, double y) {
    if (!(y >= 0.0 && y <= 1.0)) throw DomainError("entropy_q_inverse: y outside [0,1]");
    double lo = 0.0, hi = 1.0 - 1.0 / q;
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        double mid = 0.5 * (lo + hi);
        if (entropy_q(q, mid) < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Singleton analogue: k <= max(n,m) * (min(n,m) - d + 1).
inline std::int64_t singleton_bound(std::uint32_t /*q*/, int m, int n, int d) {
    if (d < 1 || d > std::min(m, n)) throw DomainError("singleton_bound: need 1 <= d <= min(m,n)");
    return static_cast<std::int64_t>(std::max(m, n)) * (std::min(m, n) - d + 1);
}

struct BallBounds {
    double lower = 0.0;  // q^(md)
    double upper = 0.0;  // (d+1) 2^((m+n) H_2(d/(m+n))) q^(md)
};

inline BallBounds ball_bounds(std::uint32_t q, int m, int n, int d) {
    if (!(n <= m)) throw DomainError("ball_bounds: need n <= m");
    if (d <= 0 || d > n) throw DomainError("ball_bounds: need 0 < d <= n");
    double lq2 = std::log2(static_cast<double>(q));
    double lower = std::exp2(static_cast<double>(m) * d * lq2);
    double upper = (d + 1.0) * std::exp2((m + n) * entropy2(static_cast<double>(d) / (m + n))) * lower;
    return BallBounds{lower, upper};
}

// Sphere size lower bound, summed over splits tx + ty = t:
// C(m,tx) C(n,ty) q^(tx ty) (q^(n-ty) - (q-1)(n-t) - q^tx)^tx
//                           (q^(m-tx) - (q-1)(m-t) - q^ty)^ty,
// with negative base factors clamped to 0 per term.
inline BigInt sphere_lower_bound_exact(std::uint32_t q, int m, int n, int t) {
    if (t < 0 || t > std::min(m, n)) throw DomainError("sphere_lower_bound: need 0 <= t <= min(m,n)");
    BigInt total = 0;
    for (int tx = 0; tx <= t; ++tx) {
        int ty = t - tx;
        if (tx > m || ty > n) continue;
        BigInt base_b = big_pow(q, n - ty) - BigInt(q - 1) * (n - t) - big_pow(q, tx);
        BigInt base_c = big_pow(q, m - tx) - BigInt(q - 1) * (m - t) - big_pow(q, ty);
        if (base_b < 0) base_b = 0;
        if (base_c < 0) base_c = 0;
        total += binomial(m, tx) * binomial(n, ty) * big_pow(q, static_cast<std::uint64_t>(tx) * ty) *
                 big_pow(base_b, tx) * big_pow(base_c, ty);
    }
    return total;
}

inline double sphere_lower_bound(std::uint32_t q, int m, int n, int t) {
    return static_cast<double>(sphere_lower_bound_exact(q, m, n, t));
}

struct GvParams {
    std::int64_t k = 0;
    double rate = 0.0;
    double failure_log_q = 0.0;  // failure probability is at most q^(this)
};

// Dimension from the random-code GV statement:
// k = ceil((m - m delta + m/n - ((m+n)/n) H_2((delta n - 1)/(m+n))
//           - log_q(delta n)/n - eps) n), clamped to [0, mn].
// For delta n < 1 the ball of radius delta n - 1 is empty and no constraint
// remains, so k = mn.
inline GvParams gv_random_code_params(std::uint32_t q, int m, int n, double delta, double eps) {
    if (!(n <= m)) throw DomainError("gv_random_code_params: need n <= m");
    if (!(delta >= 0.0 && delta < 1.0)) throw DomainError("gv_random_code_params: need delta in [0,1)");
    if (!(eps >= 0.0 && eps < 1.0 - entropy_q(q, delta)))
        throw DomainError("gv_random_code_params: need 0 <= eps < 1 - H_q(delta)");
    std::int64_t mn = static_cast<std::int64_t>(m) * n;
    std::int64_t k;
    if (delta * n < 1.0) {
        k = mn;
    } else {
        double lq = std::log(static_cast<double>(q));
        double expr = m - m * delta + static_cast<double>(m) / n -
                      (static_cast<double>(m + n) / n) * entropy2((delta * n - 1.0) / (m + n)) -
                      std::log(delta * n) / lq / n - eps;
        k = static_cast<std::int64_t>(std::ceil(expr * n));
        if (k > mn) k = mn;
        if (k < 0) k = 0;
    }
    return GvParams{k, static_cast<double>(k) / static_cast<double>(mn), 1.0 - n * eps};
}

// Fraction of uniformly random k-dimensional codes whose minimum cover
// distance reaches the Singleton-type optimum n - ceil(k/m) + 1 (equal to
// n - k/m + 1 when m divides k).
inline double mdc_density_experiment(const FieldPtr& f, int m, int n, int k, std::uint64_t trials,
                                     std::uint64_t seed, std::uint64_t cap = kDefaultEnumCap) {
    if (!(n <= m)) throw DomainError("mdc_density_experiment: need n <= m");
    if (k < 1 || k > m * n) throw DomainError("mdc_density_experiment: need 1 <= k <= mn");
    if (!checked_pow(f->q(), static_cast<std::uint64_t>(k), cap))
        throw TooLargeToEnumerateError("mdc_density_experiment: q^k exceeds cap");
    int target = n - (k + m - 1) / m + 1;
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        MatrixCode code = random_code(f, m, n, k, rng);
        if (min_distance(code, cap) >= target) ++hits;
    }
    return trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0;
}

struct PrangeSuccess {
    BigRat p_success;  // C(tx_hat + ty_hat, t) / C(m+n, t), exact
    BigRat lower, upper;  // C(m+n-ceil(2 sqrt k)-3, t)/C(m+n,t) and C(m+n-ceil(2 sqrt k), t)/C(m+n,t)
    double expected_iterations = 0.0;
    SplitChoice split;
};

inline PrangeSuccess prange_success_probability(int m, int n, int k, int t,
                                                std::optional<int> tx_hat = std::nullopt) {
    if (t < 0 || t > std::min(m, n)) throw ParameterRegimeError("prange_success_probability: t out of range");
    require_prange_regime(m, n, k);
    SplitChoice split;
    if (tx_hat) {
        if (*tx_hat < 0 || *tx_hat >= m) throw ParameterRegimeError("prange_success_probability: tx_hat out of range");
        int kept_rows = m - *tx_hat;
        int ty = n - static_cast<int>((k + kept_rows - 1) / kept_rows);
        if (ty < 0) throw ParameterRegimeError("prange_success_probability: tx_hat leaves no feasible ty_hat");
        split = SplitChoice{*tx_hat, ty};
    } else {
        split = optimal_split(m, n, k);
    }
    BigInt den = binomial(m + n, t);
    std::int64_t c2s = ceil_two_sqrt(k);
    PrangeSuccess r;
    r.split = split;
    r.p_success = BigRat(binomial(split.tx_hat + split.ty_hat, t), den);
    r.lower = BigRat(binomial(m + n - c2s - 3, t), den);
    r.upper = BigRat(binomial(m + n - c2s, t), den);
    r.expected_iterations = r.p_success == 0 ? HUGE_VAL : to_double(BigRat(1) / r.p_success);
    return r;
}

struct AsymptoticConstants {
    double c_prange = 0.0;
    double c_prange_gv = 0.0;
    double c_cover = 0.0;
    double c_cover_gv = 0.0;
};

namespace detail {

inline double prange_constant(double rate, double tau) {
    if (!(rate >= 0.0 && rate <= 1.0)) throw DomainError("asymptotic constant: rate outside [0,1]");
    if (tau == 0.0) return 0.0;
    if (!(tau >= 0.0 && tau <= 1.0) || tau / (1.0 - rate) > 1.0)
        throw DomainError("asymptotic constant: entropy argument outside [0,1]");
    return entropy2(tau) - (1.0 - rate) * entropy2(tau / (1.0 - rate));
}

inline double cover_constant(double rate, double tau) {
    if (!(rate >= 0.0 && rate <= 1.0)) throw DomainError("asymptotic constant: rate outside [0,1]");
    if (tau == 0.0) return 0.0;
    double s = 1.0 - std::sqrt(rate);
    if (!(tau >= 0.0 && tau / 2.0 <= 1.0) || s <= 0.0 || tau / (2.0 * s) > 1.0)
        throw DomainError("asymptotic constant: entropy argument outside [0,1]");
    return entropy2(tau / 2.0) - s * entropy2(tau / (2.0 * s));
}

}  // namespace detail

// Iteration-count exponents: Hamming-metric Prange needs 2^(c_prange n)
// iterations, the cover-metric decoder 2^(c_cover (n+m)). The GV variants
// evaluate at the respective Gilbert-Varshamov radius.
inline AsymptoticConstants asymptotic_constants(std::uint32_t q, double rate, double tau) {
    AsymptoticConstants c;
    c.c_prange = detail::prange_constant(rate, tau);
    c.c_cover = detail::cover_constant(rate, tau);
    double tau_gv = entropy_q_inverse(q, 1.0 - rate) / 2.0;
    c.c_prange_gv = detail::prange_constant(rate, tau_gv);
    double sq = std::sqrt(rate);
    c.c_cover_gv = entropy2((1.0 - rate) / 4.0) - (1.0 - sq) * entropy2((1.0 + sq) / 4.0);
    return c;
}

struct FiniteAsymptoticRow {
    int n = 0;
    int k = 0;
    int t = 0;
    double log2_inv_p = 0.0;
    double per_lines = 0.0;    // log2(1/P(S)) / (n+m), converges to c_cover
    double per_symbols = 0.0;  // log2(1/P(S)) / (nm), goes to 0
};

// Exact P(S) along m = n in n_list at fixed rate and tau; demonstrates the
// lines-vs-symbols exponent separation.
inline std::vector<FiniteAsymptoticRow> finite_vs_asymptotic_check(std::uint32_t /*q*/, double rate, double tau,
                                                                   const std::vector<int>& n_list) {
    std::vector<FiniteAsymptoticRow> rows;
    for (int n : n_list) {
        int m = n;
        int k = static_cast<int>(std::llround(rate * n * n));
        int t = static_cast<int>(std::llround(tau * n));
        FiniteAsymptoticRow row;
        row.n = n;
        row.k = k;
        row.t = t;
        if (t == 0) {
            rows.push_back(row);
            continue;
        }
        PrangeSuccess ps = prange_success_probability(m, n, k, t);
        if (ps.p_success == 0) throw ParameterRegimeError("finite_vs_asymptotic_check: P(S) = 0");
        row.log2_inv_p = -log2_big(ps.p_success);
        row.per_lines = row.log2_inv_p / (n + m);
        row.per_symbols = row.log2_inv_p / (static_cast<double>(n) * m);
        rows.push_back(row);
    }
    return rows;
}

struct MinrankComparison {
    double expected_solutions = 0.0;   // N = q^(t(m+n-t) - (mn-k))
    double grs_exponent = 0.0;         // n^2 T R with T = t/n, R = k/n
    double bardet_lower_log2 = 0.0;    // log2 C(n,t)^2
    double prange_upper_log2 = 0.0;    // log2 C(m+n,t)
    double coverweight_check_cost = 0.0;  // (m+n) n^2
};

inline MinrankComparison minrank_comparison(std::uint32_t q, int m, int n, int k, int t) {
    if (t < 0 || t > std::min(m, n)) throw DomainError("minrank_comparison: t out of range");
    MinrankComparison r;
    std::int64_t exponent = static_cast<std::int64_t>(t) * (m + n - t) - (static_cast<std::int64_t>(m) * n - k);
    r.expected_solutions = std::exp2(static_cast<double>(exponent) * std::log2(static_cast<double>(q)));
    r.grs_exponent = static_cast<double>(n) * n * (static_cast<double>(t) / n) * (static_cast<double>(k) / n);
    BigInt bn = binomial(n, t);
    r.bardet_lower_log2 = bn > 0 ? 2.0 * log2_big(bn) : -HUGE_VAL;
    r.prange_upper_log2 = log2_big(binomial(m + n, t));
    r.coverweight_check_cost = static_cast<double>(m + n) * n * n;
    return r;
}

struct SternListBound {
    double list_log2 = 0.0;        // log2 [ C(ceil(sqrt(k+l)), v/2) (q^ceil(sqrt(k+l)) - 1)^(v/2) ]
    double paper_bound_log2 = 0.0;  // n sqrt(R) (v/2) log2 q, R = k/n^2
};

inline SternListBound stern_list_lower(std::uint32_t q, int k, int ell, int v, int n) {
    if (v < 0 || v % 2 != 0) throw DomainError("stern_list_lower: v must be even and nonnegative");
    if (k < 0 || ell < 0 || n <= 0) throw DomainError("stern_list_lower: bad parameters");
    std::int64_t s = 0;
    while (s * s < k + ell) ++s;
    SternListBound r;
    if (v == 0) return r;
    BigInt list = binomial(s, v / 2) * big_pow(big_pow(q, static_cast<std::uint64_t>(s)) - 1, static_cast<std::uint64_t>(v) / 2);
    r.list_log2 = list > 0 ? log2_big(list) : -HUGE_VAL;
    double rate = static_cast<double>(k) / (static_cast<double>(n) * n);
    r.paper_bound_log2 = n * std::sqrt(rate) * (v / 2.0) * std::log2(static_cast<double>(q));
    return r;
}

struct BoundsReport {
    std::int64_t singleton_k_max = 0;
    double ball_lower = 0.0, ball_upper = 0.0;
    double sphere_lower = 0.0;
    double gv_rate_lower = 0.0;  // asymptotic GV: 1 - delta at delta = t/n
    std::optional<std::uint64_t> sphere_exact, ball_exact;
};

// Bounds at radius/distance parameter t; exact values filled in when the
// enumeration fits the cap.
inline BoundsReport make_bounds_report(std::uint32_t q, int m, int n, int t, std::uint64_t cap = kDefaultEnumCap) {
    BoundsReport r;
    r.singleton_k_max = singleton_bound(q, m, n, t);
    BallBounds b = ball_bounds(q, std::max(m, n), std::min(m, n), t);
    r.ball_lower = b.lower;
    r.ball_upper = b.upper;
    r.sphere_lower = sphere_lower_bound(q, m, n, t);
    r.gv_rate_lower = 1.0 - static_cast<double>(t) / std::min(m, n);
    if (m * n <= 62 && checked_pow(q, static_cast<std::uint64_t>(m) * n, cap)) {
        std::vector<std::uint64_t> sizes = sphere_sizes_by_weight(q, m, n, cap);
        std::uint64_t ball = 0;
        for (int i = 0; i <= t && i < static_cast<int>(sizes.size()); ++i) ball += sizes[i];
        r.sphere_exact = sizes[t];
        r.ball_exact = ball;
    }
    return r;
}

}  // namespace covermetric

#endif  // COVERMETRIC_ANALYSIS_HPP
