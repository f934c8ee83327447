#ifndef COVERMETRIC_PRANGE_HPP
#define COVERMETRIC_PRANGE_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "covermetric/code.hpp"
#include "covermetric/combin.hpp"
#include "covermetric/cover.hpp"
#include "covermetric/errors.hpp"
#include "covermetric/rng.hpp"

namespace covermetric {

// Erasure split of the decoder: tx_hat rows and ty_hat columns are erased,
// ty_hat = n - ceil(k/(m - tx_hat)), so the kept block holds at least k
// positions.
struct SplitChoice {
    int tx_hat = 0;
    int ty_hat = 0;
};

inline void require_prange_regime(int m, int n, int k) {
    // mR < n <= m with R = k/(mn), i.e. k < n^2 and n <= m.
    if (k < 1) throw ParameterRegimeError("need k >= 1");
    if (!(n <= m) || !(static_cast<std::int64_t>(k) < static_cast<std::int64_t>(n) * n))
        throw ParameterRegimeError("need mR < n <= m, i.e. k < n^2 and n <= m");
}

// The integer tx_hat in [0, m-1] maximizing tx_hat + ty_hat, found by
// exhaustive scan; ties go to the smaller tx_hat. The erased-line total lands
// between m+n-ceil(2*sqrt(k))-3 and m+n-ceil(2*sqrt(k)).
inline SplitChoice optimal_split(int m, int n, int k) {
    require_prange_regime(m, n, k);
    int best_tx = -1, best_sum = -1;
    for (int tx = 0; tx < m; ++tx) {
        int kept_rows = m - tx;
        int ty = n - static_cast<int>((k + kept_rows - 1) / kept_rows);
        if (ty < 0) continue;
        if (tx + ty > best_sum) {
            best_sum = tx + ty;
            best_tx = tx;
        }
    }
    if (best_tx < 0) throw ParameterRegimeError("optimal_split: no feasible erasure split");
    int kept_rows = m - best_tx;
    return SplitChoice{best_tx, n - static_cast<int>((k + kept_rows - 1) / kept_rows)};
}

struct DecodingInstance {
    MatrixCode code;
    Mat received;
    int radius;
    std::optional<std::pair<Mat, Mat>> planted;  // (codeword, error) for experiments

    static DecodingInstance make(MatrixCode code, Mat received, int radius,
                                 std::optional<std::pair<Mat, Mat>> planted = std::nullopt) {
        if (received.rows() != code.m() || received.cols() != code.n())
            throw ShapeMismatchError("decoding instance: received shape mismatch");
        if (radius < 0 || radius > std::min(code.m(), code.n()))
            throw DomainError("decoding instance: radius out of range");
        if (planted) {
            if (received != planted->first.add(planted->second))
                throw DomainError("decoding instance: received != codeword + error");
            if (cover_weight(planted->second).weight != radius)
                throw DomainError("decoding instance: planted error weight != radius");
        }
        return DecodingInstance{std::move(code), std::move(received), radius, std::move(planted)};
    }
};

struct IterationOutcome {
    bool success = false;
    bool info_block_found = false;
    std::optional<Mat> codeword;  // set on success
    int residual_weight = -1;     // set on success
    std::vector<int> kept_rows, kept_cols;
};

// Decoder step on a fixed kept block: re-encode from an information block
// inside it and test the residual cover weight. A block without an
// information block counts as a failed iteration.
inline IterationOutcome prange_iteration_on_block(const DecodingInstance& inst, std::vector<int> kept_rows,
                                                  std::vector<int> kept_cols) {
    const MatrixCode& code = inst.code;
    IterationOutcome out;
    out.kept_rows = std::move(kept_rows);
    out.kept_cols = std::move(kept_cols);
    std::optional<InfoBlock> info = find_info_block(code, out.kept_rows, out.kept_cols);
    if (!info) return out;
    out.info_block_found = true;

    Mat gbar_s = systematic_form(code, *info);
    std::vector<Elem> r = inst.received.submatrix(out.kept_rows, out.kept_cols).vectorize();
    std::vector<Elem> r_i(code.k());
    for (int i = 0; i < code.k(); ++i) r_i[i] = r[info->innerset[i]];
    std::vector<Elem> c_hat = vec_mat_mul(r_i, gbar_s);
    Mat candidate = Mat::devectorize(code.field(), c_hat, code.m(), code.n());
    Mat residual = inst.received.sub(candidate);
    if (!cover_weight_at_least(residual, inst.radius + 1)) {
        out.success = true;
        out.residual_weight = cover_weight(residual).weight;
        out.codeword = std::move(candidate);
    }
    return out;
}

// One decoder iteration: the kept block of size (m-tx_hat) x (n-ty_hat) is
// sampled as independent uniform row and column subsets.
inline IterationOutcome prange_iteration(const DecodingInstance& inst, const SplitChoice& split, Rng& rng) {
    std::vector<int> kept_rows = rng.subset(inst.code.m(), inst.code.m() - split.tx_hat);
    std::vector<int> kept_cols = rng.subset(inst.code.n(), inst.code.n() - split.ty_hat);
    return prange_iteration_on_block(inst, std::move(kept_rows), std::move(kept_cols));
}

struct DecodeOutcome {
    enum class Status { Found, IterationBudgetExhausted };
    Status status = Status::IterationBudgetExhausted;
    std::optional<Mat> codeword;
    std::uint64_t iterations_used = 0;
    int residual_weight = -1;
};

// Estimated per-iteration success probability C(tx_hat+ty_hat, t) / C(m+n, t)
// used for the default budget of ceil(100 / P).
inline double estimated_success_probability(int m, int n, const SplitChoice& split, int t) {
    BigInt num = binomial(split.tx_hat + split.ty_hat, t);
    BigInt den = binomial(m + n, t);
    if (num == 0) num = 1;  // degenerate split; keep the budget finite
    return to_double(BigRat(num, den));
}

inline std::uint64_t default_iteration_budget(int m, int n, const SplitChoice& split, int t) {
    double p = estimated_success_probability(m, n, split, t);
    return static_cast<std::uint64_t>(std::ceil(100.0 / p));
}

// The full decoder loop: fresh random blocks until success or budget
// exhaustion (max_iterations = 0 means the default budget). Budget exhaustion
// is an outcome, not an error; the decoder cannot certify nonexistence.
inline DecodeOutcome prange_decode(const DecodingInstance& inst, std::uint64_t max_iterations, std::uint64_t seed) {
    SplitChoice split = optimal_split(inst.code.m(), inst.code.n(), inst.code.k());
    std::uint64_t budget = max_iterations ? max_iterations : default_iteration_budget(inst.code.m(), inst.code.n(), split, inst.radius);
    for (std::uint64_t i = 0; i < budget; ++i) {
        Rng rng(derive_seed(seed, i));
        IterationOutcome it = prange_iteration(inst, split, rng);
        if (it.success) {
            DecodeOutcome out;
            out.status = DecodeOutcome::Status::Found;
            out.codeword = std::move(it.codeword);
            out.iterations_used = i + 1;
            out.residual_weight = it.residual_weight;
            return out;
        }
    }
    DecodeOutcome out;
    out.iterations_used = budget;
    return out;
}

// All codewords within cover distance radius of the received matrix, by
// exhaustive encode-and-test. The decision answer to the decoding problem is
// "yes" iff the list is nonempty.
inline std::vector<Mat> brute_force_decode(const DecodingInstance& inst, std::uint64_t cap = kDefaultEnumCap) {
    std::vector<Mat> hits;
    for_each_codeword(inst.code, cap, [&](const std::vector<Elem>&, const Mat& c) {
        if (!cover_weight_at_least(inst.received.sub(c), inst.radius + 1)) hits.push_back(c);
        return true;
    });
    return hits;
}

// A nonzero codeword of minimal cover weight (first in enumeration order
// among minima) together with that weight.
inline std::pair<int, Mat> lowest_weight_codeword(const MatrixCode& code, std::uint64_t cap = kDefaultEnumCap) {
    if (code.k() == 0) throw DomainError("lowest_weight_codeword: zero code");
    int best = std::numeric_limits<int>::max();
    std::optional<Mat> best_word;
    for_each_codeword(code, cap, [&](const std::vector<Elem>& u, const Mat& c) {
        bool zero = true;
        for (Elem v : u)
            if (v) {
                zero = false;
                break;
            }
        if (zero) return true;
        int w = cover_weight(c).weight;
        if (w < best) {
            best = w;
            best_word = c;
        }
        return best > 1;
    });
    return {best, *best_word};
}

}  // namespace covermetric

#endif  // COVERMETRIC_PRANGE_HPP
