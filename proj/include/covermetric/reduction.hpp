#ifndef COVERMETRIC_REDUCTION_HPP
#define COVERMETRIC_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "covermetric/code.hpp"
#include "covermetric/cover.hpp"
#include "covermetric/errors.hpp"
#include "covermetric/mat.hpp"
#include "covermetric/prange.hpp"

namespace covermetric {

struct HammingInstance {
    FieldPtr f;
    std::vector<std::vector<Elem>> gen_rows;      // k generator rows of length n
    std::optional<std::vector<Elem>> received;    // r, for the decoding problem
    int t = 0;

    int k() const { return static_cast<int>(gen_rows.size()); }
    int n() const { return gen_rows.empty() ? 0 : static_cast<int>(gen_rows[0].size()); }
};

// The cover-metric instance a Hamming instance reduces to: each generator row
// g_i stacked t+1 times, so every codeword consists of t+1 identical rows and
// any cover of weight <= t must be formed by columns only.
struct ReducedInstance {
    FieldPtr f;
    std::vector<Mat> generators;  // k matrices of shape (t+1) x n
    std::optional<Mat> received;  // r stacked t+1 times
    int t = 0;

    int m() const { return t + 1; }
    int n() const { return generators.empty() ? (received ? received->cols() : 0) : generators[0].cols(); }
};

namespace detail {

inline Mat stack_rows(const FieldPtr& f, const std::vector<Elem>& row, int copies) {
    Mat a(f, copies, static_cast<int>(row.size()));
    for (int i = 0; i < copies; ++i)
        for (std::size_t j = 0; j < row.size(); ++j) a.set(i, static_cast<int>(j), row[j]);
    return a;
}

inline int hamming_weight(const std::vector<Elem>& v) {
    int w = 0;
    for (Elem x : v)
        if (x) ++w;
    return w;
}

}  // namespace detail

inline ReducedInstance reduce_codeword_problem(const HammingInstance& h) {
    if (h.received) throw DomainError("reduce_codeword_problem: instance carries a received word");
    if (h.t < 0 || h.t > h.n()) throw DomainError("reduce_codeword_problem: need 0 <= t <= n");
    ReducedInstance red;
    red.f = h.f;
    red.t = h.t;
    for (const auto& g : h.gen_rows) red.generators.push_back(detail::stack_rows(h.f, g, h.t + 1));
    return red;
}

inline ReducedInstance reduce_decoding_problem(const HammingInstance& h) {
    if (!h.received) throw DomainError("reduce_decoding_problem: instance lacks a received word");
    if (h.t < 0 || h.t > h.n()) throw DomainError("reduce_decoding_problem: need 0 <= t <= n");
    ReducedInstance red;
    red.f = h.f;
    red.t = h.t;
    for (const auto& g : h.gen_rows) red.generators.push_back(detail::stack_rows(h.f, g, h.t + 1));
    red.received = detail::stack_rows(h.f, *h.received, h.t + 1);
    return red;
}

struct HammingAnswer {
    bool yes = false;
    std::optional<std::vector<Elem>> witness_message;  // x with x != 0 (codeword) or any x (decoding)
    std::optional<std::vector<Elem>> witness_vector;   // codeword xG, or error e = r - xG
};

// Exhaustive decision oracle for both Hamming problems. Codeword problem
// (no received word): is there x != 0 with wt_H(xG) <= t? Decoding problem:
// is there e with r - e in the row span and wt_H(e) <= t?
inline HammingAnswer hamming_oracle(const HammingInstance& h, std::uint64_t cap = kDefaultEnumCap) {
    const int k = h.k(), n = h.n();
    auto total = checked_pow(h.f->q(), static_cast<std::uint64_t>(k), cap);
    if (!total) throw TooLargeToEnumerateError("hamming_oracle: q^k exceeds cap");
    const std::uint32_t q = h.f->q();
    HammingAnswer ans;
    std::vector<Elem> x(k, 0);
    for (std::uint64_t idx = 0; idx < *total; ++idx) {
        std::uint64_t v = idx;
        bool nonzero = false;
        for (int i = 0; i < k; ++i) {
            x[i] = static_cast<Elem>(v % q);
            v /= q;
            if (x[i]) nonzero = true;
        }
        std::vector<Elem> c(n, 0);
        for (int i = 0; i < k; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < n; ++j) c[j] = h.f->add(c[j], h.f->mul(x[i], h.gen_rows[i][j]));
        }
        if (!h.received) {
            if (nonzero && detail::hamming_weight(c) <= h.t) {
                ans.yes = true;
                ans.witness_message = x;
                ans.witness_vector = c;
                return ans;
            }
        } else {
            std::vector<Elem> e(n);
            for (int j = 0; j < n; ++j) e[j] = h.f->sub((*h.received)[j], c[j]);
            if (detail::hamming_weight(e) <= h.t) {
                ans.yes = true;
                ans.witness_message = x;
                ans.witness_vector = e;
                return ans;
            }
        }
    }
    return ans;
}

struct CoverAnswer {
    bool yes = false;
    std::optional<Mat> witness;  // codeword of weight <= t, or error matrix E
};

namespace detail {

// Indices of a maximal independent subset of the generators (greedy, in
// order), plus a nonzero dependency combination if one exists.
inline std::pair<std::vector<int>, std::optional<std::vector<Elem>>> independent_subset(const ReducedInstance& red) {
    const int k = static_cast<int>(red.generators.size());
    const int cols = red.m() * red.n();
    std::vector<int> keep;
    for (int i = 0; i < k; ++i) {
        Mat stacked(red.f, static_cast<int>(keep.size()) + 1, cols);
        for (std::size_t r = 0; r < keep.size(); ++r) {
            const std::vector<Elem> v = red.generators[keep[r]].vectorize();
            for (int j = 0; j < cols; ++j) stacked.set(static_cast<int>(r), j, v[j]);
        }
        const std::vector<Elem> v = red.generators[i].vectorize();
        for (int j = 0; j < cols; ++j) stacked.set(static_cast<int>(keep.size()), j, v[j]);
        if (rank(stacked) == static_cast<int>(keep.size()) + 1) keep.push_back(i);
    }
    if (static_cast<int>(keep.size()) == k) return {keep, std::nullopt};
    // Find the first generator outside the span of its predecessors and
    // express it through them.
    std::vector<int> prefix;
    for (int i = 0; i < k; ++i) {
        bool kept = false;
        for (int idx : keep)
            if (idx == i) kept = true;
        if (kept) {
            prefix.push_back(i);
            continue;
        }
        Mat g(red.f, static_cast<int>(prefix.size()), cols);
        for (std::size_t r = 0; r < prefix.size(); ++r) {
            const std::vector<Elem> v = red.generators[prefix[r]].vectorize();
            for (int j = 0; j < cols; ++j) g.set(static_cast<int>(r), j, v[j]);
        }
        auto coeffs = solve_in_rowspan(g, red.generators[i].vectorize());
        std::vector<Elem> dep(k, 0);
        for (std::size_t r = 0; r < prefix.size(); ++r) dep[prefix[r]] = (*coeffs)[r];
        dep[i] = red.f->neg(1);  // sum coeff_j G_j - G_i = 0
        return {keep, dep};
    }
    return {keep, std::nullopt};  // unreachable
}

}  // namespace detail

// Brute-force decision for the Lowest Cover Weight Codeword Problem on a
// reduced instance: some nonzero coefficient vector u with
// wt_C(sum u_i G_i) <= t. Dependent generators make the answer trivially yes
// via the zero codeword.
inline CoverAnswer cover_codeword_oracle(const ReducedInstance& red, std::uint64_t cap = kDefaultEnumCap) {
    auto [keep, dep] = detail::independent_subset(red);
    if (dep) return CoverAnswer{true, Mat(red.f, red.m(), red.n())};
    std::vector<Mat> gens = red.generators;
    MatrixCode code = MatrixCode::make(red.f, red.m(), red.n(), std::move(gens));
    auto [w, word] = lowest_weight_codeword(code, cap);
    if (w <= red.t) return CoverAnswer{true, word};
    return CoverAnswer{};
}

// Brute-force decision for the Cover Decoding Problem on a reduced instance;
// the witness is the error matrix E = R - C.
inline CoverAnswer cover_decoding_oracle(const ReducedInstance& red, std::uint64_t cap = kDefaultEnumCap) {
    if (!red.received) throw DomainError("cover_decoding_oracle: no received matrix");
    auto [keep, dep] = detail::independent_subset(red);
    std::vector<Mat> gens;
    for (int idx : keep) gens.push_back(red.generators[idx]);
    MatrixCode code = MatrixCode::make(red.f, red.m(), red.n(), std::move(gens));
    DecodingInstance inst = DecodingInstance::make(std::move(code), *red.received, red.t);
    std::vector<Mat> hits = brute_force_decode(inst, cap);
    if (hits.empty()) return CoverAnswer{};
    return CoverAnswer{true, red.received->sub(hits.front())};
}

struct ReductionReport {
    bool decoding_problem = false;
    bool hamming_yes = false;
    bool cover_yes = false;
    bool witness_roundtrip_ok = true;  // vacuously true on "no"
};

// Runs both decision oracles across the reduction and checks they agree; on
// "yes" the cover witness is mapped back to a Hamming witness (row 1 of the
// witness matrix) and re-verified. Disagreement raises MismatchDetectedError.
inline ReductionReport verify_reduction(const HammingInstance& h, std::uint64_t cap = kDefaultEnumCap) {
    ReductionReport rep;
    rep.decoding_problem = h.received.has_value();
    ReducedInstance red = rep.decoding_problem ? reduce_decoding_problem(h) : reduce_codeword_problem(h);
    HammingAnswer ha = hamming_oracle(h, cap);
    CoverAnswer ca = rep.decoding_problem ? cover_decoding_oracle(red, cap) : cover_codeword_oracle(red, cap);
    rep.hamming_yes = ha.yes;
    rep.cover_yes = ca.yes;
    if (ha.yes != ca.yes)
        throw MismatchDetectedError("verify_reduction: oracle decisions disagree");
    if (!ca.yes) return rep;

    // Witness back-mapping: all rows of the witness matrix must be identical;
    // its first row solves the Hamming-side problem.
    const Mat& w = *ca.witness;
    for (int i = 1; i < w.rows(); ++i)
        for (int j = 0; j < w.cols(); ++j)
            if (w.at(i, j) != w.at(0, j)) {
                rep.witness_roundtrip_ok = false;
                throw MismatchDetectedError("verify_reduction: witness rows differ");
            }
    std::vector<Elem> a(w.cols());
    for (int j = 0; j < w.cols(); ++j) a[j] = w.at(0, j);
    if (detail::hamming_weight(a) > h.t) {
        rep.witness_roundtrip_ok = false;
        throw MismatchDetectedError("verify_reduction: mapped witness exceeds weight t");
    }
    Mat g = Mat::from_rows(h.f, h.gen_rows);
    if (rep.decoding_problem) {
        std::vector<Elem> r_minus_e(w.cols());
        for (int j = 0; j < w.cols(); ++j) r_minus_e[j] = h.f->sub((*h.received)[j], a[j]);
        if (!solve_in_rowspan(g, r_minus_e)) {
            rep.witness_roundtrip_ok = false;
            throw MismatchDetectedError("verify_reduction: r - e not in the code");
        }
    } else {
        auto x = solve_in_rowspan(g, a);
        bool ok = x.has_value();
        if (ok) {
            // need x != 0; the zero row is witnessed by a dependency instead
            bool nonzero = false;
            for (Elem v : *x)
                if (v) nonzero = true;
            if (!nonzero) {
                auto [keep, dep] = detail::independent_subset(red);
                ok = dep.has_value();
            }
        }
        if (!ok) {
            rep.witness_roundtrip_ok = false;
            throw MismatchDetectedError("verify_reduction: witness row not expressible with nonzero x");
        }
    }
    return rep;
}

}  // namespace covermetric

#endif  // COVERMETRIC_REDUCTION_HPP
