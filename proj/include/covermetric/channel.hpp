#ifndef COVERMETRIC_CHANNEL_HPP
#define COVERMETRIC_CHANNEL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "covermetric/cover.hpp"
#include "covermetric/errors.hpp"
#include "covermetric/field.hpp"
#include "covermetric/mat.hpp"
#include "covermetric/rng.hpp"

namespace covermetric {

struct ErrorModel {
    enum class Kind { General, Simple };
    Kind kind = Kind::Simple;
    int t = 0;
    int max_retries = 1000;  // Simple model only

    static ErrorModel simple(int t, int max_retries = 1000) { return {Kind::Simple, t, max_retries}; }
    static ErrorModel general(int t) { return {Kind::General, t, 0}; }
};

struct ErrorSample {
    Mat error;
    std::vector<int> chosen_lines;  // Simple model: picked lines, rows as i, columns as m+j
    int tx = 0, ty = 0;             // split of the picked lines
    int retries = 0;
};

// One raw draw of the simple model, without the wt = t retry: pick t of the
// m+n lines uniformly, fill every entry on a picked line i.i.d. uniform over
// GF(q) (zero included), leave the rest zero.
inline ErrorSample simple_error_raw(const FieldPtr& f, int m, int n, int t, Rng& rng) {
    if (t < 0 || t > std::min(m, n)) throw DomainError("simple_error_raw: need 0 <= t <= min(m,n)");
    ErrorSample s{Mat(f, m, n), rng.subset(m + n, t), 0, 0, 0};
    std::vector<char> row_on(m, 0), col_on(n, 0);
    for (int line : s.chosen_lines) {
        if (line < m) {
            row_on[line] = 1;
            ++s.tx;
        } else {
            col_on[line - m] = 1;
            ++s.ty;
        }
    }
    const std::uint32_t q = f->q();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (row_on[i] || col_on[j]) s.error.set(i, j, static_cast<Elem>(rng.uniform_below(q)));
    return s;
}

// Uniform sampler over the exact sphere {A : wt_C(A) = t}. Enumerates the
// support patterns of weight t once; a sample picks a pattern proportional to
// (q-1)^popcount and fills its support with uniform nonzero elements.
class SphereSampler {
  public:
    SphereSampler(FieldPtr f, int m, int n, int t, std::uint64_t cap = kDefaultEnumCap)
        : f_(std::move(f)), m_(m), n_(n) {
        detail::require_sphere_enumerable(f_->q(), m, n, cap);
        masks_ = sphere_pattern_masks(m, n, t);
        cum_.reserve(masks_.size());
        std::uint64_t total = 0;
        for (std::uint64_t mask : masks_) {
            std::uint64_t mult = 1;
            for (int b = __builtin_popcountll(mask); b > 0; --b) mult *= f_->q() - 1;
            total += mult;
            cum_.push_back(total);
        }
    }

    std::uint64_t sphere_size() const { return cum_.empty() ? 0 : cum_.back(); }

    Mat sample(Rng& rng) const {
        if (sphere_size() == 0) throw DomainError("SphereSampler: empty sphere");
        std::uint64_t r = rng.uniform_below(sphere_size());
        std::size_t idx = std::upper_bound(cum_.begin(), cum_.end(), r) - cum_.begin();
        std::uint64_t mask = masks_[idx];
        Mat e(f_, m_, n_);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < n_; ++j)
                if ((mask >> (i * n_ + j)) & 1)
                    e.set(i, j, static_cast<Elem>(1 + rng.uniform_below(f_->q() - 1)));
        return e;
    }

  private:
    FieldPtr f_;
    int m_, n_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::uint64_t> cum_;
};

// Sample an error matrix of cover weight exactly t under the given model.
// Simple: raw draws retried while the weight falls short. General: uniform
// over the enumerated sphere; fails above the cap rather than substituting
// the simple model, since the two distributions differ.
inline ErrorSample sample_error(const FieldPtr& f, int m, int n, const ErrorModel& model, Rng& rng,
                                std::uint64_t cap = kDefaultEnumCap) {
    if (model.t < 0 || model.t > std::min(m, n)) throw DomainError("sample_error: need 0 <= t <= min(m,n)");
    if (model.kind == ErrorModel::Kind::General) {
        SphereSampler sampler(f, m, n, model.t, cap);
        return ErrorSample{sampler.sample(rng), {}, 0, 0, 0};
    }
    for (int attempt = 0; attempt < model.max_retries; ++attempt) {
        ErrorSample s = simple_error_raw(f, m, n, model.t, rng);
        if (max_matching(Support::of(s.error)).size == model.t) {
            s.retries = attempt;
            return s;
        }
    }
    throw RetriesExhaustedError("sample_error: simple model retry cap reached");
}

// Lower bound from the unique-cover theorem for one sample split (tx, ty):
// (1 - (q-1)(n-t)/q^(n-ty) - q^(t-n))^tx * (1 - (q-1)(m-t)/q^(m-tx) - q^(t-m))^ty,
// factors clamped at 0.
inline double unique_cover_bound(std::uint32_t q, int m, int n, int t, int tx, int ty) {
    double fb = 1.0 - (q - 1.0) * (n - t) * std::pow(static_cast<double>(q), -(n - ty)) -
                std::pow(static_cast<double>(q), t - n);
    double fc = 1.0 - (q - 1.0) * (m - t) * std::pow(static_cast<double>(q), -(m - tx)) -
                std::pow(static_cast<double>(q), t - m);
    fb = std::max(0.0, fb);
    fc = std::max(0.0, fc);
    return std::pow(fb, tx) * std::pow(fc, ty);
}

struct UniqueCoverStats {
    double empirical_rate = 0.0;  // raw simple-model samples with a unique minimal cover of size t
    double bound_mean = 0.0;      // theorem lower bound, averaged over the sampled splits
    std::uint64_t trials = 0;
};

// Fraction of raw (pre-retry) simple-model samples whose minimal cover is
// unique of size exactly t, next to the averaged closed-form lower bound.
inline UniqueCoverStats unique_cover_rate(const FieldPtr& f, int m, int n, int t, std::uint64_t trials,
                                          std::uint64_t seed) {
    UniqueCoverStats stats;
    stats.trials = trials;
    std::uint64_t hits = 0;
    double bound_sum = 0.0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        ErrorSample s = simple_error_raw(f, m, n, t, rng);
        MinimalCoverResult r = cover_weight(s.error);
        if (r.weight == t && is_unique_minimal_cover(s.error)) ++hits;
        bound_sum += unique_cover_bound(f->q(), m, n, t, s.tx, s.ty);
    }
    stats.empirical_rate = trials ? static_cast<double>(hits) / static_cast<double>(trials) : 1.0;
    stats.bound_mean = trials ? bound_sum / static_cast<double>(trials) : 0.0;
    return stats;
}

}  // namespace covermetric

#endif  // COVERMETRIC_CHANNEL_HPP
