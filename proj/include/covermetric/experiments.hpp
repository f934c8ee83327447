#ifndef COVERMETRIC_EXPERIMENTS_HPP
#define COVERMETRIC_EXPERIMENTS_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <thread>
#include <vector>

#include "covermetric/analysis.hpp"
#include "covermetric/channel.hpp"
#include "covermetric/prange.hpp"
#include "covermetric/stats.hpp"

namespace covermetric {

// Runs trials split across jobs threads. Each trial adds into a local
// integer tally; tallies are summed, so the result does not depend on the
// schedule or on jobs.
inline std::vector<std::uint64_t> tally_trials(std::uint64_t trials, int categories, int jobs,
                                               const std::function<void(std::uint64_t, std::vector<std::uint64_t>&)>& fn) {
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        std::vector<std::uint64_t> tally(categories, 0);
        for (std::uint64_t i = 0; i < trials; ++i) fn(i, tally);
        return tally;
    }
    std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(categories, 0));
    std::vector<std::thread> threads;
    std::uint64_t chunk = (trials + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        std::uint64_t lo = w * chunk;
        std::uint64_t hi = std::min(trials, lo + chunk);
        threads.emplace_back([&, w, lo, hi] {
            for (std::uint64_t i = lo; i < hi; ++i) fn(i, partial[w]);
        });
    }
    for (auto& th : threads) th.join();
    std::vector<std::uint64_t> tally(categories, 0);
    for (const auto& p : partial)
        for (int c = 0; c < categories; ++c) tally[c] += p[c];
    return tally;
}

struct PrangeCalibration {
    std::uint64_t trials = 0;
    std::uint64_t support_erased = 0;  // the picked error lines all fell on erased lines
    std::uint64_t decoder_found = 0;   // the iteration returned a codeword within radius
    std::uint64_t info_blocks = 0;
    double ps_exact = 0.0;  // C(tx_hat+ty_hat, t) / C(m+n, t)
    SplitChoice split;

    double support_erased_rate() const { return trials ? static_cast<double>(support_erased) / trials : 0.0; }
    double found_rate() const { return trials ? static_cast<double>(decoder_found) / trials : 0.0; }
    double info_block_rate() const { return trials ? static_cast<double>(info_blocks) / trials : 0.0; }
};

// Per-iteration calibration of the decoder: every trial plants a fresh
// random code, codeword, and simple-model error, then runs one iteration.
// The rate of the line-erasure event matches P(S) exactly; the raw decoder
// success rate also carries the information-block availability and the
// chance of zero fill inside the kept block, so it is reported separately.
inline PrangeCalibration run_prange_calibration(const FieldPtr& f, int m, int n, int k, int t,
                                                std::uint64_t trials, std::uint64_t seed, int jobs = 1) {
    PrangeCalibration result;
    result.trials = trials;
    PrangeSuccess ps = prange_success_probability(m, n, k, t);
    result.ps_exact = to_double(ps.p_success);
    result.split = ps.split;
    const SplitChoice split = ps.split;
    auto tally = tally_trials(trials, 3, jobs, [&](std::uint64_t i, std::vector<std::uint64_t>& acc) {
        Rng rng(derive_seed(seed, i));
        MatrixCode code = random_code(f, m, n, k, rng);
        ErrorSample err = sample_error(f, m, n, ErrorModel::simple(t), rng);
        std::vector<Elem> u(k);
        for (int j = 0; j < k; ++j) u[j] = static_cast<Elem>(rng.uniform_below(f->q()));
        Mat codeword = code.encode(u);
        Mat received = codeword.add(err.error);
        DecodingInstance inst = DecodingInstance::make(std::move(code), std::move(received), t,
                                                       std::make_pair(codeword, err.error));
        IterationOutcome out = prange_iteration(inst, split, rng);

        std::vector<char> row_kept(m, 0), col_kept(n, 0);
        for (int r : out.kept_rows) row_kept[r] = 1;
        for (int c : out.kept_cols) col_kept[c] = 1;
        bool erased = true;
        for (int line : err.chosen_lines) {
            if (line < m ? row_kept[line] : col_kept[line - m]) {
                erased = false;
                break;
            }
        }
        if (erased) ++acc[0];
        if (out.success) ++acc[1];
        if (out.info_block_found) ++acc[2];
    });
    result.support_erased = tally[0];
    result.decoder_found = tally[1];
    result.info_blocks = tally[2];
    return result;
}

struct ModelRatioResult {
    std::uint64_t trials = 0, count_e1 = 0, count_e2 = 0;
    double ratio = 0.0;        // empirical Prob(E1)/Prob(E2)
    double se = 0.0;           // delta-method standard error of the ratio
    double paper_ratio = 0.0;  // 2^t
};

// Occurrence counts of the two reference matrices under the simple model:
// E1 = Id_t padded with zeros, E2 = t all-one rows over zeros.
inline ModelRatioResult run_model_ratio(const FieldPtr& f, int m, int n, int t, std::uint64_t trials,
                                        std::uint64_t seed, int jobs = 1) {
    Mat e1(f, m, n), e2(f, m, n);
    for (int i = 0; i < t; ++i) e1.set(i, i, 1);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < n; ++j) e2.set(i, j, 1);
    auto tally = tally_trials(trials, 2, jobs, [&](std::uint64_t i, std::vector<std::uint64_t>& acc) {
        Rng rng(derive_seed(seed, i));
        ErrorSample s = sample_error(f, m, n, ErrorModel::simple(t), rng);
        if (s.error == e1) ++acc[0];
        if (s.error == e2) ++acc[1];
    });
    ModelRatioResult r;
    r.trials = trials;
    r.count_e1 = tally[0];
    r.count_e2 = tally[1];
    r.paper_ratio = std::exp2(t);
    if (r.count_e1 > 0 && r.count_e2 > 0) {
        r.ratio = static_cast<double>(r.count_e1) / static_cast<double>(r.count_e2);
        r.se = r.ratio * std::sqrt(1.0 / r.count_e1 + 1.0 / r.count_e2);
    } else {
        r.ratio = r.count_e2 ? 0.0 : HUGE_VAL;
        r.se = HUGE_VAL;
    }
    return r;
}

struct TxDistributionResult {
    std::uint64_t trials = 0;
    std::vector<std::uint64_t> counts;  // rows among the t picked lines, 0..t
    std::vector<double> expected;       // hypergeometric C(m,tx) C(n,t-tx) / C(m+n,t)
    double chi2 = 0.0;
    double critical_001 = 0.0;
};

// Split of the line pick of the simple model against the hypergeometric law.
// Measured at the pick stage (before the wt = t retry): the retry acceptance
// differs slightly across splits, which a test at this sample size would
// detect, while the pick itself is the quantity the law describes.
inline TxDistributionResult run_tx_distribution(const FieldPtr& f, int m, int n, int t, std::uint64_t trials,
                                                std::uint64_t seed, int jobs = 1) {
    TxDistributionResult r;
    r.trials = trials;
    r.counts = tally_trials(trials, t + 1, jobs, [&](std::uint64_t i, std::vector<std::uint64_t>& acc) {
        Rng rng(derive_seed(seed, i));
        ErrorSample s = simple_error_raw(f, m, n, t, rng);
        ++acc[s.tx];
    });
    BigInt den = binomial(m + n, t);
    for (int tx = 0; tx <= t; ++tx)
        r.expected.push_back(to_double(BigRat(binomial(m, tx) * binomial(n, t - tx), den)));
    r.chi2 = chi_square_statistic(r.counts, r.expected, trials);
    r.critical_001 = chi_square_critical_001(t);
    return r;
}

struct GeneralUniformityResult {
    std::uint64_t trials = 0;
    std::uint64_t sphere_size = 0;
    double chi2 = 0.0;
    double critical_001 = 0.0;
};

// Chi-square goodness of fit of the general-model sampler against the
// uniform distribution on the whole sphere of radius t.
inline GeneralUniformityResult run_general_uniformity(const FieldPtr& f, int m, int n, int t,
                                                      std::uint64_t trials, std::uint64_t seed,
                                                      std::uint64_t cap = kDefaultEnumCap) {
    SphereSampler sampler(f, m, n, t, cap);
    GeneralUniformityResult r;
    r.trials = trials;
    r.sphere_size = sampler.sphere_size();
    std::map<std::vector<Elem>, std::uint64_t> counts;
    for (std::uint64_t i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        Mat e = sampler.sample(rng);
        ++counts[e.entries()];
    }
    double expected = static_cast<double>(trials) / static_cast<double>(r.sphere_size);
    double chi2 = 0.0;
    std::uint64_t seen = 0;
    for (const auto& [key, c] : counts) {
        double d = static_cast<double>(c) - expected;
        chi2 += d * d / expected;
        ++seen;
    }
    // sphere members never sampled still contribute their expectation
    chi2 += static_cast<double>(r.sphere_size - seen) * expected;
    r.chi2 = chi2;
    r.critical_001 = chi_square_critical_001(static_cast<int>(r.sphere_size) - 1);
    return r;
}

}  // namespace covermetric

#endif  // COVERMETRIC_EXPERIMENTS_HPP
