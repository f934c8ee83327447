#ifndef COVERMETRIC_CODE_HPP
#define COVERMETRIC_CODE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "covermetric/errors.hpp"
#include "covermetric/field.hpp"
#include "covermetric/mat.hpp"
#include "covermetric/rng.hpp"

namespace covermetric {

inline constexpr std::uint64_t kDefaultEnumCap = 1ull << 24;

// q^k if it stays within cap, otherwise nullopt.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t q, std::uint64_t k, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (v > cap / q) return std::nullopt;
        v *= q;
    }
    if (v > cap) return std::nullopt;
    return v;
}

// A k-dimensional linear subspace of GF(q)^{m x n}, stored as k generator
// matrices plus the cached row vector form gbar (row i = vectorize(G_i)).
// Supplied generators must be linearly independent: the true dimension is
// enforced at construction. Immutable; safe to share across threads.
class MatrixCode {
  public:
    static MatrixCode make(FieldPtr f, int m, int n, std::vector<Mat> generators) {
        int k = static_cast<int>(generators.size());
        Mat gbar(f, k, m * n);
        for (int i = 0; i < k; ++i) {
            if (generators[i].rows() != m || generators[i].cols() != n || *generators[i].field() != *f)
                throw ShapeMismatchError("code_make: generator shape or field mismatch");
            const std::vector<Elem> v = generators[i].vectorize();
            for (int j = 0; j < m * n; ++j) gbar.set(i, j, v[j]);
        }
        if (rank(gbar) != k)
            throw DependentGeneratorsError("code_make: generators are linearly dependent");
        return MatrixCode(std::move(f), m, n, std::move(generators), std::move(gbar));
    }

    const FieldPtr& field() const { return f_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<Mat>& generators() const { return gens_; }
    const Mat& gbar() const { return gbar_; }

    // sum_i u_i G_i, computed from the generators directly. The vector-form
    // route u * gbar is checked against this in the tests.
    Mat encode(const std::vector<Elem>& u) const {
        if (static_cast<int>(u.size()) != k_) throw ShapeMismatchError("encode: message length != k");
        Mat c(f_, m_, n_);
        for (int i = 0; i < k_; ++i) c.add_scaled_in_place(gens_[i], u[i]);
        return c;
    }

    bool contains(const Mat& a) const {
        if (a.rows() != m_ || a.cols() != n_) return false;
        return solve_in_rowspan(gbar_, a.vectorize()).has_value();
    }

  private:
    MatrixCode(FieldPtr f, int m, int n, std::vector<Mat> gens, Mat gbar)
        : f_(std::move(f)), m_(m), n_(n), k_(static_cast<int>(gens.size())), gens_(std::move(gens)), gbar_(std::move(gbar)) {}

    FieldPtr f_;
    int m_, n_, k_;
    std::vector<Mat> gens_;
    Mat gbar_;
};

// Visits all q^k codewords in message order (message index counted in base q,
// u[0] the least significant digit). fn(u, codeword). Suffix partial sums
// keep the update cost at one scaled generator addition per step.
template <class Fn>
inline void for_each_codeword(const MatrixCode& code, std::uint64_t cap, Fn&& fn) {
    const int k = code.k();
    auto total = checked_pow(code.field()->q(), static_cast<std::uint64_t>(k), cap);
    if (!total) throw TooLargeToEnumerateError("codeword enumeration exceeds cap");
    std::vector<Elem> u(k, 0);
    // suffix[i] = sum_{j >= i} u_j G_j; suffix[k] stays zero.
    std::vector<Mat> suffix(static_cast<std::size_t>(k) + 1, Mat(code.field(), code.m(), code.n()));
    fn(static_cast<const std::vector<Elem>&>(u), suffix[0]);
    const std::uint32_t q = code.field()->q();
    for (std::uint64_t idx = 1; idx < *total; ++idx) {
        int d = 0;
        while (u[d] == q - 1) {
            u[d] = 0;
            ++d;
        }
        ++u[d];
        Mat s = suffix[d + 1];
        s.add_scaled_in_place(code.generators()[d], u[d]);
        for (int j = d; j >= 0; --j) {
            suffix[j] = s;  // digits below d are zero
        }
        fn(static_cast<const std::vector<Elem>&>(u), suffix[0]);
    }
}

// Basis of the dual code under the trace product: mn-k linearly independent
// matrices H with <C, H> = 0 for every codeword C. Kernel of gbar,
// devectorized.
inline std::vector<Mat> dual_basis(const MatrixCode& code) {
    std::vector<std::vector<Elem>> ker = kernel_basis(code.gbar());
    std::vector<Mat> duals;
    duals.reserve(ker.size());
    for (const auto& h : ker) duals.push_back(Mat::devectorize(code.field(), h, code.m(), code.n()));
    return duals;
}

inline std::vector<Elem> syndrome(const std::vector<Mat>& duals, const Mat& e) {
    std::vector<Elem> s(duals.size());
    for (std::size_t i = 0; i < duals.size(); ++i) s[i] = trace_product(duals[i], e);
    return s;
}

// An information block of the code: the restriction map to rowset x colset is
// injective, witnessed by an inner position set I (0-based indices into the
// vectorized block) with G~_I invertible. I is the lexicographically smallest
// such column set, i.e. the pivot columns of leftmost-pivot elimination.
struct InfoBlock {
    std::vector<int> rowset, colset;
    std::vector<int> innerset;
};

inline Mat restricted_gbar(const MatrixCode& code, const std::vector<int>& rowset, const std::vector<int>& colset) {
    Mat gt(code.field(), code.k(), static_cast<int>(rowset.size() * colset.size()));
    for (int i = 0; i < code.k(); ++i) {
        const Mat sub = code.generators()[i].submatrix(rowset, colset);
        const std::vector<Elem> v = sub.vectorize();
        for (std::size_t j = 0; j < v.size(); ++j) gt.set(i, static_cast<int>(j), v[j]);
    }
    return gt;
}

inline std::optional<InfoBlock> find_info_block(const MatrixCode& code, const std::vector<int>& rowset,
                                                const std::vector<int>& colset) {
    Mat gt = restricted_gbar(code, rowset, colset);
    std::vector<int> pivots = rref_in_place(gt);
    if (static_cast<int>(pivots.size()) != code.k()) return std::nullopt;
    return InfoBlock{rowset, colset, pivots};
}

// Systematic row vector form for the given information block:
// Gbar_s = G~_I^{-1} * Gbar. Rows span the same code; the columns of the
// block positions indexed by I form the identity.
inline Mat systematic_form(const MatrixCode& code, const InfoBlock& info) {
    Mat gt = restricted_gbar(code, info.rowset, info.colset);
    Mat gti(code.field(), code.k(), code.k());
    for (int i = 0; i < code.k(); ++i)
        for (int j = 0; j < code.k(); ++j) gti.set(i, j, gt.at(i, info.innerset[j]));
    return mat_mul(invert(gti), code.gbar());
}

// Gaussian elimination on the rows of a, returning (u, a') with a' = u * a
// row reduced and u invertible. Afterwards the cover weight of a' equals
// rank(a).
inline std::pair<Mat, Mat> row_reduce_weight(const Mat& a) {
    Mat reduced = a;
    Mat u(a.field(), a.rows(), a.rows());
    for (int i = 0; i < a.rows(); ++i) u.set(i, i, 1);
    rref_in_place(reduced, &u);
    return {u, reduced};
}

// Basis of GF(p^m) over its prime field GF(p). Coordinates are computed via
// the inverse of the change-of-basis matrix from the polynomial basis.
class BasisEmbedding {
  public:
    // ext must be an extension of a prime field, GF(p^m) with m = ext->e().
    static BasisEmbedding make(FieldPtr ext, std::vector<Elem> gamma) {
        const int m = static_cast<int>(ext->e());
        if (static_cast<int>(gamma.size()) != m) throw DomainError("basis must have m = e elements");
        FieldPtr base = make_field(ext->p(), 1);
        Mat b(base, m, m);
        for (int j = 0; j < m; ++j) {
            std::uint32_t v = gamma[j];
            for (int i = 0; i < m; ++i) {
                b.set(i, j, static_cast<Elem>(v % ext->p()));
                v /= ext->p();
            }
        }
        if (rank(b) != m) throw DomainError("basis elements are linearly dependent over GF(p)");
        Mat binv = invert(b);
        return BasisEmbedding(std::move(ext), std::move(base), std::move(gamma), std::move(binv));
    }

    const FieldPtr& ext_field() const { return ext_; }
    const FieldPtr& base_field() const { return base_; }
    const std::vector<Elem>& gamma() const { return gamma_; }

    // Associated matrix of x in GF(p^m)^n: column i holds the coordinates of
    // x_i in this basis.
    Mat embed(const std::vector<Elem>& x) const {
        const int m = static_cast<int>(ext_->e());
        const int n = static_cast<int>(x.size());
        Mat r(base_, m, n);
        for (int i = 0; i < n; ++i) {
            std::vector<Elem> digits(m);
            std::uint32_t v = x[i];
            for (int d = 0; d < m; ++d) {
                digits[d] = static_cast<Elem>(v % ext_->p());
                v /= ext_->p();
            }
            for (int row = 0; row < m; ++row) {
                Elem s = 0;
                for (int d = 0; d < m; ++d) s = base_->add(s, base_->mul(binv_.at(row, d), digits[d]));
                r.set(row, i, s);
            }
        }
        return r;
    }

  private:
    BasisEmbedding(FieldPtr ext, FieldPtr base, std::vector<Elem> gamma, Mat binv)
        : ext_(std::move(ext)), base_(std::move(base)), gamma_(std::move(gamma)), binv_(std::move(binv)) {}

    FieldPtr ext_;
    FieldPtr base_;
    std::vector<Elem> gamma_;
    Mat binv_;
};

inline Mat gamma_embed(const BasisEmbedding& emb, const std::vector<Elem>& x) { return emb.embed(x); }

inline Mat random_mat(const FieldPtr& f, int m, int n, Rng& rng) {
    Mat a(f, m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a.set(i, j, static_cast<Elem>(rng.uniform_below(f->q())));
    return a;
}

// Uniformly random code of true dimension k: uniform generator draws,
// rejected while dependent.
inline MatrixCode random_code(const FieldPtr& f, int m, int n, int k, Rng& rng, int max_retries = 10000) {
    if (k > m * n) throw DomainError("random_code: k exceeds mn");
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<Mat> gens;
        gens.reserve(k);
        for (int i = 0; i < k; ++i) gens.push_back(random_mat(f, m, n, rng));
        Mat gbar(f, k, m * n);
        for (int i = 0; i < k; ++i) {
            const std::vector<Elem> v = gens[i].vectorize();
            for (int j = 0; j < m * n; ++j) gbar.set(i, j, v[j]);
        }
        if (rank(gbar) == k) return MatrixCode::make(f, m, n, std::move(gens));
    }
    throw RetriesExhaustedError("random_code: could not draw independent generators");
}

}  // namespace covermetric

#endif  // COVERMETRIC_CODE_HPP
