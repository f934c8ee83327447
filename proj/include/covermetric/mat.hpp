#ifndef COVERMETRIC_MAT_HPP
#define COVERMETRIC_MAT_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "covermetric/errors.hpp"
#include "covermetric/field.hpp"

namespace covermetric {

// Dense row-major matrix over GF(q). Value semantics; entries are element
// indices of the shared FieldSpec.
class Mat {
  public:
    Mat(FieldPtr f, int rows, int cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw DomainError("matrix dimensions must be nonnegative");
    }

    static Mat from_rows(FieldPtr f, const std::vector<std::vector<Elem>>& rows) {
        int m = static_cast<int>(rows.size());
        int n = m > 0 ? static_cast<int>(rows[0].size()) : 0;
        Mat a(std::move(f), m, n);
        for (int i = 0; i < m; ++i) {
            if (static_cast<int>(rows[i].size()) != n) throw ShapeMismatchError("ragged row list");
            for (int j = 0; j < n; ++j) a.set(i, j, rows[i][j]);
        }
        return a;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }

    Elem at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, Elem v) { a_[static_cast<std::size_t>(i) * cols_ + j] = v; }

    const std::vector<Elem>& entries() const { return a_; }

    bool is_zero() const {
        for (Elem v : a_)
            if (v) return false;
        return true;
    }

    bool operator==(const Mat& o) const {
        return *f_ == *o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat add(const Mat& o) const {
        require_same_shape(o);
        Mat r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->add(a_[i], o.a_[i]);
        return r;
    }

    Mat sub(const Mat& o) const {
        require_same_shape(o);
        Mat r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->sub(a_[i], o.a_[i]);
        return r;
    }

    Mat scaled(Elem c) const {
        Mat r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->mul(a_[i], c);
        return r;
    }

    void add_scaled_in_place(const Mat& o, Elem c) {
        require_same_shape(o);
        if (c == 0) return;
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = f_->add(a_[i], f_->mul(o.a_[i], c));
    }

    Mat submatrix(const std::vector<int>& rowset, const std::vector<int>& colset) const {
        Mat r(f_, static_cast<int>(rowset.size()), static_cast<int>(colset.size()));
        for (std::size_t i = 0; i < rowset.size(); ++i)
            for (std::size_t j = 0; j < colset.size(); ++j) r.set(static_cast<int>(i), static_cast<int>(j), at(rowset[i], colset[j]));
        return r;
    }

    // Row vector form: concatenation of the rows.
    std::vector<Elem> vectorize() const { return a_; }

    static Mat devectorize(FieldPtr f, const std::vector<Elem>& v, int m, int n) {
        if (static_cast<std::size_t>(m) * n != v.size()) throw ShapeMismatchError("devectorize: length mismatch");
        Mat r(std::move(f), m, n);
        r.a_ = v;
        return r;
    }

  private:
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || *f_ != *o.f_)
            throw ShapeMismatchError("matrix shape or field mismatch");
    }

    FieldPtr f_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

// <A,B> = Tr(A B^T). In row vector form this is the plain dot product, a fact
// the test suite checks against the literal trace computation.
inline Elem trace_product(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatchError("trace_product: shape mismatch");
    const FieldSpec& f = *a.field();
    Elem s = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s = f.add(s, f.mul(a.at(i, j), b.at(i, j)));
    return s;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw ShapeMismatchError("mat_mul: inner dimension mismatch");
    const FieldSpec& f = *a.field();
    Mat r(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int l = 0; l < a.cols(); ++l) {
            Elem ail = a.at(i, l);
            if (ail == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                r.set(i, j, f.add(r.at(i, j), f.mul(ail, b.at(l, j))));
        }
    return r;
}

inline std::vector<Elem> vec_mat_mul(const std::vector<Elem>& u, const Mat& m) {
    if (static_cast<int>(u.size()) != m.rows()) throw ShapeMismatchError("vec_mat_mul: length mismatch");
    const FieldSpec& f = *m.field();
    std::vector<Elem> r(m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j) r[j] = f.add(r[j], f.mul(u[i], m.at(i, j)));
    }
    return r;
}

// Reduced row echelon form in place, leftmost pivot column first, first
// nonzero row as pivot. Returns the pivot columns in ascending order; their
// count is the rank. When u is non-null it must be the identity on entry and
// receives the accumulated row operations (u_out * original = rref).
inline std::vector<int> rref_in_place(Mat& m, Mat* u = nullptr) {
    const FieldSpec& f = *m.field();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (int j = 0; j < m.cols(); ++j) {
                Elem t = m.at(r, j);
                m.set(r, j, m.at(pivot, j));
                m.set(pivot, j, t);
            }
            if (u)
                for (int j = 0; j < u->cols(); ++j) {
                    Elem t = u->at(r, j);
                    u->set(r, j, u->at(pivot, j));
                    u->set(pivot, j, t);
                }
        }
        Elem piv_inv = f.inv(m.at(r, c));
        if (piv_inv != 1) {
            for (int j = 0; j < m.cols(); ++j) m.set(r, j, f.mul(m.at(r, j), piv_inv));
            if (u)
                for (int j = 0; j < u->cols(); ++j) u->set(r, j, f.mul(u->at(r, j), piv_inv));
        }
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            Elem c2 = m.at(i, c);
            if (c2 == 0) continue;
            for (int j = 0; j < m.cols(); ++j) m.set(i, j, f.sub(m.at(i, j), f.mul(c2, m.at(r, j))));
            if (u)
                for (int j = 0; j < u->cols(); ++j) u->set(i, j, f.sub(u->at(i, j), f.mul(c2, u->at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(Mat m) { return static_cast<int>(rref_in_place(m).size()); }

// Basis of {x : m x = 0} (column-vector null space), deterministic order:
// one vector per free column, ascending.
inline std::vector<std::vector<Elem>> kernel_basis(Mat m) {
    const FieldSpec& f = *m.field();
    std::vector<int> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        std::vector<Elem> x(m.cols(), 0);
        x[j] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(m.at(static_cast<int>(i), j));
        basis.push_back(std::move(x));
    }
    return basis;
}

inline Mat invert(const Mat& m) {
    if (m.rows() != m.cols()) throw ShapeMismatchError("invert: matrix not square");
    Mat a = m;
    Mat u(m.field(), m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i) u.set(i, i, 1);
    std::vector<int> pivots = rref_in_place(a, &u);
    if (static_cast<int>(pivots.size()) != m.rows()) throw DomainError("invert: matrix is singular");
    return u;
}

// Coefficients x with x * g = r, if r lies in the row span of g.
inline std::optional<std::vector<Elem>> solve_in_rowspan(const Mat& g, const std::vector<Elem>& r) {
    if (static_cast<int>(r.size()) != g.cols()) throw ShapeMismatchError("solve_in_rowspan: length mismatch");
    const FieldSpec& f = *g.field();
    // Augment g^T with r^T and eliminate; equivalently run RREF on g while
    // tracking the transformation, then match pivot entries.
    Mat a = g;
    Mat u(g.field(), g.rows(), g.rows());
    for (int i = 0; i < g.rows(); ++i) u.set(i, i, 1);
    std::vector<int> pivots = rref_in_place(a, &u);
    std::vector<Elem> coeff_reduced(a.rows(), 0);
    std::vector<Elem> residual = r;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Elem c = residual[pivots[i]];
        coeff_reduced[i] = c;
        if (c == 0) continue;
        for (int j = 0; j < a.cols(); ++j) residual[j] = f.sub(residual[j], f.mul(c, a.at(static_cast<int>(i), j)));
    }
    for (Elem v : residual)
        if (v) return std::nullopt;
    // coeff_reduced * rref = r and rref = u * g, so x = coeff_reduced * u.
    std::vector<Elem> x(g.rows(), 0);
    for (int i = 0; i < g.rows(); ++i)
        for (int l = 0; l < g.rows(); ++l) x[i] = f.add(x[i], f.mul(coeff_reduced[l], u.at(l, i)));
    return x;
}

}  // namespace covermetric

#endif  // COVERMETRIC_MAT_HPP
