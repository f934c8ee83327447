#ifndef COVERMETRIC_COVER_HPP
#define COVERMETRIC_COVER_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "covermetric/code.hpp"
#include "covermetric/errors.hpp"
#include "covermetric/mat.hpp"

namespace covermetric {

// Nonzero-support pattern of a matrix, one bit per entry. The cover weight of
// a matrix depends only on this pattern.
struct Support {
    int m = 0, n = 0, words = 0;
    std::vector<std::uint64_t> bits;

    Support(int m_, int n_) : m(m_), n(n_), words((n_ + 63) / 64), bits(static_cast<std::size_t>(m_) * ((n_ + 63) / 64), 0) {}

    static Support of(const Mat& a) {
        Support s(a.rows(), a.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                if (a.at(i, j)) s.set(i, j);
        return s;
    }

    bool get(int i, int j) const { return (bits[static_cast<std::size_t>(i) * words + j / 64] >> (j % 64)) & 1; }
    void set(int i, int j) { bits[static_cast<std::size_t>(i) * words + j / 64] |= 1ull << (j % 64); }

    int row_popcount(int i) const {
        int c = 0;
        for (int w = 0; w < words; ++w) c += __builtin_popcountll(bits[static_cast<std::size_t>(i) * words + w]);
        return c;
    }

    // Visits the column indices of row i in ascending order.
    template <class Fn>
    void for_each_in_row(int i, Fn&& fn) const {
        for (int w = 0; w < words; ++w) {
            std::uint64_t x = bits[static_cast<std::size_t>(i) * words + w];
            while (x) {
                int b = __builtin_ctzll(x);
                fn(w * 64 + b);
                x &= x - 1;
            }
        }
    }
};

struct Matching {
    int size = 0;
    std::vector<int> row_match, col_match;  // -1 = unmatched
};

namespace detail {

inline bool kuhn_augment(const Support& s, int row, std::vector<char>& visited, std::vector<int>& row_match,
                         std::vector<int>& col_match) {
    bool found = false;
    s.for_each_in_row(row, [&](int j) {
        if (found || visited[j]) return;
        visited[j] = 1;
        if (col_match[j] < 0 || kuhn_augment(s, col_match[j], visited, row_match, col_match)) {
            row_match[row] = j;
            col_match[j] = row;
            found = true;
        }
    });
    return found;
}

}  // namespace detail

// Maximum bipartite matching (rows vs columns, edges at nonzero entries) via
// augmenting paths. Rows are processed in increasing index and neighbor
// columns scanned in increasing index, so the result is a pure function of
// the support. stop_at allows early exit once the matching reaches a bound.
inline Matching max_matching(const Support& s, int stop_at = std::numeric_limits<int>::max()) {
    Matching m;
    m.row_match.assign(s.m, -1);
    m.col_match.assign(s.n, -1);
    std::vector<char> visited(s.n, 0);
    for (int i = 0; i < s.m && m.size < stop_at; ++i) {
        std::fill(visited.begin(), visited.end(), 0);
        if (detail::kuhn_augment(s, i, visited, m.row_match, m.col_match)) ++m.size;
    }
    return m;
}

// A cover certificate: set of row indices and column indices (0-based) such
// that every nonzero entry lies on one of them.
struct Cover {
    std::vector<int> rows, cols;

    int size() const { return static_cast<int>(rows.size() + cols.size()); }

    // Spec encoding: values <= m are rows, values > m encode column j as j+m.
    std::vector<int> lines_1based(int m) const {
        std::vector<int> lines;
        lines.reserve(rows.size() + cols.size());
        for (int r : rows) lines.push_back(r + 1);
        for (int c : cols) lines.push_back(m + c + 1);
        return lines;
    }
};

inline bool cover_is_valid(const Support& s, const Cover& cover) {
    std::vector<char> row_in(s.m, 0), col_in(s.n, 0);
    for (int r : cover.rows) row_in[r] = 1;
    for (int c : cover.cols) col_in[c] = 1;
    for (int i = 0; i < s.m; ++i) {
        if (row_in[i]) continue;
        bool bad = false;
        s.for_each_in_row(i, [&](int j) {
            if (!col_in[j]) bad = true;
        });
        if (bad) return false;
    }
    return true;
}

inline bool cover_is_valid(const Mat& a, const Cover& cover) { return cover_is_valid(Support::of(a), cover); }

// Koenig's construction: minimum vertex cover from a maximum matching.
// Z = vertices reachable from unmatched rows by alternating paths; the cover
// is (rows not in Z) united with (columns in Z).
inline Cover koenig_cover(const Support& s, const Matching& m) {
    std::vector<char> row_z(s.m, 0), col_z(s.n, 0);
    std::vector<int> queue;
    for (int i = 0; i < s.m; ++i)
        if (m.row_match[i] < 0) {
            row_z[i] = 1;
            queue.push_back(i);
        }
    while (!queue.empty()) {
        int i = queue.back();
        queue.pop_back();
        s.for_each_in_row(i, [&](int j) {
            if (j == m.row_match[i] || col_z[j]) return;
            col_z[j] = 1;
            int r = m.col_match[j];
            if (r >= 0 && !row_z[r]) {
                row_z[r] = 1;
                queue.push_back(r);
            }
        });
    }
    Cover c;
    for (int i = 0; i < s.m; ++i)
        if (!row_z[i] && m.row_match[i] >= 0) c.rows.push_back(i);
    for (int j = 0; j < s.n; ++j)
        if (col_z[j]) c.cols.push_back(j);
    return c;
}

struct MinimalCoverResult {
    int weight = 0;
    Cover cover;
    int tx = 0, ty = 0;  // rows and columns in the returned cover
    std::optional<bool> unique;
};

inline MinimalCoverResult cover_weight_support(const Support& s) {
    Matching m = max_matching(s);
    MinimalCoverResult r;
    r.weight = m.size;
    r.cover = koenig_cover(s, m);
    r.tx = static_cast<int>(r.cover.rows.size());
    r.ty = static_cast<int>(r.cover.cols.size());
    return r;
}

// Cover weight of a matrix: size of a minimal line cover, equal to the size
// of a maximum matching of the support graph by Koenig's theorem. The
// returned cover is a valid certificate of that size, deterministic in a.
inline MinimalCoverResult cover_weight(const Mat& a) { return cover_weight_support(Support::of(a)); }

inline bool cover_weight_at_least(const Support& s, int w) {
    if (w <= 0) return true;
    return max_matching(s, w).size >= w;
}

inline bool cover_weight_at_least(const Mat& a, int w) { return cover_weight_at_least(Support::of(a), w); }

inline int cover_distance(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || *a.field() != *b.field())
        throw ShapeMismatchError("cover_distance: shape mismatch");
    return cover_weight(a.sub(b)).weight;
}

namespace detail {

inline Support erase_lines(const Support& s, const std::vector<char>& drop_row, const std::vector<char>& drop_col) {
    Support r(s.m, s.n);
    for (int i = 0; i < s.m; ++i) {
        if (drop_row[i]) continue;
        s.for_each_in_row(i, [&](int j) {
            if (!drop_col[j]) r.set(i, j);
        });
    }
    return r;
}

// Minimum cover size among covers that avoid one specific line: the excluded
// line's nonzeros force the opposite-side lines into the cover; the residual
// is covered minimally.
inline int min_cover_avoiding_row(const Support& s, int row) {
    std::vector<char> drop_row(s.m, 0), drop_col(s.n, 0);
    drop_row[row] = 1;
    int forced = 0;
    s.for_each_in_row(row, [&](int j) {
        drop_col[j] = 1;
        ++forced;
    });
    Support residual = erase_lines(s, drop_row, drop_col);
    return forced + max_matching(residual).size;
}

inline int min_cover_avoiding_col(const Support& s, int col) {
    std::vector<char> drop_row(s.m, 0), drop_col(s.n, 0);
    drop_col[col] = 1;
    int forced = 0;
    for (int i = 0; i < s.m; ++i)
        if (s.get(i, col)) {
            drop_row[i] = 1;
            ++forced;
        }
    Support residual = erase_lines(s, drop_row, drop_col);
    return forced + max_matching(residual).size;
}

}  // namespace detail

// True iff exactly one cover of minimal size exists. For each line of the
// found minimal cover, the minimum cover is recomputed with that line
// excluded; reaching the same total size means a second minimal cover exists.
inline bool is_unique_minimal_cover(const Mat& a) {
    Support s = Support::of(a);
    MinimalCoverResult r = cover_weight_support(s);
    for (int row : r.cover.rows)
        if (detail::min_cover_avoiding_row(s, row) == r.weight) return false;
    for (int col : r.cover.cols)
        if (detail::min_cover_avoiding_col(s, col) == r.weight) return false;
    return true;
}

// Minimum cover distance: min over nonzero codewords of the cover weight.
inline int min_distance(const MatrixCode& code, std::uint64_t cap = kDefaultEnumCap) {
    if (code.k() == 0) throw DomainError("min_distance: the zero code has no nonzero codeword");
    int best = std::numeric_limits<int>::max();
    for_each_codeword(code, cap, [&](const std::vector<Elem>& u, const Mat& c) {
        bool zero = true;
        for (Elem v : u)
            if (v) {
                zero = false;
                break;
            }
        if (zero) return true;
        int w = cover_weight(c).weight;
        if (w < best) best = w;
        return best > 1;  // weight 1 cannot be beaten
    });
    return best;
}

namespace detail {

inline void require_sphere_enumerable(std::uint32_t q, int m, int n, std::uint64_t cap) {
    if (m * n > 62 || !checked_pow(q, static_cast<std::uint64_t>(m) * n, cap))
        throw TooLargeToEnumerateError("sphere enumeration: q^(mn) exceeds cap");
}

}  // namespace detail

namespace detail {

inline void support_from_mask(Support& s, int m, int n, std::uint64_t mask) {
    const std::uint64_t row_mask = (n == 64) ? ~0ull : ((1ull << n) - 1);
    for (int i = 0; i < m; ++i) s.bits[i] = (mask >> (i * n)) & row_mask;
}

}  // namespace detail

// All support patterns (as mn-bit masks, row-major) of cover weight exactly w.
inline std::vector<std::uint64_t> sphere_pattern_masks(int m, int n, int w) {
    if (m * n > 62) throw TooLargeToEnumerateError("sphere_pattern_masks: mn too large");
    std::vector<std::uint64_t> out;
    Support s(m, n);
    const std::uint64_t total = 1ull << (m * n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        detail::support_from_mask(s, m, n, mask);
        if (max_matching(s).size == w) out.push_back(mask);
    }
    return out;
}

// Exact sphere sizes F_C for w = 0..min(m,n), by exhausting support patterns:
// each pattern contributes (q-1)^popcount matrices, all of the same weight.
inline std::vector<std::uint64_t> sphere_sizes_by_weight(std::uint32_t q, int m, int n,
                                                         std::uint64_t cap = kDefaultEnumCap) {
    detail::require_sphere_enumerable(q, m, n, cap);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::min(m, n)) + 1, 0);
    Support s(m, n);
    const std::uint64_t total = 1ull << (m * n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        detail::support_from_mask(s, m, n, mask);
        int w = max_matching(s).size;
        std::uint64_t mult = 1;
        for (int b = __builtin_popcountll(mask); b > 0; --b) mult *= q - 1;
        counts[w] += mult;
    }
    return counts;
}

inline std::uint64_t sphere_size_exact(std::uint32_t q, int m, int n, int w, std::uint64_t cap = kDefaultEnumCap) {
    if (w < 0 || w > std::min(m, n)) return 0;
    return sphere_sizes_by_weight(q, m, n, cap)[w];
}

inline std::uint64_t ball_size_exact(std::uint32_t q, int m, int n, int w, std::uint64_t cap = kDefaultEnumCap) {
    std::vector<std::uint64_t> counts = sphere_sizes_by_weight(q, m, n, cap);
    std::uint64_t sum = 0;
    for (int i = 0; i <= w && i < static_cast<int>(counts.size()); ++i) sum += counts[i];
    return sum;
}

}  // namespace covermetric

#endif  // COVERMETRIC_COVER_HPP
