#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "covermetric/code.hpp"
#include "covermetric/cover.hpp"
#include "covermetric/mat.hpp"
#include "covermetric/rng.hpp"

using namespace covermetric;

namespace {

MatrixCode diagonal_unit_code() {
    auto f = make_field(2, 1);
    Mat g1 = Mat::from_rows(f, {{1, 0}, {0, 0}});
    Mat g2 = Mat::from_rows(f, {{0, 0}, {0, 1}});
    return MatrixCode::make(f, 2, 2, {g1, g2});
}

Mat transpose(const Mat& a) {
    Mat t(a.field(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t.set(j, i, a.at(i, j));
    return t;
}

Elem literal_trace_product(const Mat& a, const Mat& b) {
    Mat prod = mat_mul(a, transpose(b));
    Elem s = 0;
    for (int i = 0; i < prod.rows(); ++i) s = a.field()->add(s, prod.at(i, i));
    return s;
}

}  // namespace

TEST_CASE("vectorize is the row-major bijection", "[matspace]") {
    auto f = make_field(2, 1);
    Mat id = Mat::from_rows(f, {{1, 0}, {0, 1}});
    REQUIRE(id.vectorize() == std::vector<Elem>{1, 0, 0, 1});

    Mat row = Mat::from_rows(f, {{1, 1, 0, 1}});
    REQUIRE(row.vectorize() == std::vector<Elem>{1, 1, 0, 1});

    Rng rng(7);
    auto f4 = make_field(2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        Mat a = random_mat(f4, 3, 5, rng);
        REQUIRE(Mat::devectorize(f4, a.vectorize(), 3, 5) == a);
    }
}

TEST_CASE("code_make enforces independence and dimension", "[matspace]") {
    MatrixCode code = diagonal_unit_code();
    REQUIRE(code.k() == 2);
    REQUIRE(rank(code.gbar()) == 2);

    auto f = make_field(2, 1);
    Mat a = Mat::from_rows(f, {{1, 1}, {0, 1}});
    REQUIRE_THROWS_AS(MatrixCode::make(f, 2, 2, {a, a}), DependentGeneratorsError);
}

TEST_CASE("random generator sets are independent with the predicted probability", "[matspace]") {
    // k uniform draws in GF(2)^{3x3} are independent with probability
    // prod_{i=0}^{k-1} (1 - 2^(i-9)); k = 8 gives about 0.2887.
    auto f = make_field(2, 1);
    const int k = 8, mn = 9, trials = 20000;
    double expected = 1.0;
    for (int i = 0; i < k; ++i) expected *= 1.0 - std::exp2(i - mn);
    Rng rng(42);
    int full = 0;
    for (int trial = 0; trial < trials; ++trial) {
        Mat gbar(f, k, mn);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < mn; ++j) gbar.set(i, j, static_cast<Elem>(rng.uniform_below(2)));
        if (rank(gbar) == k) ++full;
    }
    double rate = static_cast<double>(full) / trials;
    double sigma = std::sqrt(expected * (1 - expected) / trials);
    REQUIRE(std::abs(rate - expected) < 4 * sigma);
}

TEST_CASE("encode examples and vector-form fidelity", "[matspace]") {
    MatrixCode code = diagonal_unit_code();
    auto f = code.field();
    REQUIRE(code.encode({0, 0}).is_zero());
    REQUIRE(code.encode({1, 0}) == code.generators()[0]);
    REQUIRE(code.encode({1, 1}) == Mat::from_rows(f, {{1, 0}, {0, 1}}));

    // {u Gbar} devectorized equals {sum u_i G_i}, exhaustively.
    auto f3 = make_field(3, 1);
    Rng rng(5);
    MatrixCode rc = random_code(f3, 2, 3, 3, rng);
    std::set<std::vector<Elem>> via_sum, via_gbar;
    for_each_codeword(rc, 1 << 20, [&](const std::vector<Elem>& u, const Mat& c) {
        via_sum.insert(c.entries());
        via_gbar.insert(vec_mat_mul(u, rc.gbar()));
        REQUIRE(c.entries() == vec_mat_mul(u, rc.gbar()));
        return true;
    });
    REQUIRE(via_sum == via_gbar);
    REQUIRE(via_sum.size() == 27);
}

TEST_CASE("trace product equals the vector-form dot product", "[matspace]") {
    auto f = make_field(2, 2);
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Mat a = random_mat(f, 3, 4, rng);
        Mat b = random_mat(f, 3, 4, rng);
        Elem dot = 0;
        auto va = a.vectorize(), vb = b.vectorize();
        for (std::size_t i = 0; i < va.size(); ++i) dot = f->add(dot, f->mul(va[i], vb[i]));
        REQUIRE(trace_product(a, b) == dot);
        REQUIRE(trace_product(a, b) == literal_trace_product(a, b));
    }
}

TEST_CASE("dual basis dimension and orthogonality", "[matspace]") {
    auto f = make_field(2, 1);

    // whole space: dual is empty
    std::vector<Mat> full_gens;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Mat g(f, 2, 2);
            g.set(i, j, 1);
            full_gens.push_back(g);
        }
    MatrixCode full = MatrixCode::make(f, 2, 2, full_gens);
    REQUIRE(dual_basis(full).empty());

    // zero code: dual is a basis of the whole 4-dim space
    MatrixCode zero = MatrixCode::make(f, 2, 2, {});
    REQUIRE(dual_basis(zero).size() == 4);

    // diagonal-unit code: dual spans the anti-diagonal positions
    MatrixCode diag = diagonal_unit_code();
    std::vector<Mat> duals = dual_basis(diag);
    REQUIRE(duals.size() == 2);
    REQUIRE(duals[0] == Mat::from_rows(f, {{0, 1}, {0, 0}}));
    REQUIRE(duals[1] == Mat::from_rows(f, {{0, 0}, {1, 0}}));
    for_each_codeword(diag, 1 << 10, [&](const std::vector<Elem>&, const Mat& c) {
        for (const Mat& h : duals) REQUIRE(trace_product(c, h) == 0);
        return true;
    });
}

TEST_CASE("syndrome characterizes membership exhaustively", "[matspace]") {
    MatrixCode diag = diagonal_unit_code();
    auto f = diag.field();
    std::vector<Mat> duals = dual_basis(diag);

    // first-entry example: E = H_1
    std::vector<Elem> s1 = syndrome(duals, duals[0]);
    REQUIRE(s1[0] == trace_product(duals[0], duals[0]));
    REQUIRE(s1[0] == 1);

    int in_code = 0;
    for (std::uint32_t bits = 0; bits < 16; ++bits) {
        Mat e(f, 2, 2);
        for (int pos = 0; pos < 4; ++pos)
            if ((bits >> pos) & 1) e.set(pos / 2, pos % 2, 1);
        std::vector<Elem> s = syndrome(duals, e);
        bool zero = std::all_of(s.begin(), s.end(), [](Elem v) { return v == 0; });
        REQUIRE(zero == diag.contains(e));
        if (zero) ++in_code;
    }
    REQUIRE(in_code == 4);

    // bilinearity
    Rng rng(3);
    auto f4 = make_field(2, 2);
    MatrixCode rc = random_code(f4, 2, 3, 2, rng);
    std::vector<Mat> rduals = dual_basis(rc);
    REQUIRE(rduals.size() == 4);
    for (int trial = 0; trial < 20; ++trial) {
        Mat e1 = random_mat(f4, 2, 3, rng), e2 = random_mat(f4, 2, 3, rng);
        std::vector<Elem> s_sum = syndrome(rduals, e1.add(e2));
        std::vector<Elem> s1v = syndrome(rduals, e1), s2v = syndrome(rduals, e2);
        for (std::size_t i = 0; i < s_sum.size(); ++i) REQUIRE(s_sum[i] == f4->add(s1v[i], s2v[i]));
    }
}

TEST_CASE("information block examples", "[matspace]") {
    MatrixCode diag = diagonal_unit_code();

    auto block = find_info_block(diag, {0, 1}, {0, 1});
    REQUIRE(block.has_value());
    REQUIRE(block->innerset == std::vector<int>{0, 3});

    REQUIRE_FALSE(find_info_block(diag, {0}, {0, 1}).has_value());
    REQUIRE_FALSE(find_info_block(diag, {0, 1}, {0}).has_value());

    auto f = make_field(2, 1);
    std::vector<Mat> full_gens;
    for (int pos = 0; pos < 4; ++pos) {
        Mat g(f, 2, 2);
        g.set(pos / 2, pos % 2, 1);
        full_gens.push_back(g);
    }
    MatrixCode full = MatrixCode::make(f, 2, 2, full_gens);
    auto fb = find_info_block(full, {0, 1}, {0, 1});
    REQUIRE(fb.has_value());
    REQUIRE(fb->innerset == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("systematic form identities", "[matspace]") {
    MatrixCode diag = diagonal_unit_code();
    auto block = find_info_block(diag, {0, 1}, {0, 1});
    Mat gs = systematic_form(diag, *block);
    REQUIRE(gs == diag.gbar());  // already systematic on I

    auto f3 = make_field(3, 1);
    Rng rng(9);
    MatrixCode rc = random_code(f3, 3, 3, 4, rng);
    auto rb = find_info_block(rc, {0, 1, 2}, {0, 1, 2});
    REQUIRE(rb.has_value());
    Mat rgs = systematic_form(rc, *rb);

    // identity on the I positions
    for (int i = 0; i < rc.k(); ++i)
        for (int j = 0; j < rc.k(); ++j) REQUIRE(rgs.at(i, rb->innerset[j]) == (i == j ? 1 : 0));

    // same row space both ways
    for (int i = 0; i < rc.k(); ++i) {
        std::vector<Elem> row(rgs.cols());
        for (int j = 0; j < rgs.cols(); ++j) row[j] = rgs.at(i, j);
        REQUIRE(solve_in_rowspan(rc.gbar(), row).has_value());
        for (int j = 0; j < rgs.cols(); ++j) row[j] = rc.gbar().at(i, j);
        REQUIRE(solve_in_rowspan(rgs, row).has_value());
    }

    // re-encoding from the restricted positions reproduces every codeword
    for_each_codeword(rc, 1 << 20, [&](const std::vector<Elem>&, const Mat& c) {
        std::vector<Elem> restricted = c.submatrix(rb->rowset, rb->colset).vectorize();
        std::vector<Elem> coeffs(rc.k());
        for (int i = 0; i < rc.k(); ++i) coeffs[i] = restricted[rb->innerset[i]];
        REQUIRE(vec_mat_mul(coeffs, rgs) == c.vectorize());
        return true;
    });
}

TEST_CASE("basis embedding reproduces the worked example", "[matspace]") {
    auto f8 = make_field(2, 3);
    auto f2 = make_field(2, 1);
    // alpha = x = element 2; gamma = {1, alpha, alpha^2}, x = (alpha+1, alpha+1, 0)
    BasisEmbedding gamma = BasisEmbedding::make(f8, {1, 2, 4});
    Mat a = gamma_embed(gamma, {3, 3, 0});
    REQUIRE(a == Mat::from_rows(f2, {{1, 1, 0}, {1, 1, 0}, {0, 0, 0}}));
    REQUIRE(cover_weight(a).weight == 2);

    BasisEmbedding gamma2 = BasisEmbedding::make(f8, {3, 2, 4});  // {1+alpha, alpha, alpha^2}
    Mat b = gamma_embed(gamma2, {3, 3, 0});
    REQUIRE(b == Mat::from_rows(f2, {{1, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
    REQUIRE(cover_weight(b).weight == 1);

    REQUIRE(gamma_embed(gamma, {0, 0, 0}).is_zero());
    REQUIRE_THROWS_AS(BasisEmbedding::make(f8, {1, 2, 3}), DomainError);  // 3 = 1 + alpha dependent
}

TEST_CASE("row reduction brings cover weight down to the rank", "[matspace]") {
    auto f2 = make_field(2, 1);
    Mat example = Mat::from_rows(f2, {{1, 1, 0}, {1, 1, 0}, {0, 0, 0}});
    auto [u, reduced] = row_reduce_weight(example);
    REQUIRE(mat_mul(u, example) == reduced);
    REQUIRE_NOTHROW(invert(u));
    REQUIRE(cover_weight(reduced).weight == 1);
    REQUIRE(rank(example) == 1);

    REQUIRE(row_reduce_weight(Mat(f2, 3, 3)).second.is_zero());

    Rng rng(17);
    auto f4 = make_field(2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        Mat a = random_mat(f4, 4, 4, rng);
        auto [uu, red] = row_reduce_weight(a);
        REQUIRE(cover_weight(red).weight == rank(a));
        REQUIRE(rank(a) <= cover_weight(a).weight);
        REQUIRE(cover_weight(a).weight <= 4);
        REQUIRE(mat_mul(uu, a) == red);
    }

    // full-rank n x n stays at weight n
    Mat id3 = Mat::from_rows(f2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    REQUIRE(cover_weight(row_reduce_weight(id3).second).weight == 3);
}

TEST_CASE("syndrome membership equivalence on larger exhaustive spaces", "[matspace]") {
    // q^(mn) up to 2^12: enumerate every matrix of the ambient space
    struct Case {
        std::uint32_t p, e;
        int m, n, k;
    };
    for (Case c : {Case{2, 1, 3, 4, 5}, Case{2, 2, 2, 3, 3}, Case{3, 1, 2, 3, 2}}) {
        auto f = make_field(c.p, c.e);
        Rng rng(1000 + c.p + c.e);
        MatrixCode code = random_code(f, c.m, c.n, c.k, rng);
        std::vector<Mat> duals = dual_basis(code);
        REQUIRE(static_cast<int>(duals.size()) == c.m * c.n - c.k);
        std::uint64_t space = 1, members = 0;
        for (int i = 0; i < c.m * c.n; ++i) space *= f->q();
        for (std::uint64_t idx = 0; idx < space; ++idx) {
            Mat e(f, c.m, c.n);
            std::uint64_t v = idx;
            for (int pos = 0; pos < c.m * c.n; ++pos) {
                e.set(pos / c.n, pos % c.n, static_cast<Elem>(v % f->q()));
                v /= f->q();
            }
            std::vector<Elem> s = syndrome(duals, e);
            bool zero = std::all_of(s.begin(), s.end(), [](Elem x) { return x == 0; });
            if (zero) {
                ++members;
                REQUIRE(code.contains(e));
            }
        }
        std::uint64_t expected = 1;
        for (int i = 0; i < c.k; ++i) expected *= f->q();
        REQUIRE(members == expected);
    }
}
