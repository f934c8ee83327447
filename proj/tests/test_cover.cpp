#include <catch2/catch_amalgamated.hpp>

#include "covermetric/code.hpp"
#include "covermetric/cover.hpp"
#include "covermetric/rng.hpp"
#include "oracles.hpp"

using namespace covermetric;

namespace {

Mat padded_identity(const FieldPtr& f, int m, int n, int t) {
    Mat a(f, m, n);
    for (int i = 0; i < t; ++i) a.set(i, i, 1);
    return a;
}

Mat stacked_ones(const FieldPtr& f, int m, int n, int t) {
    Mat a(f, m, n);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < n; ++j) a.set(i, j, 1);
    return a;
}

void exhaustive_against_oracle(const FieldPtr& f, int m, int n) {
    std::uint64_t total = 1;
    for (int i = 0; i < m * n; ++i) total *= f->q();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Mat a(f, m, n);
        std::uint64_t v = idx;
        for (int pos = 0; pos < m * n; ++pos) {
            a.set(pos / n, pos % n, static_cast<Elem>(v % f->q()));
            v /= f->q();
        }
        MinimalCoverResult r = cover_weight(a);
        REQUIRE(r.weight == oracle::brute_min_cover(a));
        REQUIRE(cover_is_valid(a, r.cover));
        REQUIRE(r.cover.size() == r.weight);
        REQUIRE(r.tx + r.ty == r.weight);
    }
}

}  // namespace

TEST_CASE("matching cover weight equals brute force exhaustively", "[cover]") {
    exhaustive_against_oracle(make_field(2, 1), 2, 2);
    exhaustive_against_oracle(make_field(2, 1), 2, 3);
    exhaustive_against_oracle(make_field(3, 1), 2, 2);
    exhaustive_against_oracle(make_field(3, 1), 2, 3);
}

TEST_CASE("matching cover weight equals brute force on random 6x6 GF(4)", "[cover]") {
    auto f = make_field(2, 2);
    Rng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        Mat a = random_mat(f, 6, 6, rng);
        MinimalCoverResult r = cover_weight(a);
        REQUIRE(r.weight == oracle::brute_min_cover(a));
        REQUIRE(cover_is_valid(a, r.cover));
    }
}

TEST_CASE("cover weight worked examples", "[cover]") {
    auto f = make_field(2, 1);
    REQUIRE(cover_weight(Mat::from_rows(f, {{1, 1, 0}, {1, 1, 0}, {0, 0, 0}})).weight == 2);
    REQUIRE(cover_weight(padded_identity(f, 4, 4, 2)).weight == 2);

    MinimalCoverResult zero = cover_weight(Mat(f, 3, 4));
    REQUIRE(zero.weight == 0);
    REQUIRE(zero.cover.rows.empty());
    REQUIRE(zero.cover.cols.empty());

    Mat ones(f, 3, 5);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j) ones.set(i, j, 1);
    REQUIRE(cover_weight(ones).weight == 3);
}

TEST_CASE("cover weight is a support invariant under permutations", "[cover]") {
    auto f = make_field(2, 2);
    Rng rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        Mat a = random_mat(f, 4, 5, rng);
        std::vector<int> rp{0, 1, 2, 3}, cp{0, 1, 2, 3, 4};
        for (int i = 3; i > 0; --i) std::swap(rp[i], rp[rng.uniform_below(i + 1)]);
        for (int i = 4; i > 0; --i) std::swap(cp[i], cp[rng.uniform_below(i + 1)]);
        Mat b(f, 4, 5);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 5; ++j) b.set(i, j, a.at(rp[i], cp[j]));
        REQUIRE(cover_weight(a).weight == cover_weight(b).weight);
    }
}

TEST_CASE("rank lower-bounds the cover weight", "[cover]") {
    auto f = make_field(3, 1);
    Rng rng(66);
    for (int trial = 0; trial < 60; ++trial) {
        Mat a = random_mat(f, 4, 4, rng);
        int w = cover_weight(a).weight;
        REQUIRE(rank(a) <= w);
        REQUIRE(w <= 4);
        for (int bound = 0; bound <= 5; ++bound) REQUIRE(cover_weight_at_least(a, bound) == (w >= bound));
    }
}

TEST_CASE("cover distance metric properties", "[cover]") {
    auto f = make_field(2, 1);
    Rng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        Mat a = random_mat(f, 3, 3, rng), b = random_mat(f, 3, 3, rng), c = random_mat(f, 3, 3, rng);
        REQUIRE(cover_distance(a, a) == 0);
        REQUIRE(cover_distance(a, Mat(f, 3, 3)) == cover_weight(a).weight);
        REQUIRE(cover_distance(a, b) == cover_distance(b, a));
        REQUIRE(cover_distance(a, c) <= cover_distance(a, b) + cover_distance(b, c));
    }
    REQUIRE_THROWS_AS(cover_distance(Mat(f, 2, 2), Mat(f, 2, 3)), ShapeMismatchError);
}

TEST_CASE("unique minimal cover worked examples", "[cover]") {
    auto f = make_field(2, 1);
    REQUIRE(is_unique_minimal_cover(stacked_ones(f, 4, 4, 2)));
    REQUIRE_FALSE(is_unique_minimal_cover(padded_identity(f, 4, 4, 2)));
    REQUIRE(is_unique_minimal_cover(Mat(f, 3, 3)));
    REQUIRE_FALSE(is_unique_minimal_cover(padded_identity(f, 2, 2, 1)));
}

TEST_CASE("uniqueness agrees with brute-force enumeration on all 3x3 GF(2) matrices", "[cover]") {
    auto f = make_field(2, 1);
    for (std::uint32_t bits = 0; bits < 512; ++bits) {
        Mat a(f, 3, 3);
        for (int pos = 0; pos < 9; ++pos)
            if ((bits >> pos) & 1) a.set(pos / 3, pos % 3, 1);
        REQUIRE(is_unique_minimal_cover(a) == (oracle::count_minimal_covers(a) == 1));
    }
}

TEST_CASE("minimum distance examples", "[cover]") {
    auto f = make_field(2, 1);
    Mat g1 = Mat::from_rows(f, {{1, 0}, {0, 0}});
    Mat g2 = Mat::from_rows(f, {{0, 0}, {0, 1}});
    REQUIRE(min_distance(MatrixCode::make(f, 2, 2, {g1, g2})) == 1);

    Mat j = Mat::from_rows(f, {{1, 1}, {1, 1}});
    REQUIRE(min_distance(MatrixCode::make(f, 2, 2, {j})) == 2);

    REQUIRE_THROWS_AS(min_distance(MatrixCode::make(f, 2, 2, {j}), 1), TooLargeToEnumerateError);
}

TEST_CASE("random small codes satisfy the Singleton analogue", "[cover]") {
    Rng rng(99);
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}}) {
        auto f = make_field(p, e);
        for (int trial = 0; trial < 15; ++trial) {
            int m = 3 + static_cast<int>(rng.uniform_below(2));  // n <= m
            int n = 3;
            int k = 1 + static_cast<int>(rng.uniform_below(4));
            MatrixCode code = random_code(f, m, n, k, rng);
            int d = min_distance(code);
            REQUIRE(static_cast<double>(d) <= n - static_cast<double>(k) / m + 1 + 1e-12);
        }
    }
}

TEST_CASE("exact sphere and ball sizes at 2x2 over GF(2)", "[cover]") {
    REQUIRE(sphere_size_exact(2, 2, 2, 0) == 1);
    REQUIRE(sphere_size_exact(2, 2, 2, 1) == 8);
    REQUIRE(sphere_size_exact(2, 2, 2, 2) == 7);
    REQUIRE(ball_size_exact(2, 2, 2, 1) == 9);
    REQUIRE(ball_size_exact(2, 2, 2, 2) == 16);
    REQUIRE(ball_size_exact(3, 2, 2, 2) == 81);

    // sphere sizes add up to the whole space for several (q, m, n)
    for (std::uint32_t q : {2u, 3u, 4u}) {
        auto sizes = sphere_sizes_by_weight(q, 2, 3);
        std::uint64_t total = 0, space = 1;
        for (auto s : sizes) total += s;
        for (int i = 0; i < 6; ++i) space *= q;
        REQUIRE(total == space);
    }

    REQUIRE_THROWS_AS(sphere_size_exact(2, 6, 6, 2, 1 << 10), TooLargeToEnumerateError);
}
