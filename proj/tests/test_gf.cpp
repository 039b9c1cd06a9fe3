#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "af3/gf.hpp"

#include <random>

using namespace af3;

namespace {

FpMat random_mat(std::mt19937& rng, int p, int r, int c) {
    FpMat M(p, r, c);
    std::uniform_int_distribution<int> d(0, p - 1);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) M.set(i, j, d(rng));
    return M;
}

FpMat random_invertible(std::mt19937& rng, int p, int n) {
    for (;;) {
        FpMat M = random_mat(rng, p, n, n);
        if (mat_inverse(M)) return M;
    }
}

}  // namespace

TEST_CASE("scalar arithmetic") {
    for (int p : {2, 3, 5, 7, 11}) {
        CHECK(is_prime(p));
        for (int a = 1; a < p; ++a) {
            CHECK(fp_mul(uint8_t(a), fp_inv(uint8_t(a), p), p) == 1);
            CHECK(fp_add(uint8_t(a), fp_neg(uint8_t(a), p), p) == 0);
        }
    }
    CHECK(!is_prime(4));
    CHECK(!is_prime(9));
    CHECK_THROWS_AS(fp_inv(0, 5), Error);
}

TEST_CASE("matrix inverse roundtrip") {
    std::mt19937 rng(7);
    for (int p : {2, 3, 5, 7, 11}) {
        for (int n : {1, 2, 3, 4, 6}) {
            for (int t = 0; t < 20; ++t) {
                FpMat A = random_invertible(rng, p, n);
                FpMat Ai = mat_inverse_or_throw(A);
                CHECK(mat_mul(A, Ai).is_identity());
                CHECK(mat_mul(Ai, A).is_identity());
                CHECK(inverse_transpose(A) == Ai.transpose());
            }
        }
    }
    FpMat S = FpMat::from_rows(3, {{1, 2}, {2, 1}});  // det = 1-4 = 0 mod 3
    CHECK(!mat_inverse(S));
    CHECK_THROWS_AS(mat_inverse_or_throw(S), Error);
}

TEST_CASE("rref, rank, kernel, solve") {
    std::mt19937 rng(11);
    for (int p : {2, 3, 5}) {
        for (int t = 0; t < 40; ++t) {
            FpMat A = random_mat(rng, p, 4, 6);
            int rk = mat_rank(A);
            auto ker = kernel_basis(A);
            CHECK(rk + int(ker.size()) == 6);
            for (const FpVec& k : ker) {
                FpVec img = mat_apply(A, k);
                for (uint8_t e : img) CHECK(e == 0);
            }
            // Ax = A*x0 must be solvable and solutions verified
            FpVec x0(6);
            std::uniform_int_distribution<int> d(0, p - 1);
            for (auto& e : x0) e = uint8_t(d(rng));
            FpVec b = mat_apply(A, x0);
            auto x = solve_linear(A, b);
            REQUIRE(x.has_value());
            CHECK(mat_apply(A, *x) == b);
        }
    }
    // inconsistent system
    FpMat A = FpMat::from_rows(2, {{1, 0}, {1, 0}});
    CHECK(!solve_linear(A, FpVec{0, 1}).has_value());
}

TEST_CASE("kronecker matches vec(A X B^T)") {
    std::mt19937 rng(13);
    for (int p : {2, 3, 7}) {
        FpMat A = random_mat(rng, p, 3, 3);
        FpMat B = random_mat(rng, p, 2, 2);
        FpMat X = random_mat(rng, p, 3, 2);
        FpMat Y = mat_mul(mat_mul(A, X), B.transpose());
        // row-major vec
        FpVec vx(size_t(3 * 2)), vy(size_t(3 * 2));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j) {
                vx[size_t(i * 2 + j)] = X.at(i, j);
                vy[size_t(i * 2 + j)] = Y.at(i, j);
            }
        CHECK(mat_apply(kronecker(A, B), vx) == vy);
    }
}

TEST_CASE("encode/decode roundtrip") {
    for (int p : {2, 3, 11}) {
        uint64_t dom = pow_u64(uint64_t(p), 4);
        for (uint32_t c = 0; c < dom; ++c) {
            FpVec v = decode_vec(c, p, 4);
            CHECK(encode_vec(v, p) == c);
        }
    }
}

TEST_CASE("matrix order") {
    FpMat c = FpMat::from_rows(2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    CHECK(mat_order(c) == 3);
    FpMat t = FpMat::from_rows(2, {{1, 1}, {0, 1}});
    CHECK(mat_order(t) == 2);
    FpMat u = FpMat::from_rows(11, {{1, 1}, {0, 1}});
    CHECK(mat_order(u) == 11);
    CHECK(mat_order(FpMat::identity(5, 3)) == 1);
}

TEST_CASE("element keys distinguish all small matrices") {
    // all 2x2 over F_3: 81 matrices, keys must be distinct
    std::unordered_set<ElemKey, ElemKeyHash> keys;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    FpMat M = FpMat::from_rows(3, {{a, b}, {c, d}});
                    keys.insert(mat_key(M));
                }
    CHECK(keys.size() == 81);
    // capacity guard: 8x8 over F_11 needs 8*64 = 512 bits
    CHECK_THROWS_AS(mat_key(FpMat::identity(11, 9)), Error);
}
