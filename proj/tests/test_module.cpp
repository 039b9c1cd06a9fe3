#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "af3/module.hpp"

#include <random>

using namespace af3;

namespace {

FpModule gl32_nat() {
    FpMat a = FpMat::from_rows(2, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    FpMat b = FpMat::from_rows(2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    return FpModule{2, 3, {a, b}};
}

FpModule s4_perm_mod(int p) {
    FpMat c(p, 4, 4);
    int cyc[4] = {1, 2, 3, 0};
    for (int i = 0; i < 4; ++i) c.set(cyc[i], i, 1);
    FpMat t = FpMat::identity(p, 4);
    t.set(0, 0, 0); t.set(1, 1, 0); t.set(0, 1, 1); t.set(1, 0, 1);
    return FpModule{p, 4, {c, t}};
}

FpModule gl23_nat() {
    FpMat t = FpMat::from_rows(3, {{1, 1}, {0, 1}});
    FpMat d = FpMat::from_rows(3, {{2, 0}, {0, 1}});
    FpMat s = FpMat::from_rows(3, {{0, 1}, {1, 0}});
    return FpModule{3, 2, {t, d, s}};
}

FpModule conjugate_module(const FpModule& M, const FpMat& T) {
    FpMat Ti = mat_inverse_or_throw(T);
    FpModule R{M.p, M.dim, {}};
    for (const FpMat& g : M.mats) R.mats.push_back(mat_mul(T, mat_mul(g, Ti)));
    return R;
}

}  // namespace

TEST_CASE("polynomial arithmetic and factorization") {
    // (x+1)^2 = x^2+1 over F_2: distinct factors {x+1}
    auto f = poly_distinct_irreducible_factors(Poly{1, 0, 1}, 2);
    REQUIRE(f.size() == 1);
    CHECK(f[0] == Poly{1, 1});
    // x^2+1 irreducible over F_3
    f = poly_distinct_irreducible_factors(Poly{1, 0, 1}, 3);
    REQUIRE(f.size() == 1);
    CHECK(f[0] == Poly{1, 0, 1});
    // (x^2+x+1)(x^3+x+1) over F_2
    Poly prod = poly_mul(Poly{1, 1, 1}, Poly{1, 1, 0, 1}, 2);
    f = poly_distinct_irreducible_factors(prod, 2);
    REQUIRE(f.size() == 2);
    CHECK(std::count(f.begin(), f.end(), Poly{1, 1, 1}) == 1);
    CHECK(std::count(f.begin(), f.end(), Poly{1, 1, 0, 1}) == 1);
}

TEST_CASE("x^(p^3)-x factors into degrees dividing 3") {
    Poly f(9, 0);  // x^8 + x over F_2
    f[8] = 1;
    f[1] = 1;
    auto fac = poly_distinct_irreducible_factors(f, 2);
    // x, x+1, and the two cubics
    REQUIRE(fac.size() == 4);
    int deg1 = 0, deg3 = 0;
    for (const Poly& q : fac) {
        if (q.size() == 2) ++deg1;
        if (q.size() == 4) ++deg3;
    }
    CHECK(deg1 == 2);
    CHECK(deg3 == 2);
}

TEST_CASE("minimal polynomials") {
    // companion matrix of x^3+x+1 over F_2
    FpMat C = FpMat::from_rows(2, {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}});
    CHECK(min_poly(C) == Poly{1, 1, 0, 1});
    CHECK(min_poly(FpMat::identity(2, 4)) == Poly{1, 1});  // x + 1
    CHECK(min_poly(FpMat::identity(5, 2)) == Poly{4, 1});  // x - 1
    // min poly evaluates to zero on its matrix
    CHECK(poly_eval_mat(min_poly(C), C) == FpMat::zero(2, 3, 3));
}

TEST_CASE("meataxe agrees with the exhaustive spin oracle") {
    std::vector<std::pair<const char*, FpModule>> battery;
    battery.emplace_back("gl32 natural", gl32_nat());
    battery.emplace_back("gl32 dual", dual_module(gl32_nat()));
    battery.emplace_back("s4 perm F2", s4_perm_mod(2));
    battery.emplace_back("s4 perm F3", s4_perm_mod(3));
    battery.emplace_back("gl23 natural", gl23_nat());
    battery.emplace_back("gl23 tensor dual", tensor_module(gl23_nat(), dual_module(gl23_nat())));
    battery.emplace_back("gl32 tensor dual", tensor_module(gl32_nat(), dual_module(gl32_nat())));
    battery.emplace_back("trivial", trivial_module(2, 2));
    for (auto& [name, M] : battery) {
        CAPTURE(name);
        MeataxeResult r = meataxe(M);
        CHECK(r.irreducible == is_irreducible_exhaustive(M));
        if (!r.irreducible) {
            CHECK(r.submodule.dim() > 0);
            CHECK(r.submodule.dim() < M.dim);
            CHECK(is_invariant(group_from_module(M), r.submodule));
        }
    }
}

TEST_CASE("dual and tensor identities") {
    FpModule M = gl32_nat();
    FpModule DD = dual_module(dual_module(M));
    CHECK(DD.mats == M.mats);
    // natural and dual of GL3(2) are not isomorphic
    CHECK(!is_isomorphic(M, dual_module(M)));
    // tensor with the trivial module is the module itself
    FpModule T = tensor_module(M, trivial_module(2, 2));
    CHECK(T.dim == 3);
    CHECK(is_isomorphic(T, M));
}

TEST_CASE("isomorphism detects basis change") {
    FpModule M = gl32_nat();
    FpMat T = FpMat::from_rows(2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 0}});
    REQUIRE(mat_inverse(T));
    CHECK(is_isomorphic(M, conjugate_module(M, T)));
    FpModule N = gl23_nat();
    CHECK(is_isomorphic(N, conjugate_module(N, FpMat::from_rows(3, {{1, 2}, {1, 1}}))));
}

TEST_CASE("hom spaces") {
    FpModule M = gl32_nat();
    CHECK(hom_space(M, M).size() == 1);                 // absolutely irreducible
    CHECK(hom_space(M, dual_module(M)).empty());        // non-isomorphic irreducibles
    FpModule S = s4_perm_mod(2);
    // perm module: endomorphisms a*I + b*AllOnes -> dim 2
    CHECK(hom_space(S, S).size() == 2);
}

TEST_CASE("fixed spaces") {
    FpModule S = s4_perm_mod(2);
    Subspace F = fixed_space(S);
    REQUIRE(F.dim() == 1);
    CHECK(F.basis[0] == FpVec{1, 1, 1, 1});
    CHECK(fixed_space(gl32_nat()).dim() == 0);
    CHECK(fixed_space(s4_perm_mod(3)).dim() == 1);
}

TEST_CASE("sub and quotient actions") {
    FpModule S = s4_perm_mod(2);
    // sum-zero subspace is invariant, 3-dimensional
    Subspace Z = Subspace::from_vectors(
        2, 4, {FpVec{1, 1, 0, 0}, FpVec{0, 1, 1, 0}, FpVec{0, 0, 1, 1}});
    REQUIRE(Z.dim() == 3);
    FpModule sub = submodule_action(S, Z);
    CHECK(sub.dim == 3);
    CHECK(group_from_module(sub).order() == 24);  // action stays faithful on sum-zero
    // all-ones sits inside sum-zero; its image in sub has a fixed vector
    CHECK(fixed_space(sub).dim() == 1);

    FpModule quo = quotient_action(S, Z);
    CHECK(quo.dim == 1);
    for (const FpMat& g : quo.mats) CHECK(g.is_identity());

    // quotient by the all-ones line: 3-dimensional, irreducible? No: the
    // image of sum-zero is a proper invariant plane.
    Subspace ones = Subspace::from_vectors(2, 4, {FpVec{1, 1, 1, 1}});
    FpModule q3 = quotient_action(S, ones);
    CHECK(q3.dim == 3);
    CHECK(is_irreducible_exhaustive(q3) == is_irreducible(q3));

    CHECK_THROWS_AS(submodule_action(S, Subspace::from_vectors(2, 4, {FpVec{1, 0, 0, 0}})),
                    Error);
}
