#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "af3/grp.hpp"

using namespace af3;

namespace {

MatrixGroup gl32() {
    FpMat a = FpMat::from_rows(2, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    FpMat b = FpMat::from_rows(2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    return MatrixGroup(2, 3, {a, b});
}

MatrixGroup gl23() {
    FpMat t = FpMat::from_rows(3, {{1, 1}, {0, 1}});
    FpMat d = FpMat::from_rows(3, {{2, 0}, {0, 1}});
    FpMat s = FpMat::from_rows(3, {{0, 1}, {1, 0}});
    return MatrixGroup(3, 2, {t, d, s});
}

// S4 as permutation matrices
MatrixGroup s4_perm(int p) {
    FpMat c(p, 4, 4), t(p, 4, 4);
    int cyc[4] = {1, 2, 3, 0};
    for (int i = 0; i < 4; ++i) c.set(cyc[i], i, 1);
    t = FpMat::identity(p, 4);
    t.set(0, 0, 0); t.set(1, 1, 0); t.set(0, 1, 1); t.set(1, 0, 1);
    return MatrixGroup(p, 4, {c, t});
}

}  // namespace

TEST_CASE("orders via BSGS agree with exhaustive enumeration") {
    MatrixGroup G = gl32();
    CHECK(G.order() == 168);
    CHECK(enumerate_elements(G, 1000).size() == 168);

    MatrixGroup H = gl23();
    CHECK(H.order() == 48);
    CHECK(enumerate_elements(H, 1000).size() == 48);

    CHECK(s4_perm(2).order() == 24);
    CHECK(s4_perm(3).order() == 24);
    CHECK_THROWS_AS(enumerate_elements(G, 100), Error);
}

TEST_CASE("trivial and cyclic groups") {
    MatrixGroup T(2, 3, {FpMat::identity(2, 3)});
    CHECK(T.order() == 1);
    FpMat c = FpMat::from_rows(2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    MatrixGroup C(2, 3, {c});
    CHECK(C.order() == 3);
    CHECK(C.contains(mat_mul(c, c)));
    CHECK(!C.contains(FpMat::from_rows(2, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})));
}

TEST_CASE("membership") {
    MatrixGroup S = s4_perm(2);
    std::vector<FpMat> all = enumerate_elements(S, 30);
    CHECK(all.size() == 24);
    for (const FpMat& e : all) CHECK(S.contains(e));
    FpMat t = FpMat::identity(2, 4);
    t.set(0, 1, 1);  // transvection, not a permutation matrix
    CHECK(!S.contains(t));
}

TEST_CASE("orbits on the natural domain") {
    CHECK(orbit_sizes_sorted(gl32()) == std::vector<uint64_t>{1, 7});
    // S4 permuting coordinates of F_2^4: orbits by weight
    CHECK(orbit_sizes_sorted(s4_perm(2)) == std::vector<uint64_t>{1, 1, 4, 4, 6});
    // GL2(3) on F_3^2: zero + 8 nonzero
    CHECK(orbit_sizes_sorted(gl23()) == std::vector<uint64_t>{1, 8});
}

TEST_CASE("spin and invariant subspaces") {
    MatrixGroup S = s4_perm(2);
    Subspace full = spin_vectors(2, 4, S.gens(), {FpVec{1, 0, 0, 0}});
    CHECK(full.dim() == 4);
    Subspace ones = spin_vectors(2, 4, S.gens(), {FpVec{1, 1, 1, 1}});
    CHECK(ones.dim() == 1);
    CHECK(is_invariant(S, ones));
    Subspace e1 = Subspace::from_vectors(2, 4, {FpVec{1, 0, 0, 0}});
    CHECK(!is_invariant(S, e1));

    auto mins = minimal_invariant_subspaces(S);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0].basis == std::vector<FpVec>{FpVec{1, 1, 1, 1}});

    // GL3(2) natural module is irreducible: unique minimal = whole space
    auto mg = minimal_invariant_subspaces(gl32());
    REQUIRE(mg.size() == 1);
    CHECK(mg[0].dim() == 3);
}

TEST_CASE("coset stabilizer and transitivity on a coset") {
    // unipotent group <[[1,1],[0,1]]> over F_2, W = <e1>
    FpMat u = FpMat::from_rows(2, {{1, 1}, {0, 1}});
    MatrixGroup U(2, 2, {u});
    Subspace W = Subspace::from_vectors(2, 2, {FpVec{1, 0}});
    FpVec v{0, 1};
    MatrixGroup St = setwise_coset_stabilizer(U, W, v);
    CHECK(St.order() == 2);
    CHECK(rank3_criterion(U, W, v));

    MatrixGroup T(2, 2, {FpMat::identity(2, 2)});
    CHECK(!rank3_criterion(T, W, v));
    CHECK_THROWS_AS(rank3_criterion(U, W, FpVec{1, 0}), Error);
}

TEST_CASE("p-core") {
    // O_2(S4) = V4 when S4 acts by permutation matrices over F_2
    MatrixGroup S2 = s4_perm(2);
    CHECK(p_core(S2, 100).order() == 4);
    // O_3(S4) = 1
    CHECK(p_core(s4_perm(3), 100).order() == 1);
    // O_2 of GL3(2) = 1
    CHECK(p_core(gl32(), 1000).order() == 1);
    // p-group is its own core
    FpMat u = FpMat::from_rows(2, {{1, 1}, {0, 1}});
    CHECK(p_core(MatrixGroup(2, 2, {u}), 10).order() == 2);
}

TEST_CASE("subgroup conjugacy search") {
    MatrixGroup G = gl32();
    FpMat t12 = FpMat::identity(2, 3); t12.set(0, 1, 1);
    FpMat t13 = FpMat::identity(2, 3); t13.set(0, 2, 1);
    MatrixGroup H(2, 3, {t12}), K(2, 3, {t13});
    auto g = subgroup_conjugator(G, H, K, 1000);
    REQUIRE(g.has_value());
    FpMat gi = mat_inverse_or_throw(*g);
    CHECK(K.contains(mat_mul(gi, mat_mul(t12, *g))));

    FpMat c = FpMat::from_rows(2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    CHECK(!subgroup_conjugator(G, H, MatrixGroup(2, 3, {c}), 1000).has_value());
}

TEST_CASE("generators recovered from an element list") {
    MatrixGroup S = s4_perm(2);
    std::vector<FpMat> all = enumerate_elements(S, 30);
    MatrixGroup R = group_from_element_set(2, 4, all);
    CHECK(R.order() == 24);
    for (const FpMat& g : R.gens()) CHECK(S.contains(g));
}

TEST_CASE("L2(7) census of GL3(2) finds exactly the group itself") {
    auto classes = l27_subgroup_census(gl32(), 1000);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].class_size == 1);
    CHECK(classes[0].rep.order() == 168);
    CHECK(classes[0].invariant_1spaces == 0);
    CHECK(classes[0].invariant_hyperplanes == 0);
}
