#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "af3/scene.hpp"

#include <algorithm>

using namespace af3;

namespace {

Presentation pres(int ngens, const std::vector<std::string>& rels) {
    Presentation P;
    P.ngens = ngens;
    for (const auto& r : rels) P.relators.push_back(parse_word(r, ngens));
    return P;
}

// standard (2,3,7;4) generator pair of GL3(2), found by search
std::pair<FpMat, FpMat> gl32_standard_pair() {
    FpMat x = FpMat::from_rows(2, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    FpMat y = FpMat::from_rows(2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    auto elems = enumerate_elements(MatrixGroup(2, 3, {x, y}), 200);
    std::sort(elems.begin(), elems.end());
    for (const FpMat& a : elems) {
        if (mat_order(a, 10) != 2) continue;
        for (const FpMat& b : elems) {
            if (mat_order(b, 10) != 3) continue;
            if (mat_order(mat_mul(a, b), 10) != 7) continue;
            if (mat_order(mat_mul(mat_mul(a, mat_mul(b, b)), mat_mul(a, b)), 10) != 4) continue;
            return {a, b};
        }
    }
    throw Error("no standard pair");
}

FpModule gl32_nat_std() {
    auto [a, b] = gl32_standard_pair();
    return FpModule{2, 3, {a, b}};
}

Presentation l27_pres() { return pres(2, {"a^2", "b^3", "(a*b)^7", "[a,b]^4"}); }

std::vector<uint64_t> sizes(const std::vector<uint64_t>& v) { return v; }

}  // namespace

TEST_CASE("unipotent and levi embeddings") {
    FpVec c{1, 0, 1};  // 1x3 block
    FpMat u = unipotent(2, 1, 3, c);
    CHECK(u == FpMat::from_rows(2, {{1, 1, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(mat_order(u, 10) == 2);
    FpMat A = FpMat::from_rows(3, {{2}});
    FpMat B = FpMat::from_rows(3, {{1, 1}, {0, 1}});
    CHECK(levi_embed(A, B) == FpMat::from_rows(3, {{2, 0, 0}, {0, 1, 1}, {0, 0, 1}}));
}

TEST_CASE("parabolic subgroups have the right orders") {
    CHECK(parabolic(2, 4, 1).order() == 1344);    // 2^3 * |GL3(2)|
    CHECK(parabolic(2, 4, 3).order() == 1344);
    CHECK(parabolic(2, 4, 2).order() == 576);     // 2^4 * 36
    CHECK(parabolic(3, 3, 1).order() == 864);     // 3^2 * 2 * 48
    // sanity: full GL via gl_generators
    CHECK(MatrixGroup(2, 4, gl_generators(2, 4)).order() == 20160);
    CHECK(MatrixGroup(3, 2, gl_generators(3, 2)).order() == 48);
    CHECK(MatrixGroup(5, 2, gl_generators(5, 2)).order() == 480);
    CHECK(MatrixGroup(7, 1, gl_generators(7, 1)).order() == 6);
    CHECK(MatrixGroup(11, 2, gl_generators(11, 2)).order() == 13200);
}

TEST_CASE("scene construction and the tensor conjugation identity") {
    FpModule nat = gl32_nat_std();
    // (2,4,1): trivial W, natural U
    Scene Y = build_scene(trivial_module(2, 2), nat);
    CHECK(Y.full.order() == 8 * 168);
    CHECK(Y.H_levi.order() == 168);
    CHECK(conjugation_matches_tensor(Y));
    // (2,4,3): natural W, trivial U
    Scene Hp = build_scene(nat, trivial_module(2, 2));
    CHECK(Hp.full.order() == 8 * 168);
    CHECK(conjugation_matches_tensor(Hp));
    // (2,6,3): natural W, dual U
    Scene M2 = build_scene(nat, dual_module(nat));
    CHECK(M2.full.order() == 512 * 168);
    CHECK(conjugation_matches_tensor(M2));
    // odd characteristic
    FpMat t = FpMat::from_rows(3, {{1, 1}, {0, 1}});
    FpMat s = FpMat::from_rows(3, {{0, 2}, {1, 0}});
    FpModule g23{3, 2, {t, s}};
    Scene S3s = build_scene(g23, trivial_module(3, 2));
    CHECK(conjugation_matches_tensor(S3s));
    // O_p of a scene is the unipotent radical Q
    CHECK(p_core(Y.full, 2000).order() == 8);
}

TEST_CASE("complement classes in 2^3 : GL3(2), hyperplane side") {
    FpModule nat = gl32_nat_std();
    Scene S = build_scene(nat, trivial_module(2, 2));
    auto classes = complement_classes(S, l27_pres());
    REQUIRE(classes.size() == 2);
    std::vector<std::vector<uint64_t>> censuses;
    for (auto& c : classes) censuses.push_back(c.orbit_sizes);
    std::sort(censuses.begin(), censuses.end());
    // split complement (the Levi) and the twisted one
    CHECK(censuses[0] == std::vector<uint64_t>{1, 1, 7, 7});
    CHECK(censuses[1] == std::vector<uint64_t>{1, 7, 8});
    // the brute-force oracle agrees
    CHECK(count_complement_classes_bruteforce(S, l27_pres()) == 2);
}

TEST_CASE("complement classes in 2^3 : GL3(2), point side") {
    FpModule nat = gl32_nat_std();
    Scene S = build_scene(trivial_module(2, 2), nat);
    auto classes = complement_classes(S, l27_pres());
    REQUIRE(classes.size() == 2);
    std::vector<std::vector<uint64_t>> censuses;
    for (auto& c : classes) censuses.push_back(c.orbit_sizes);
    std::sort(censuses.begin(), censuses.end());
    CHECK(censuses[0] == std::vector<uint64_t>{1, 1, 7, 7});
    CHECK(censuses[1] == std::vector<uint64_t>{1, 1, 14});
    CHECK(count_complement_classes_bruteforce(S, l27_pres()) == 2);
}

TEST_CASE("complement classes: A4-type scene has a single class") {
    FpMat r = FpMat::from_rows(2, {{0, 1}, {1, 1}});  // order 3
    FpModule W{2, 2, {r}};
    Scene S = build_scene(W, trivial_module(2, 1));
    CHECK(S.full.order() == 12);
    auto P = pres(1, {"a^3"});
    auto classes = complement_classes(S, P);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].orbit_sizes == std::vector<uint64_t>{1, 1, 3, 3});
    CHECK(count_complement_classes_bruteforce(S, P) == 1);
}

TEST_CASE("complement classes in an odd-characteristic scene") {
    // 3^2 : SL2(3)
    FpMat t = FpMat::from_rows(3, {{1, 1}, {0, 1}});
    FpMat s = FpMat::from_rows(3, {{0, 2}, {1, 0}});
    MatrixGroup H(3, 2, {t, s});
    REQUIRE(H.order() == 24);  // both generators have determinant 1
    FpModule nat{3, 2, {t, s}};
    Scene S = build_scene(nat, trivial_module(3, 2));
    Presentation P = discover_presentation(S.H_levi);
    REQUIRE(verify_presentation(S.H_levi, P));
    // the cohomological class count must agree with the brute-force census
    auto classes = complement_classes(S, P);
    CHECK(classes.size() == count_complement_classes_bruteforce(S, P));
}

TEST_CASE("paper groups: orders, orbit censuses, structure") {
    MatrixGroup G1 = paper_G1(), G2 = paper_G2(), L = paper_L();
    CHECK(G1.order() == 168);
    CHECK(G2.order() == 168);
    CHECK(L.order() == 168);
    CHECK(sizes(orbit_sizes_sorted(G1)) == std::vector<uint64_t>{1, 1, 14});
    CHECK(sizes(orbit_sizes_sorted(G2)) == std::vector<uint64_t>{1, 7, 8});
    CHECK(sizes(orbit_sizes_sorted(L)) == std::vector<uint64_t>{1, 1, 7, 7});
    // all three are irreducible-order-168 subgroups with trivial 2-core
    CHECK(p_core(G1, 1000).order() == 1);
    CHECK(p_core(G2, 1000).order() == 1);
    // G1 fixes the 1-space <e0>; G2 fixes the hyperplane <e0,e1,e2>;
    // L fixes <e0> and the complementary hyperplane <e1,e2,e3>
    Subspace W1 = Subspace::from_vectors(2, 4, {FpVec{1, 0, 0, 0}});
    Subspace W3 = Subspace::from_vectors(
        2, 4, {FpVec{1, 0, 0, 0}, FpVec{0, 1, 0, 0}, FpVec{0, 0, 1, 0}});
    Subspace U3 = Subspace::from_vectors(
        2, 4, {FpVec{0, 1, 0, 0}, FpVec{0, 0, 1, 0}, FpVec{0, 0, 0, 1}});
    CHECK(is_invariant(G1, W1));
    CHECK(is_invariant(G2, W3));
    CHECK(is_invariant(L, W1));
    CHECK(is_invariant(L, U3));
    CHECK(!is_invariant(G1, W3));
    CHECK(!is_invariant(G2, W1));
    // rank-3 transitivity on the nontrivial coset side
    CHECK(rank3_criterion(G1, W1, FpVec{0, 1, 0, 0}));
    CHECK(rank3_criterion(G2, W3, FpVec{0, 0, 0, 1}));
    CHECK(!rank3_criterion(L, W1, FpVec{0, 1, 0, 0}));
}

TEST_CASE("paper groups are complements in their parabolics") {
    // G1 lies in the point parabolic, G2 in the hyperplane parabolic
    MatrixGroup P1 = parabolic(2, 4, 1), P3 = parabolic(2, 4, 3);
    MatrixGroup G1 = paper_G1(), G2 = paper_G2();
    for (const FpMat& g : G1.gens()) CHECK(P1.contains(g));
    for (const FpMat& g : G2.gens()) CHECK(P3.contains(g));
    // and each is conjugate to the twisted complement of its scene
    FpModule nat = gl32_nat_std();
    Scene S1 = build_scene(trivial_module(2, 2), nat);
    auto classes = complement_classes(S1, l27_pres());
    const ComplementClassInfo* twisted = nullptr;
    for (auto& c : classes)
        if (c.orbit_sizes == std::vector<uint64_t>{1, 1, 14}) twisted = &c;
    REQUIRE(twisted != nullptr);
    MatrixGroup C = complement_group(S1, twisted->phi);
    MatrixGroup GL42(2, 4, gl_generators(2, 4));
    auto conj = subgroup_conjugator(GL42, paper_G1(), C, 25000);
    CHECK(conj.has_value());
}
