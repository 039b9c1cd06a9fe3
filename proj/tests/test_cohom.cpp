#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "af3/cohom.hpp"

using namespace af3;

namespace {

Presentation pres(int ngens, const std::vector<std::string>& rels) {
    Presentation P;
    P.ngens = ngens;
    for (const auto& r : rels) P.relators.push_back(parse_word(r, ngens));
    return P;
}

// find (a, b) in GL3(2) with |a|=2, |b|=3, |ab|=7, |[a,b]|=4
std::pair<FpMat, FpMat> gl32_standard_pair() {
    FpMat x = FpMat::from_rows(2, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    FpMat y = FpMat::from_rows(2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    MatrixGroup G(2, 3, {x, y});
    auto elems = enumerate_elements(G, 200);
    std::sort(elems.begin(), elems.end());
    for (const FpMat& a : elems) {
        if (mat_order(a, 10) != 2) continue;
        for (const FpMat& b : elems) {
            if (mat_order(b, 10) != 3) continue;
            if (mat_order(mat_mul(a, b), 10) != 7) continue;
            FpMat comm = mat_mul(mat_mul(a, mat_mul(b, b)), mat_mul(a, b));
            if (mat_order(comm, 10) != 4) continue;
            return {a, b};
        }
    }
    throw Error("no standard pair found");
}

}  // namespace

TEST_CASE("word parsing and evaluation") {
    Word w = parse_word("a^2", 2);
    CHECK(w.letters == std::vector<int>{0, 0});
    w = parse_word("(a*b)^-1", 2);
    CHECK(w.letters == std::vector<int>{3, 1});
    w = parse_word("[a,b]", 2);
    CHECK(w.letters == std::vector<int>{1, 3, 0, 2});
    CHECK(word_free_reduce(parse_word("a*a^-1*b", 2)).letters == std::vector<int>{2});
    CHECK_THROWS_AS(parse_word("a*c", 2), Error);
    CHECK_THROWS_AS(parse_word("a*", 2), Error);
    CHECK_THROWS_AS(parse_word("(a", 2), Error);

    FpMat x = FpMat::from_rows(2, {{1, 1}, {0, 1}});
    FpMat y = FpMat::from_rows(2, {{0, 1}, {1, 0}});
    CHECK(evaluate_word(parse_word("a^2", 2), {x, y}).is_identity());
    CHECK(evaluate_word(parse_word("a*b", 2), {x, y}) == mat_mul(x, y));
    CHECK(evaluate_word(parse_word("a^-1", 2), {x, y}) == mat_inverse_or_throw(x));
    CHECK(evaluate_word(parse_word("[a,b]", 2), {x, y}) ==
          mat_mul(mat_mul(mat_inverse_or_throw(x), mat_inverse_or_throw(y)), mat_mul(x, y)));
}

TEST_CASE("coset enumeration on standard presentations") {
    // S3 = <a,b | a^2, b^2, (a*b)^3>
    auto P = pres(2, {"a^2", "b^2", "(a*b)^3"});
    CHECK(todd_coxeter(P).index == 6);
    CHECK(todd_coxeter(P, {parse_word("a", 2)}).index == 3);
    CHECK(todd_coxeter(P, {parse_word("a*b", 2)}).index == 2);

    // quaternion group of order 8
    auto Q = pres(2, {"a^4", "a^2*b^-2", "b^-1*a*b*a"});
    CHECK(todd_coxeter(Q).index == 8);

    // coincidence-heavy collapse to Z_2
    auto C = pres(2, {"a^2", "b^2", "a*b"});
    CHECK(todd_coxeter(C).index == 2);

    // trivial group
    CHECK(todd_coxeter(pres(2, {"a", "b"})).index == 1);

    // L2(7) standard presentation
    auto L = pres(2, {"a^2", "b^3", "(a*b)^7", "[a,b]^4"});
    CHECK(todd_coxeter(L).index == 168);
    CHECK(todd_coxeter(L, {parse_word("a*b", 2)}).index == 24);

    // row limit triggers
    CHECK_THROWS_AS(todd_coxeter(L, {}, 50), Error);
}

TEST_CASE("presentation verification against a matrix group") {
    auto [a, b] = gl32_standard_pair();
    MatrixGroup G(2, 3, {a, b});
    REQUIRE(G.order() == 168);
    auto L = pres(2, {"a^2", "b^3", "(a*b)^7", "[a,b]^4"});
    CHECK(verify_presentation(G, L));
    // enumeration over the cyclic subgroup <ab> of order 7
    CHECK(verify_presentation(G, L, {parse_word("a*b", 2)}));
    // b^3 is a relator, so <b> is a sound enumeration subgroup too
    CHECK(verify_presentation(G, L, {parse_word("b", 2)}));
    // subgroup word without a literal power relator is rejected as unsound
    CHECK_THROWS_AS(verify_presentation(G, L, {parse_word("a*b*a", 2)}), Error);
    // false relator detected
    auto bad = pres(2, {"a^2", "b^3", "(a*b)^3", "[a,b]^4"});
    CHECK(!verify_presentation(G, bad));
    // relators all hold but the presented group is bigger than G
    auto weak = pres(2, {"a^2", "b^3", "(a*b)^7", "[a,b]^4", "a^2"});
    weak.relators.pop_back();            // keep it a copy of L
    weak.relators.erase(weak.relators.begin() + 3);  // drop [a,b]^4 -> infinite 2,3,7 group
    CHECK_THROWS_AS(verify_presentation(G, weak, {}, 20000), Error);
}

TEST_CASE("cocycle space: H^1(Z2, trivial F2) is one-dimensional") {
    FpMat s = FpMat::from_rows(2, {{0, 1}, {1, 0}});
    MatrixGroup G(2, 2, {s});
    FpModule triv = trivial_module(2, 1);
    auto P = pres(1, {"a^2"});
    REQUIRE(verify_presentation(G, P));
    CocycleSpace C = cocycle_space(G, triv, P);
    CHECK(int(C.z_basis.size()) == 1);
    CHECK(int(C.b_basis.size()) == 0);
    CHECK(C.h1_dim() == 1);
    auto reps = h1_representatives(C);
    CHECK(reps.size() == 2);
}

TEST_CASE("cocycle space: complements of V4 in S4 are all conjugate") {
    // S3 acting as GL2(2) on F_2^2: H^1 = 0
    FpMat a = FpMat::from_rows(2, {{0, 1}, {1, 0}});   // order 2
    FpMat b = FpMat::from_rows(2, {{0, 1}, {1, 1}});   // order 3
    MatrixGroup G(2, 2, {a, b});
    REQUIRE(G.order() == 6);
    auto P = pres(2, {"a^2", "b^3", "(a*b)^2"});
    REQUIRE(verify_presentation(G, P));
    FpModule M{2, 2, {a, b}};
    CocycleSpace C = cocycle_space(G, M, P);
    CHECK(int(C.z_basis.size()) == 2);  // = dim B^1 (no fixed vectors)
    CHECK(C.h1_dim() == 0);
    CHECK(h1_representatives(C).size() == 1);
}

TEST_CASE("cocycle space: H^1(L2(7), natural) is one-dimensional") {
    auto [a, b] = gl32_standard_pair();
    MatrixGroup G(2, 3, {a, b});
    auto P = pres(2, {"a^2", "b^3", "(a*b)^7", "[a,b]^4"});
    FpModule M{2, 3, {a, b}};
    CocycleSpace C = cocycle_space(G, M, P);
    CHECK(int(C.b_basis.size()) == 3);
    CHECK(C.h1_dim() == 1);
    // the inverse-transpose automorphism swaps natural and dual, so the
    // dual module has the same H^1 dimension
    CocycleSpace D = cocycle_space(G, dual_module(M), P);
    CHECK(D.h1_dim() == 1);
}

TEST_CASE("cocycle values on words respect the defining identities") {
    auto [a, b] = gl32_standard_pair();
    MatrixGroup G(2, 3, {a, b});
    auto P = pres(2, {"a^2", "b^3", "(a*b)^7", "[a,b]^4"});
    FpModule M{2, 3, {a, b}};
    CocycleSpace C = cocycle_space(G, M, P);
    for (const FpVec& phi : C.z_basis) {
        // phi vanishes on every relator
        for (const Word& r : P.relators) {
            FpVec v = cocycle_on_word(phi, r, M);
            for (uint8_t e : v) CHECK(e == 0);
        }
        // phi(w * w^-1) = 0 for a random-ish word
        Word w = parse_word("a*b*a*b^-1*a", 2);
        Word ww = w;
        Word wi = word_inverse(w);
        ww.letters.insert(ww.letters.end(), wi.letters.begin(), wi.letters.end());
        FpVec v = cocycle_on_word(phi, ww, M);
        for (uint8_t e : v) CHECK(e == 0);
    }
}
