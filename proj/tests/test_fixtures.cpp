#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "af3/fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace af3;

namespace {

// GL3(2) on standard generators with the (2,3,7;4) presentation.
Fixture gl32_fixture() {
    FpMat t = FpMat::from_rows(2, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    FpMat c = FpMat::from_rows(2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    MatrixGroup amb(2, 3, {t, c});
    auto elems = enumerate_elements(amb, 200);
    std::sort(elems.begin(), elems.end());
    for (const FpMat& a : elems) {
        if (mat_order(a) != 2) continue;
        for (const FpMat& b : elems) {
            if (mat_order(b) != 3) continue;
            if (mat_order(mat_mul(a, b)) != 7) continue;
            FpMat comm = mat_mul(mat_mul(a, mat_mul(b, b)), mat_mul(a, b));
            if (mat_order(comm) != 4) continue;
            Fixture f;
            f.name = "tiny";
            f.p = 2;
            f.dim = 3;
            f.order = 168;
            f.transitive = true;
            f.gens = {a, b};
            for (const char* r : {"a^2", "b^3", "(a*b)^7", "[a,b]^4"})
                f.relators.push_back(parse_word(r, 2));
            FixtureModule nat;
            nat.label = "nat";
            nat.mod = FpModule{2, 3, {a, b}};
            nat.irreducible = true;
            f.modules.push_back(nat);
            FixtureModule dual;
            dual.label = "dual";
            dual.mod = dual_module(nat.mod);
            f.modules.push_back(dual);
            return f;
        }
    }
    throw Error("no pair");
}

}  // namespace

TEST_CASE("serialize / parse roundtrip") {
    Fixture f = gl32_fixture();
    f.tcsub = parse_word("a*b", 2);
    std::string text = serialize_fixture(f);
    Fixture g = parse_fixture(text);
    CHECK(g.name == f.name);
    CHECK(g.p == f.p);
    CHECK(g.dim == f.dim);
    CHECK(g.order == f.order);
    CHECK(g.transitive == f.transitive);
    REQUIRE(g.gens.size() == f.gens.size());
    for (size_t i = 0; i < f.gens.size(); ++i) CHECK(g.gens[i] == f.gens[i]);
    REQUIRE(g.relators.size() == f.relators.size());
    for (size_t i = 0; i < f.relators.size(); ++i)
        CHECK(word_str(g.relators[i]) == word_str(f.relators[i]));
    REQUIRE(g.tcsub.has_value());
    CHECK(word_str(*g.tcsub) == "a*b");
    REQUIRE(g.modules.size() == 2);
    CHECK(g.modules[0].label == "nat");
    CHECK(g.modules[0].mod.mats == f.modules[0].mod.mats);
    REQUIRE(g.modules[0].irreducible.has_value());
    CHECK(*g.modules[0].irreducible == true);
    CHECK(!g.modules[1].irreducible.has_value());
    // serialization is stable
    CHECK(serialize_fixture(g) == text);
}

TEST_CASE("certify accepts a correct fixture") {
    Fixture f = gl32_fixture();
    CHECK_NOTHROW(certify_fixture(f));
    f.tcsub = parse_word("a*b", 2);  // (a*b)^7 is a relator, so this is sound
    CHECK_NOTHROW(certify_fixture(f));
}

TEST_CASE("certify rejects wrong claims") {
    SUBCASE("wrong order") {
        Fixture f = gl32_fixture();
        f.order = 167;
        CHECK_THROWS_AS(certify_fixture(f), Error);
    }
    SUBCASE("wrong transitivity") {
        Fixture f = gl32_fixture();
        f.transitive = false;
        CHECK_THROWS_AS(certify_fixture(f), Error);
    }
    SUBCASE("relator that does not hold") {
        Fixture f = gl32_fixture();
        f.relators.push_back(parse_word("a^3", 2));
        CHECK_THROWS_AS(certify_fixture(f), Error);
    }
    SUBCASE("incomplete presentation") {
        Fixture f = gl32_fixture();
        f.relators.pop_back();  // drop [a,b]^4: enumeration cannot close at 168
        CHECK_THROWS_AS(certify_fixture(f, 20000), Error);
    }
    SUBCASE("unsound tcsub word") {
        Fixture f = gl32_fixture();
        f.tcsub = parse_word("a*b*b", 2);  // no matching power relator
        CHECK_THROWS_AS(certify_fixture(f), Error);
    }
    SUBCASE("module violating a relator") {
        Fixture f = gl32_fixture();
        FixtureModule bad;
        bad.label = "bad";
        bad.mod = FpModule{2, 3, {f.gens[0], f.gens[0]}};  // b-slot has order 2
        f.modules.push_back(bad);
        CHECK_THROWS_AS(certify_fixture(f), Error);
    }
    SUBCASE("wrong irreducibility claim") {
        Fixture f = gl32_fixture();
        f.modules[0].irreducible = false;
        CHECK_THROWS_AS(certify_fixture(f), Error);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_fixture("name x\np 4\ndim 2\norder 1\ntransitive 0\n"), Error);
    CHECK_THROWS_AS(parse_fixture("bogus line\n"), Error);
    CHECK_THROWS_AS(parse_fixture("name x\np 2\ndim 2\norder 1\ntransitive 0\ngen 1 0 0\n"),
                    Error);  // wrong entry count
    CHECK_THROWS_AS(parse_fixture("name x\np 2\ndim 2\norder 1\ntransitive 0\ngen 1 0 0 3\n"),
                    Error);  // residue out of range
    CHECK_THROWS_AS(parse_fixture(""), Error);
}

TEST_CASE("file loading, manifest, and directory resolution") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "af3_fixture_test";
    fs::remove_all(dir);
    fs::create_directories(dir);

    Fixture f = gl32_fixture();
    {
        std::ofstream out(dir / "tiny.fix");
        out << "# comment line\n\n" << serialize_fixture(f);
    }
    {
        std::ofstream out(dir / "also.fix");
        out << serialize_fixture(f);
    }
    std::ofstream(dir / "ignored.txt") << "not a fixture\n";

    Fixture g = load_fixture_file((dir / "tiny.fix").string());
    CHECK(g.order == 168);

    auto manifest = fixture_manifest(dir.string());
    REQUIRE(manifest.size() == 2);
    CHECK(manifest[0] == "also");
    CHECK(manifest[1] == "tiny");

    CHECK(fixtures_dir("explicit") == "explicit");
    setenv("AFFRANK3_FIXTURES", dir.string().c_str(), 1);
    CHECK(fixtures_dir() == dir.string());
    CHECK(fixtures_dir("explicit") == "explicit");
    unsetenv("AFFRANK3_FIXTURES");
    CHECK(fixtures_dir() == "fixtures");

    fs::remove_all(dir);
}
