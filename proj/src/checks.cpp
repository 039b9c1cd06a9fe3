#include "af3/checks.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <thread>

namespace af3 {

using nlohmann::json;

namespace {

struct Ctx {
    std::string fixtures_override;

    Fixture load(const std::string& name) const {
        std::string dir = fixtures_dir(fixtures_override);
        return load_fixture_file(dir + "/" + name + ".fix");
    }
};

struct Outcome {
    json expected;
    json computed;
};

json census_json(const MatrixGroup& G) {
    json a = json::array();
    for (uint64_t s : orbit_sizes_sorted(G)) a.push_back(s);
    return a;
}

json basis_json(const Subspace& S) {
    json rows = json::array();
    for (const FpVec& r : S.basis) {
        json row = json::array();
        for (uint8_t x : r) row.push_back(int(x));
        rows.push_back(row);
    }
    return rows;
}

bool gens_match(const std::vector<FpMat>& a, const std::vector<FpMat>& b) {
    return a == b;
}

std::vector<Word> tcsub_of(const Fixture& f) {
    return f.tcsub ? std::vector<Word>{*f.tcsub} : std::vector<Word>{};
}

// Orbit-count list (number of orbits on F_p^n per complement class), sorted.
std::vector<int> class_orbit_counts(const Scene& S, const Presentation& P,
                                    const std::vector<Word>& tc_subgroup) {
    std::vector<int> counts;
    for (const ComplementClassInfo& c : complement_classes(S, P, tc_subgroup))
        counts.push_back(int(c.orbit_sizes.size()));
    std::sort(counts.begin(), counts.end());
    return counts;
}

FpModule direct_sum(const FpModule& A, const FpModule& B) {
    if (A.p != B.p || A.mats.size() != B.mats.size()) throw Error("direct_sum: misaligned");
    FpModule S{A.p, A.dim + B.dim, {}};
    for (size_t i = 0; i < A.mats.size(); ++i) {
        FpMat M(A.p, S.dim, S.dim);
        for (int r = 0; r < A.dim; ++r)
            for (int c = 0; c < A.dim; ++c) M.set(r, c, A.mats[i].at(r, c));
        for (int r = 0; r < B.dim; ++r)
            for (int c = 0; c < B.dim; ++c) M.set(A.dim + r, A.dim + c, B.mats[i].at(r, c));
        S.mats.push_back(std::move(M));
    }
    return S;
}

bool relators_hold(const std::vector<Word>& rels, const std::vector<FpMat>& mats) {
    for (const Word& r : rels)
        if (!evaluate_word(r, mats).is_identity()) return false;
    return true;
}

// ------------------------------------------------------------- V1 .. V3

Outcome orbit_census_check(const Ctx& ctx, const std::string& fixture_name,
                           const MatrixGroup& reference, const json& expected_census) {
    Fixture f = ctx.load(fixture_name);
    json expected = {{"generators_verbatim", true}, {"orbit_census", expected_census}};
    json computed = {{"generators_verbatim", gens_match(f.gens, reference.gens())},
                     {"orbit_census", census_json(f.group())}};
    return {expected, computed};
}

Outcome check_v1(const Ctx& ctx) {
    return orbit_census_check(ctx, "g1_gl42", paper_G1(), {1, 1, 14});
}
Outcome check_v2(const Ctx& ctx) {
    return orbit_census_check(ctx, "g2_gl42", paper_G2(), {1, 7, 8});
}
Outcome check_v3(const Ctx& ctx) {
    return orbit_census_check(ctx, "levi_gl42", paper_L(), {1, 1, 7, 7});
}

// ------------------------------------------------------------------- V4

Outcome check_v4(const Ctx&) {
    MatrixGroup GL42(2, 4, gl_generators(2, 4));
    std::vector<SubgroupClass> classes = l27_subgroup_census(GL42);
    json patterns = json::array();
    int in_p1 = 0;
    for (const SubgroupClass& c : classes) {
        patterns.push_back(json::array(
            {c.invariant_1spaces > 0 ? 1 : 0, c.invariant_hyperplanes > 0 ? 1 : 0}));
        if (c.invariant_1spaces > 0) ++in_p1;
    }
    json expected = {{"classes", 3},
                     {"patterns", json::array({{0, 1}, {1, 0}, {1, 1}})},
                     {"classes_with_invariant_1space", 2}};
    std::sort(patterns.begin(), patterns.end());
    json computed = {{"classes", int(classes.size())},
                     {"patterns", patterns},
                     {"classes_with_invariant_1space", in_p1}};
    return {expected, computed};
}

// ------------------------------------------------------------------- V5

Outcome check_v5(const Ctx& ctx) {
    auto minimal = [&](const std::string& name) {
        json list = json::array();
        MatrixGroup G = ctx.load(name).group();
        std::vector<Subspace> subs = minimal_invariant_subspaces(G);
        std::sort(subs.begin(), subs.end());
        for (const Subspace& s : subs) list.push_back(basis_json(s));
        return list;
    };
    json W = json::array({{1, 0, 0, 0}});
    json U = json::array({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    json Wl = json::array({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    json expected = {{"g1", json::array({W})},
                     {"g2", json::array({U})},
                     {"levi", json::array({W, Wl})}};
    json computed = {{"g1", minimal("g1_gl42")},
                     {"g2", minimal("g2_gl42")},
                     {"levi", minimal("levi_gl42")}};
    return {expected, computed};
}

// ------------------------------------------------------------------- V6

Outcome check_v6(const Ctx&) {
    auto check = [](const FpModule& W, const FpModule& U) {
        Scene S = build_scene(W, U);
        return conjugation_matches_tensor(S);
    };
    FpModule gl32{2, 3, gl_generators(2, 3)};
    FpModule gl43{3, 4, gl_generators(3, 4)};
    json expected = {{"scene_2_4_1", true}, {"scene_2_6_3", true}, {"scene_3_8_4", true}};
    json computed = {
        {"scene_2_4_1", check(trivial_module(2, int(gl32.mats.size())), gl32)},
        {"scene_2_6_3", check(gl32, dual_module(gl32))},
        {"scene_3_8_4", check(gl43, dual_module(gl43))}};
    return {expected, computed};
}

// ------------------------------------------------------------------- V7

json pair_entry(const std::string& w, const std::string& u, bool iso, int classes,
                const std::vector<int>& orbit_counts) {
    return {{"W", w}, {"U", u}, {"iso", iso}, {"classes", classes},
            {"orbit_counts", orbit_counts}};
}

Outcome check_v7(const Ctx& ctx) {
    struct Row {
        std::string fixture;
        // expected (classes, orbit counts) for isomorphic / non-isomorphic pairs
        int iso_classes;
        std::vector<int> iso_orbits;
        int noniso_classes;
        std::vector<int> noniso_orbits;
    };
    const std::vector<Row> rows = {
        {"sl3_2", 1, {5}, 2, {5, 5}},
        {"sl3_3", 1, {6}, 1, {6}},
        {"sp4_2", 2, {5, 6}, 1, {5}},
        {"sp4_3", 3, {6, 6, 8}, 0, {}},
        {"sp6_2", 1, {6}, 0, {}},
        {"g2_2", 2, {7, 7}, 0, {}},
    };
    json expected = json::object();
    json computed = json::object();
    int min_orbits_seen = 1 << 20;
    for (const Row& row : rows) {
        Fixture f = ctx.load(row.fixture);
        Presentation P = f.presentation();
        std::vector<const FixtureModule*> V;
        for (const FixtureModule& m : f.modules)
            if (m.mod.dim == f.dim) V.push_back(&m);
        // each member of the module family must be an irreducible transitive
        // action of the same abstract group, pairwise non-isomorphic
        bool family_ok = true;
        for (size_t i = 0; i < V.size(); ++i) {
            const FpModule& m = V[i]->mod;
            if (!relators_hold(f.relators, m.mats) || !is_irreducible(m)) family_ok = false;
            auto sizes = orbit_sizes_sorted(group_from_module(m));
            if (sizes.size() != 2 || sizes[0] != 1) family_ok = false;
            for (size_t j = i + 1; j < V.size(); ++j)
                if (is_isomorphic(m, V[j]->mod)) family_ok = false;
        }
        json exp_pairs = json::array();
        json cmp_pairs = json::array();
        for (const FixtureModule* w : V)
            for (const FixtureModule* u : V) {
                bool iso = (w == u);
                Scene S = build_scene(w->mod, u->mod);
                std::vector<int> counts = class_orbit_counts(S, P, tcsub_of(f));
                if (!counts.empty()) min_orbits_seen = std::min(min_orbits_seen, counts.front());
                cmp_pairs.push_back(
                    pair_entry(w->label, u->label, iso, int(counts.size()), counts));
                exp_pairs.push_back(pair_entry(w->label, u->label, iso,
                                               iso ? row.iso_classes : row.noniso_classes,
                                               iso ? row.iso_orbits : row.noniso_orbits));
            }
        expected[row.fixture] = {{"module_count", int(V.size())},
                                 {"family_verified", true},
                                 {"pairs", exp_pairs}};
        computed[row.fixture] = {{"module_count", int(V.size())},
                                 {"family_verified", family_ok},
                                 {"pairs", cmp_pairs}};
    }
    // the table's second row is computed for SL3(3); for the record, the
    // alternative reading (repeating SL3(2) with 6-orbit classes) is false
    bool alt = true;
    for (const json& pe : computed["sl3_2"]["pairs"])
        if (pe["orbit_counts"] != json::array({6}) &&
            pe["orbit_counts"] != json::array({6, 6}))
            alt = false;
    expected["second_row_alt_reading_sl3_2_matches"] = false;
    computed["second_row_alt_reading_sl3_2_matches"] = alt;
    expected["min_orbit_count_at_least_5"] = true;
    computed["min_orbit_count_at_least_5"] = (min_orbits_seen >= 5);
    return {expected, computed};
}

// ------------------------------------------------------------------- V8

Outcome check_v8(const Ctx& ctx) {
    const std::vector<std::string> names = {"a6_gl42", "sp4_2", "a7_gl42", "psu3_3", "g2_2"};
    json expected = {{"every_class_at_least_4_orbits", true}};
    bool ok = true;
    json detail = json::object();
    for (const std::string& name : names) {
        Fixture f = ctx.load(name);
        FpModule nat{f.p, f.dim, f.gens};
        Scene S = build_scene(trivial_module(f.p, int(f.gens.size())), nat);
        std::vector<int> counts = class_orbit_counts(S, f.presentation(), tcsub_of(f));
        if (counts.empty() || counts.front() < 4) {
            ok = false;
            detail[name] = counts;
        }
    }
    json computed = {{"every_class_at_least_4_orbits", ok}};
    if (!ok) computed["violations"] = detail;
    return {expected, computed};
}

// ------------------------------------------------------------------- V9

Outcome check_v9(const Ctx& ctx) {
    Fixture f = ctx.load("sp6_2");
    FpModule nat{f.p, f.dim, f.gens};
    Scene S = build_scene(trivial_module(f.p, int(f.gens.size())), nat);
    std::vector<int> counts = class_orbit_counts(S, f.presentation(), tcsub_of(f));

    Fixture g = ctx.load("sl3_3");
    const FixtureModule* natm = g.find_module("nat");
    if (!natm) throw Error("V9: sl3_3 has no nat module");
    CocycleSpace C = cocycle_space(g.group(), natm->mod, g.presentation());

    json expected = {{"classes", 2}, {"orbit_counts", {4, 4}}, {"h1_sl3_3_nat", 0}};
    json computed = {{"classes", int(counts.size())},
                     {"orbit_counts", counts},
                     {"h1_sl3_3_nat", C.h1_dim()}};
    return {expected, computed};
}

// ------------------------------------------------------------------ V10

FpMat cyclic_perm_mat(int p, int n) {
    FpMat M(p, n, n);
    for (int i = 0; i < n; ++i) M.set((i + 1) % n, i, 1);
    return M;
}

Outcome check_v10(const Ctx& ctx) {
    json expected = {{"coprime_h1_zero", true},
                     {"kunneth_additive", true},
                     {"b1_in_z1", true},
                     {"cocycle_identity_fuzz", true}};
    json fail = json::object();

    Fixture z7 = ctx.load("z7_gl32");
    Fixture f21 = ctx.load("f21_gl32");
    Fixture sl25 = ctx.load("sl2_5_gl2_11");
    Fixture sl32 = ctx.load("sl3_2");

    // five modules for groups of order coprime to the module characteristic
    std::vector<std::pair<const Fixture*, FpModule>> coprime;
    coprime.emplace_back(&z7, FpModule{2, 3, z7.gens});
    {
        // companion matrix of 1 + x + ... + x^6 over F_3
        FpMat C(3, 6, 6);
        for (int i = 0; i + 1 < 6; ++i) C.set(i + 1, i, 1);
        for (int i = 0; i < 6; ++i) C.set(i, 5, 2);
        coprime.emplace_back(&z7, FpModule{3, 6, {C}});
    }
    coprime.emplace_back(&z7, FpModule{5, 7, {cyclic_perm_mat(5, 7)}});
    {
        // the Frobenius group of order 21 permuting F_7: x -> x+1 and x -> 2x
        FpMat a = cyclic_perm_mat(5, 7);
        FpMat b(5, 7, 7);
        for (int i = 0; i < 7; ++i) b.set((2 * i) % 7, i, 1);
        coprime.emplace_back(&f21, FpModule{5, 7, {a, b}});
    }
    coprime.emplace_back(&sl25, FpModule{11, 2, sl25.gens});

    std::vector<CocycleSpace> spaces;
    std::vector<const FpModule*> space_mods;
    bool coprime_ok = true;
    for (size_t i = 0; i < coprime.size(); ++i) {
        const Fixture* f = coprime[i].first;
        const FpModule& m = coprime[i].second;
        if (f->group().order() % uint64_t(m.p) == 0) throw Error("V10: instance not coprime");
        if (!relators_hold(f->relators, m.mats)) throw Error("V10: module violates relators");
        CocycleSpace C = cocycle_space(f->group(), m, f->presentation());
        if (C.h1_dim() != 0) {
            coprime_ok = false;
            fail["coprime_instance"] = int(i);
        }
        spaces.push_back(std::move(C));
        space_mods.push_back(&coprime[i].second);
    }

    // additivity of H^1 over a direct sum of modules
    const FixtureModule* nat = sl32.find_module("nat");
    const FixtureModule* dual = sl32.find_module("dual");
    if (!nat || !dual) throw Error("V10: sl3_2 modules missing");
    FpModule sum = direct_sum(nat->mod, dual->mod);
    CocycleSpace Cn = cocycle_space(sl32.group(), nat->mod, sl32.presentation());
    CocycleSpace Cd = cocycle_space(sl32.group(), dual->mod, sl32.presentation());
    CocycleSpace Cs = cocycle_space(sl32.group(), sum, sl32.presentation());
    bool kunneth = (Cs.h1_dim() == Cn.h1_dim() + Cd.h1_dim());
    spaces.push_back(Cn);
    space_mods.push_back(&nat->mod);
    spaces.push_back(Cd);
    space_mods.push_back(&dual->mod);

    // coboundaries are cocycles, in every space computed above
    bool b1_ok = true;
    for (const CocycleSpace& C : spaces) {
        Subspace Z = Subspace::from_vectors(C.p, C.ngens * C.mdim, C.z_basis);
        for (const FpVec& b : C.b_basis)
            if (!Z.contains(b)) b1_ok = false;
    }

    // phi(uv) = phi(u) + u . phi(v) for random words and random cocycles
    std::mt19937 rng(7);
    bool fuzz_ok = true;
    for (size_t si = 0; si < spaces.size(); ++si) {
        const CocycleSpace& C = spaces[si];
        const FpModule& M = *space_mods[si];
        if (C.z_basis.empty()) continue;
        for (int trial = 0; trial < 200; ++trial) {
            FpVec phi(size_t(C.ngens * C.mdim), 0);
            for (const FpVec& z : C.z_basis) {
                uint8_t coef = uint8_t(rng() % uint32_t(C.p));
                for (size_t k = 0; k < phi.size(); ++k)
                    phi[k] = fp_add(phi[k], fp_mul(coef, z[k], C.p), C.p);
            }
            auto random_word = [&]() {
                Word w;
                int len = 1 + int(rng() % 6);
                for (int i = 0; i < len; ++i)
                    w.letters.push_back(int(rng() % uint32_t(2 * C.ngens)));
                return w;
            };
            Word u = random_word(), v = random_word();
            Word uv = u;
            uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
            FpVec lhs = cocycle_on_word(phi, uv, M);
            FpVec pu = cocycle_on_word(phi, u, M);
            FpVec pv = cocycle_on_word(phi, v, M);
            FpVec rhs = mat_apply(evaluate_word(u, M.mats), pv);
            for (size_t k = 0; k < rhs.size(); ++k) rhs[k] = fp_add(rhs[k], pu[k], C.p);
            if (lhs != rhs) fuzz_ok = false;
        }
    }

    json computed = {{"coprime_h1_zero", coprime_ok},
                     {"kunneth_additive", kunneth},
                     {"b1_in_z1", b1_ok},
                     {"cocycle_identity_fuzz", fuzz_ok}};
    if (!fail.empty()) computed["detail"] = fail;
    return {expected, computed};
}

// ------------------------------------------------------------------ V11

Outcome check_v11(const Ctx& ctx) {
    std::string dir = fixtures_dir(ctx.fixtures_override);
    std::vector<std::string> names = fixture_manifest(dir);
    json expected = {{"manifest_at_least_12", true}, {"all_certified", true}};
    json failures = json::object();
    bool all_ok = true;
    json transitive = json::object();
    for (const std::string& name : names) {
        try {
            Fixture f = load_fixture_file(dir + "/" + name + ".fix");
            certify_fixture(f);
            transitive[name] = f.transitive;
        } catch (const Error& e) {
            all_ok = false;
            failures[name] = e.what();
        }
    }
    json computed = {{"manifest_at_least_12", names.size() >= 12}, {"all_certified", all_ok}};
    if (!all_ok) computed["failures"] = failures;
    // transitivity samples: the claimed-transitive record flags themselves
    // are certified above; surface the key ones explicitly
    json exp_tr = {{"sl3_2", true},      {"sp6_2", true},  {"a7_gl42", true},
                   {"psu3_3", true},     {"z7_gl32", true}, {"f21_gl32", true},
                   {"sl2_5_gl2_11", true}, {"g1_gl42", false}};
    json cmp_tr = json::object();
    for (auto it = exp_tr.begin(); it != exp_tr.end(); ++it)
        cmp_tr[it.key()] = transitive.contains(it.key()) ? transitive[it.key()] : json(nullptr);
    expected["transitive_samples"] = exp_tr;
    computed["transitive_samples"] = cmp_tr;
    return {expected, computed};
}

// ------------------------------------------------------------------ V12

Outcome check_v12(const Ctx& ctx) {
    // Sections for the 3-dimensional block: the transitive subgroups of
    // GL3(2).  Certified inventory: any transitive subgroup contains a
    // Sylow 7; for a fixed Sylow 7 subgroup P and every g, <P, g> has order
    // 7, 21, or 168, so the overgroups of P are exactly {P, N(P), GL3(2)}
    // of orders {7, 21, 168}, and conjugacy carries this to every Sylow 7.
    MatrixGroup GL32(2, 3, gl_generators(2, 3));
    std::vector<FpMat> all32 = enumerate_elements(GL32, 200);
    const FpMat* c7 = nullptr;
    std::sort(all32.begin(), all32.end());
    for (const FpMat& g : all32)
        if (mat_order(g) == 7) { c7 = &g; break; }
    if (!c7) throw Error("V12: no order-7 element");
    std::set<uint64_t> overgroup_orders;
    for (const FpMat& g : all32)
        overgroup_orders.insert(MatrixGroup(2, 3, {*c7, g}).order());
    bool inventory_ok = (overgroup_orders == std::set<uint64_t>{7, 21, 168});

    // the three sections, shipped as fixtures with certified presentations
    const std::vector<std::string> sections = {"z7_gl32", "f21_gl32", "sl3_2"};
    std::set<uint64_t> section_orders;
    for (const std::string& s : sections) section_orders.insert(ctx.load(s).order);
    bool sections_ok = (section_orders == std::set<uint64_t>{7, 21, 168});

    MatrixGroup GL42(2, 4, gl_generators(2, 4));
    MatrixGroup G1 = paper_G1();
    MatrixGroup G2 = paper_G2();
    bool targets_rank3 = orbit_sizes_sorted(G1).size() == 3 &&
                         orbit_sizes_sorted(G2).size() == 3 &&
                         p_core(G1, 200000).order() == 1 && p_core(G2, 200000).order() == 1;

    // every complement class on both sides of the flag
    json found = json::array();
    bool others_ok = true;
    for (const std::string& sname : sections) {
        Fixture f = ctx.load(sname);
        FpModule nat{f.p, f.dim, f.gens};
        FpModule triv = trivial_module(f.p, int(f.gens.size()));
        for (int side = 0; side < 2; ++side) {
            Scene S = side == 0 ? build_scene(triv, nat) : build_scene(nat, triv);
            for (const ComplementClassInfo& cls :
                 complement_classes(S, f.presentation(), tcsub_of(f))) {
                if (cls.orbit_sizes.size() != 3) {
                    if (cls.orbit_sizes.size() < 4) others_ok = false;
                    continue;
                }
                MatrixGroup C = complement_group(S, cls.phi);
                bool o2_trivial = p_core(C, 200000).order() == 1;
                const MatrixGroup& target = side == 0 ? G1 : G2;
                bool conj = subgroup_conjugator(GL42, C, target).has_value();
                found.push_back({{"section", sname},
                                 {"side", side == 0 ? "point" : "hyperplane"},
                                 {"o2_trivial", o2_trivial},
                                 {"conjugate_to", conj ? (side == 0 ? "G1" : "G2") : "none"}});
            }
        }
    }
    json expected = {{"inventory_certified", true},
                     {"section_orders_match", true},
                     {"targets_are_o2_trivial_rank3", true},
                     {"other_classes_at_least_4_orbits", true},
                     {"rank3_classes",
                      json::array({{{"section", "sl3_2"},
                                    {"side", "point"},
                                    {"o2_trivial", true},
                                    {"conjugate_to", "G1"}},
                                   {{"section", "sl3_2"},
                                    {"side", "hyperplane"},
                                    {"o2_trivial", true},
                                    {"conjugate_to", "G2"}}})}};
    json computed = {{"inventory_certified", inventory_ok},
                     {"section_orders_match", sections_ok},
                     {"targets_are_o2_trivial_rank3", targets_rank3},
                     {"other_classes_at_least_4_orbits", others_ok},
                     {"rank3_classes", found}};
    return {expected, computed};
}

// --------------------------------------------------------------- registry

struct Entry {
    const char* id;
    const char* claim;
    std::function<Outcome(const Ctx&)> fn;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> reg = {
        {"V1",
         "The point-stabilizing rank-3 group on F_2^4 has orbit lengths 1, 1, 14",
         check_v1},
        {"V2",
         "The hyperplane-stabilizing rank-3 group on F_2^4 has orbit lengths 1, 7, 8",
         check_v2},
        {"V3", "The Levi subgroup diag(1, GL3(2)) has orbit lengths 1, 1, 7, 7", check_v3},
        {"V4",
         "GL4(2) has exactly 3 conjugacy classes of subgroups isomorphic to L2(7), "
         "distinguished by invariant-subspace pattern, with exactly 2 classes "
         "stabilizing a 1-space",
         check_v4},
        {"V5",
         "Minimal invariant subspaces: one for each rank-3 group (its fixed line / "
         "hyperplane) and two for the Levi",
         check_v5},
        {"V6",
         "Conjugating a unipotent block by a Levi element matches the tensor-module "
         "action on scenes (p,n,d) = (2,4,1), (2,6,3), (3,8,4)",
         check_v6},
        {"V7",
         "Complement class counts and orbit censuses for the six self-paired groups "
         "SL3(2), SL3(3), Sp4(2), Sp4(3), Sp6(2), G2(2) in block upper-triangular form; "
         "every class has at least 5 orbits (the second entry is computed for SL3(3); "
         "the alternative SL3(2) reading is recorded and does not match)",
         check_v7},
        {"V8",
         "In the five scenes [1, C; 0, B] with B in A6, S6, A7, PSU3(3), PSU3(3):2, "
         "every complement class has at least 4 orbits",
         check_v8},
        {"V9",
         "The scene [1, C; 0, B] with B in Sp6(2) has exactly 2 complement classes, "
         "each with 4 orbits; and H^1(SL3(3), natural module) vanishes",
         check_v9},
        {"V10",
         "Cohomology properties: H^1 vanishes for five coprime-order instances, H^1 is "
         "additive over a direct sum, coboundaries are cocycles, and the cocycle "
         "identity holds under fuzzing",
         check_v10},
        {"V11",
         "Every shipped fixture re-certifies from scratch (order, presentation, "
         "transitivity, irreducibility), with at least 12 records",
         check_v11},
        {"V12",
         "End-to-end at (n,p) = (4,2): over certified transitive sections in dimensions "
         "1 and 3, the only O_2-trivial 3-orbit complements in the two maximal "
         "parabolics of GL4(2) are conjugates of the two target groups",
         check_v12},
    };
    return reg;
}

}  // namespace

std::vector<std::string> check_ids() {
    std::vector<std::string> ids;
    for (const Entry& e : registry()) ids.push_back(e.id);
    return ids;
}

CheckResult run_check(const std::string& id, const std::string& fixtures_override) {
    for (const Entry& e : registry()) {
        if (id != e.id) continue;
        Ctx ctx{fixtures_override};
        auto t0 = std::chrono::steady_clock::now();
        Outcome o = e.fn(ctx);
        auto t1 = std::chrono::steady_clock::now();
        CheckResult r;
        r.id = e.id;
        r.claim = e.claim;
        r.expected = o.expected.dump();
        r.computed = o.computed.dump();
        r.pass = (o.expected == o.computed);
        r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        return r;
    }
    throw Error("unknown check id: " + id);
}

std::vector<CheckResult> run_all(const std::string& fixtures_override, int threads,
                                 int timeout_secs) {
    std::vector<std::string> ids = check_ids();
    std::vector<CheckResult> results(ids.size());
    std::vector<std::string> errors(ids.size());
    auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(timeout_secs);
    std::mutex mu;
    size_t next = 0;
    auto worker = [&]() {
        for (;;) {
            size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= ids.size()) return;
                i = next++;
            }
            if (timeout_secs > 0 && std::chrono::steady_clock::now() >= deadline) {
                errors[i] = "timeout: check not started before deadline";
                continue;
            }
            try {
                results[i] = run_check(ids[i], fixtures_override);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    int nt = std::max(1, threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    for (size_t i = 0; i < ids.size(); ++i)
        if (!errors[i].empty()) throw Error(ids[i] + ": " + errors[i]);
    return results;
}

std::string report_line(const CheckResult& r) {
    json o = {{"id", r.id},
              {"claim", r.claim},
              {"expected", json::parse(r.expected)},
              {"computed", json::parse(r.computed)},
              {"pass", r.pass},
              {"millis", r.millis}};
    return o.dump();
}

std::string report_summary(const std::vector<CheckResult>& results, int64_t total_millis) {
    int passed = 0;
    for (const CheckResult& r : results) passed += r.pass ? 1 : 0;
    json o = {{"id", "summary"},
              {"total", results.size()},
              {"passed", passed},
              {"failed", int(results.size()) - passed},
              {"pass", passed == int(results.size())},
              {"millis", total_millis}};
    return o.dump();
}

}  // namespace af3
