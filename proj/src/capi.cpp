#include "affrank3.h"

#include "af3/checks.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <cstring>

using nlohmann::json;

struct af3_ctx {
    std::string fixtures_dir;  // may be empty: resolved per call
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(af3_ctx* ctx, const std::string& msg, char** out) {
    if (ctx) ctx->last_error = msg;
    if (out) *out = nullptr;
    return 2;
}

template <typename F>
int guarded(af3_ctx* ctx, char** out, F&& body) {
    if (!ctx || !out) return 2;
    try {
        return body();
    } catch (const std::exception& e) {
        return fail(ctx, e.what(), out);
    } catch (...) {
        return fail(ctx, "unknown error", out);
    }
}

af3::Fixture load_named(const af3_ctx* ctx, const std::string& name) {
    std::string dir = af3::fixtures_dir(ctx->fixtures_dir);
    return af3::load_fixture_file(dir + "/" + name + ".fix");
}

const af3::FixtureModule* find_module_or_throw(const af3::Fixture& f, const std::string& label) {
    const af3::FixtureModule* m = f.find_module(label);
    if (!m) throw af3::Error("fixture " + f.name + " has no module '" + label + "'");
    return m;
}

}  // namespace

af3_ctx* af3_ctx_new(const char* fixtures_dir) {
    af3_ctx* ctx = new af3_ctx;
    if (fixtures_dir) ctx->fixtures_dir = fixtures_dir;
    return ctx;
}

void af3_ctx_free(af3_ctx* ctx) { delete ctx; }

const char* af3_last_error(const af3_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

void af3_string_free(char* s) { std::free(s); }

int af3_check_ids(af3_ctx* ctx, char** out) {
    return guarded(ctx, out, [&]() {
        json a = json::array();
        for (const std::string& id : af3::check_ids()) a.push_back(id);
        *out = dup_string(a.dump());
        return 0;
    });
}

int af3_run_check(af3_ctx* ctx, const char* id, char** out) {
    return guarded(ctx, out, [&]() {
        if (!id) throw af3::Error("null check id");
        af3::CheckResult r = af3::run_check(id, ctx->fixtures_dir);
        *out = dup_string(af3::report_line(r));
        return r.pass ? 0 : 1;
    });
}

int af3_run_all(af3_ctx* ctx, int threads, int timeout_secs, char** out) {
    return guarded(ctx, out, [&]() {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<af3::CheckResult> results =
            af3::run_all(ctx->fixtures_dir, threads, timeout_secs);
        auto t1 = std::chrono::steady_clock::now();
        int64_t total =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        std::string report;
        bool all_pass = true;
        for (const af3::CheckResult& r : results) {
            report += af3::report_line(r);
            report += "\n";
            all_pass = all_pass && r.pass;
        }
        report += af3::report_summary(results, total);
        report += "\n";
        *out = dup_string(report);
        return all_pass ? 0 : 1;
    });
}

int af3_orbits(af3_ctx* ctx, const char* fixture_path, char** out) {
    return guarded(ctx, out, [&]() {
        if (!fixture_path) throw af3::Error("null fixture path");
        af3::Fixture f = af3::load_fixture_file(fixture_path);
        af3::MatrixGroup G = f.group();
        json sizes = json::array();
        for (uint64_t s : af3::orbit_sizes_sorted(G)) sizes.push_back(s);
        json o = {{"name", f.name},
                  {"p", f.p},
                  {"dim", f.dim},
                  {"order", G.order()},
                  {"orbit_sizes", sizes}};
        *out = dup_string(o.dump());
        return 0;
    });
}

int af3_h1(af3_ctx* ctx, const char* fixture_path, const char* module_label, char** out) {
    return guarded(ctx, out, [&]() {
        if (!fixture_path || !module_label) throw af3::Error("null argument");
        af3::Fixture f = af3::load_fixture_file(fixture_path);
        const af3::FixtureModule* m = find_module_or_throw(f, module_label);
        af3::CocycleSpace C = af3::cocycle_space(f.group(), m->mod, f.presentation());
        json o = {{"name", f.name},
                  {"module", m->label},
                  {"z1_dim", int(C.z_basis.size())},
                  {"b1_dim", int(C.b_basis.size())},
                  {"h1_dim", C.h1_dim()}};
        *out = dup_string(o.dump());
        return 0;
    });
}

int af3_complements(af3_ctx* ctx, const char* scene_id, char** out) {
    return guarded(ctx, out, [&]() {
        if (!scene_id) throw af3::Error("null scene id");
        std::string s = scene_id;
        size_t c1 = s.find(':');
        size_t c2 = c1 == std::string::npos ? std::string::npos : s.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw af3::Error("scene id must be name:Wlabel:Ulabel, got '" + s + "'");
        std::string name = s.substr(0, c1);
        std::string wl = s.substr(c1 + 1, c2 - c1 - 1);
        std::string ul = s.substr(c2 + 1);
        af3::Fixture f = load_named(ctx, name);
        int ng = int(f.gens.size());
        auto resolve = [&](const std::string& label) {
            if (label == "triv") return af3::trivial_module(f.p, ng);
            return find_module_or_throw(f, label)->mod;
        };
        af3::Scene S = af3::build_scene(resolve(wl), resolve(ul));
        std::vector<af3::Word> sub;
        if (f.tcsub) sub.push_back(*f.tcsub);
        json classes = json::array();
        for (const af3::ComplementClassInfo& c :
             af3::complement_classes(S, f.presentation(), sub)) {
            json phi = json::array();
            for (uint8_t x : c.phi) phi.push_back(int(x));
            json sizes = json::array();
            for (uint64_t x : c.orbit_sizes) sizes.push_back(x);
            classes.push_back({{"phi", phi}, {"orbit_sizes", sizes}});
        }
        json o = {{"scene", s},
                  {"p", S.p},
                  {"dim_w", S.d},
                  {"dim_u", S.e},
                  {"classes", classes}};
        *out = dup_string(o.dump());
        return 0;
    });
}

int af3_tc(af3_ctx* ctx, const char* fixture_name, char** out) {
    return guarded(ctx, out, [&]() {
        if (!fixture_name) throw af3::Error("null fixture name");
        af3::Fixture f = load_named(ctx, fixture_name);
        std::vector<af3::Word> sub;
        if (f.tcsub) sub.push_back(*f.tcsub);
        af3::TcResult t = af3::todd_coxeter(f.presentation(), sub);
        bool certified = af3::verify_presentation(f.group(), f.presentation(), sub);
        json o = {{"name", f.name},
                  {"index", t.index},
                  {"rows_used", t.rows_used},
                  {"subgroup", f.tcsub ? af3::word_str(*f.tcsub) : std::string("1")},
                  {"order", f.order},
                  {"certified", certified}};
        *out = dup_string(o.dump());
        return 0;
    });
}

int af3_meataxe(af3_ctx* ctx, const char* fixture_path, const char* module_label, char** out) {
    return guarded(ctx, out, [&]() {
        if (!fixture_path || !module_label) throw af3::Error("null argument");
        af3::Fixture f = af3::load_fixture_file(fixture_path);
        const af3::FixtureModule* m = find_module_or_throw(f, module_label);
        af3::MeataxeResult r = af3::meataxe(m->mod);
        json o = {{"name", f.name},
                  {"module", m->label},
                  {"dim", m->mod.dim},
                  {"irreducible", r.irreducible}};
        if (!r.irreducible) {
            json rows = json::array();
            for (const af3::FpVec& v : r.submodule.basis) {
                json row = json::array();
                for (uint8_t x : v) row.push_back(int(x));
                rows.push_back(row);
            }
            o["submodule_dim"] = r.submodule.dim();
            o["submodule"] = rows;
        }
        *out = dup_string(o.dump());
        return 0;
    });
}
