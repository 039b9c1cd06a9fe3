// Command-line front end.  Talks to the toolkit exclusively through the C
// interface in affrank3.h.

#include <affrank3.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct CtxGuard {
    af3_ctx* ctx;
    explicit CtxGuard(const std::string& dir)
        : ctx(af3_ctx_new(dir.empty() ? nullptr : dir.c_str())) {}
    ~CtxGuard() { af3_ctx_free(ctx); }
};

struct StrGuard {
    char* s = nullptr;
    ~StrGuard() { af3_string_free(s); }
};

int emit(int rc, af3_ctx* ctx, const char* s, const std::string& report_path = "") {
    if (rc == 2) {
        std::cerr << "error: " << af3_last_error(ctx) << "\n";
        return 2;
    }
    std::string text = s ? s : "";
    if (!text.empty() && text.back() != '\n') text += "\n";
    std::fputs(text.c_str(), stdout);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << text;
        if (!out) {
            std::cerr << "error: cannot write report to " << report_path << "\n";
            return 2;
        }
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification harness for rank-3 affine groups with non-p-local stabilizers"};
    app.require_subcommand(1);

    std::string fixtures;

    auto* verify = app.add_subcommand("verify", "Run registered checks");
    bool all = false;
    std::vector<std::string> ids;
    std::string report_path;
    int threads = 1;
    int timeout_secs = 0;
    verify->add_flag("--all", all, "Run every registered check");
    verify->add_option("--check", ids, "Check id(s) to run (repeatable)");
    verify->add_option("--fixtures", fixtures, "Fixtures directory");
    verify->add_option("--report", report_path, "Write the line-delimited JSON report here");
    verify->add_option("--threads", threads, "Worker threads for --all");
    verify->add_option("--timeout-secs", timeout_secs, "Overall deadline for --all");

    auto* orbits = app.add_subcommand("orbits", "Orbit census of a fixture file's group");
    std::string group_file;
    orbits->add_option("group-file", group_file, "Fixture file")->required();
    orbits->add_option("--fixtures", fixtures, "Fixtures directory");

    auto* h1 = app.add_subcommand("h1", "First-cohomology dimensions for a fixture module");
    std::string h1_file, h1_label;
    h1->add_option("group-file", h1_file, "Fixture file")->required();
    h1->add_option("module-label", h1_label, "Module label")->required();

    auto* complements = app.add_subcommand("complements", "Complement classes of a scene");
    std::string scene_id;
    complements->add_option("scene-id", scene_id, "Scene id name:Wlabel:Ulabel (triv allowed)")
        ->required();
    complements->add_option("--fixtures", fixtures, "Fixtures directory");

    auto* tc = app.add_subcommand("tc", "Coset enumeration for a named fixture's presentation");
    std::string tc_name;
    tc->add_option("fixture-name", tc_name, "Fixture name")->required();
    tc->add_option("--fixtures", fixtures, "Fixtures directory");

    auto* meataxe = app.add_subcommand("meataxe", "Irreducibility test for a fixture module");
    std::string mt_file, mt_label;
    meataxe->add_option("group-file", mt_file, "Fixture file")->required();
    meataxe->add_option("module-label", mt_label, "Module label")->required();

    CLI11_PARSE(app, argc, argv);

    CtxGuard g(fixtures);
    StrGuard out;

    if (verify->parsed()) {
        if (!all && ids.empty()) {
            std::cerr << "error: verify requires --all or --check <ID>\n";
            return 2;
        }
        if (all) {
            int rc = af3_run_all(g.ctx, threads, timeout_secs, &out.s);
            return emit(rc, g.ctx, out.s, report_path);
        }
        std::string report;
        int worst = 0;
        for (const std::string& id : ids) {
            StrGuard one;
            int rc = af3_run_check(g.ctx, id.c_str(), &one.s);
            if (rc == 2) return emit(rc, g.ctx, nullptr);
            report += one.s;
            report += "\n";
            worst = std::max(worst, rc);
        }
        return emit(worst, g.ctx, report.c_str(), report_path);
    }
    int rc = 2;
    if (orbits->parsed())
        rc = af3_orbits(g.ctx, group_file.c_str(), &out.s);
    else if (h1->parsed())
        rc = af3_h1(g.ctx, h1_file.c_str(), h1_label.c_str(), &out.s);
    else if (complements->parsed())
        rc = af3_complements(g.ctx, scene_id.c_str(), &out.s);
    else if (tc->parsed())
        rc = af3_tc(g.ctx, tc_name.c_str(), &out.s);
    else if (meataxe->parsed())
        rc = af3_meataxe(g.ctx, mt_file.c_str(), mt_label.c_str(), &out.s);
    return emit(rc, g.ctx, out.s);
}
