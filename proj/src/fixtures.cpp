#include "af3/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace af3 {

const FixtureModule* Fixture::find_module(const std::string& label) const {
    for (const auto& m : modules)
        if (m.label == label) return &m;
    return nullptr;
}

namespace {

FpMat parse_gen_matrix(std::istringstream& in, int p, int dim, const std::string& ctx) {
    FpMat M(p, dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            int v;
            if (!(in >> v)) throw Error("fixture: short gen line in " + ctx);
            if (v < 0 || v >= p) throw Error("fixture: residue out of range in " + ctx);
            M.set(r, c, v);
        }
    int extra;
    if (in >> extra) throw Error("fixture: trailing data on gen line in " + ctx);
    return M;
}

}  // namespace

Fixture parse_fixture(const std::string& text) {
    Fixture f;
    bool have_name = false, have_p = false, have_dim = false, have_order = false,
         have_trans = false;
    FixtureModule* cur_module = nullptr;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream in(line);
        std::string key;
        if (!(in >> key)) continue;
        auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
        if (key == "name") {
            if (!(in >> f.name)) throw Error("fixture: missing name" + where());
            have_name = true;
        } else if (key == "p") {
            if (!(in >> f.p) || !is_prime(f.p) || f.p > 11)
                throw Error("fixture: bad p" + where());
            have_p = true;
        } else if (key == "dim") {
            if (!(in >> f.dim) || f.dim < 1 || f.dim > 16)
                throw Error("fixture: bad dim" + where());
            have_dim = true;
        } else if (key == "order") {
            if (!(in >> f.order) || f.order == 0) throw Error("fixture: bad order" + where());
            have_order = true;
        } else if (key == "transitive") {
            int t;
            if (!(in >> t) || (t != 0 && t != 1)) throw Error("fixture: bad transitive" + where());
            f.transitive = (t == 1);
            have_trans = true;
        } else if (key == "gen") {
            if (!have_p || !have_dim) throw Error("fixture: gen before p/dim" + where());
            if (cur_module) {
                cur_module->mod.mats.push_back(
                    parse_gen_matrix(in, f.p, cur_module->mod.dim, "module " + cur_module->label));
            } else {
                f.gens.push_back(parse_gen_matrix(in, f.p, f.dim, "group"));
            }
        } else if (key == "rel") {
            std::string w;
            std::getline(in, w);
            f.relators.push_back(parse_word(w, int(f.gens.size())));
        } else if (key == "tcsub") {
            std::string w;
            std::getline(in, w);
            f.tcsub = parse_word(w, int(f.gens.size()));
        } else if (key == "module") {
            FixtureModule m;
            if (!(in >> m.label)) throw Error("fixture: missing module label" + where());
            m.mod.p = f.p;
            m.mod.dim = f.dim;  // modules share the ambient dimension
            f.modules.push_back(std::move(m));
            cur_module = &f.modules.back();
        } else if (key == "irreducible") {
            if (!cur_module) throw Error("fixture: irreducible outside module section" + where());
            int t;
            if (!(in >> t) || (t != 0 && t != 1))
                throw Error("fixture: bad irreducible flag" + where());
            cur_module->irreducible = (t == 1);
        } else {
            throw Error("fixture: unknown key '" + key + "'" + where());
        }
    }
    if (!have_name || !have_p || !have_dim || !have_order || !have_trans)
        throw Error("fixture: missing required header field");
    if (f.gens.empty()) throw Error("fixture: no generators");
    for (const auto& m : f.modules)
        if (m.mod.mats.size() != f.gens.size())
            throw Error("fixture: module " + m.label + " generator count mismatch");
    return f;
}

std::string serialize_fixture(const Fixture& f) {
    std::ostringstream out;
    out << "name " << f.name << "\n";
    out << "p " << f.p << "\n";
    out << "dim " << f.dim << "\n";
    out << "order " << f.order << "\n";
    out << "transitive " << (f.transitive ? 1 : 0) << "\n";
    auto emit_gen = [&](const FpMat& g) {
        out << "gen";
        for (int r = 0; r < g.rows(); ++r)
            for (int c = 0; c < g.cols(); ++c) out << ' ' << int(g.at(r, c));
        out << "\n";
    };
    for (const FpMat& g : f.gens) emit_gen(g);
    for (const Word& r : f.relators) out << "rel " << word_str(r) << "\n";
    if (f.tcsub) out << "tcsub " << word_str(*f.tcsub) << "\n";
    for (const auto& m : f.modules) {
        out << "module " << m.label << "\n";
        for (const FpMat& g : m.mod.mats) emit_gen(g);
        if (m.irreducible) out << "irreducible " << (*m.irreducible ? 1 : 0) << "\n";
    }
    return out.str();
}

Fixture load_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("fixture: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fixture(buf.str());
}

void certify_fixture(const Fixture& f, uint64_t tc_max_rows) {
    MatrixGroup G = f.group();
    if (G.order() != f.order)
        throw Error("fixture " + f.name + ": order mismatch (computed " +
                    std::to_string(G.order()) + ", claimed " + std::to_string(f.order) + ")");
    std::vector<uint64_t> os = orbit_sizes_sorted(G);
    bool trans = os.size() == 2 && os[0] == 1;  // {0} and everything else
    if (trans != f.transitive)
        throw Error("fixture " + f.name + ": transitivity claim wrong");
    Presentation P = f.presentation();
    if (P.relators.empty()) throw Error("fixture " + f.name + ": no relators");
    std::vector<Word> sub;
    if (f.tcsub) sub.push_back(*f.tcsub);
    if (!verify_presentation(G, P, sub, tc_max_rows))
        throw Error("fixture " + f.name + ": presentation not certified");
    for (const auto& m : f.modules) {
        for (const FpMat& g : m.mod.mats)
            if (!mat_inverse(g))
                throw Error("fixture " + f.name + ": singular module generator in " + m.label);
        // the relators must hold on the module, making it a G-representation
        for (const Word& r : f.relators)
            if (!evaluate_word(r, m.mod.mats).is_identity())
                throw Error("fixture " + f.name + ": module " + m.label +
                            " violates a relator");
        if (m.irreducible) {
            bool irr = is_irreducible(m.mod);
            if (pow_u64(uint64_t(f.p), uint32_t(m.mod.dim)) <= 4096 &&
                irr != is_irreducible_exhaustive(m.mod))
                throw Error("fixture " + f.name + ": meataxe/exhaustive disagreement on " +
                            m.label);
            if (irr != *m.irreducible)
                throw Error("fixture " + f.name + ": irreducibility claim wrong for " + m.label);
        }
    }
}

std::vector<std::string> fixture_manifest(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<std::string> out;
    if (!fs::is_directory(dir)) throw Error("fixture directory not found: " + dir);
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().extension() == ".fix") out.push_back(e.path().stem().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string fixtures_dir(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("AFFRANK3_FIXTURES"); env && *env) return env;
    return "fixtures";
}

}  // namespace af3
