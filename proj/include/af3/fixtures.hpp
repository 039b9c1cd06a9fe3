#pragma once

// Fixture files: self-describing group records (generators, order,
// transitivity, a presentation, optional named modules) that the loader
// re-certifies from scratch, so the data in the file is never trusted.
//
// Line-oriented UTF-8 format; '#' starts a comment, blank lines ignored:
//   name <identifier>
//   p <prime>
//   dim <n>
//   order <N>
//   transitive <0|1>
//   gen <n*n residues, row-major, whitespace-separated>   (one per generator)
//   rel <word>                                            (presentation relators)
//   tcsub <word>           (optional: cyclic subgroup for coset enumeration)
//   module <label>         (starts a module section; then per-generator:)
//   gen <m*m residues>
//   irreducible <0|1>      (optional claim inside a module section)

#include "af3/scene.hpp"

#include <string>

namespace af3 {

struct FixtureModule {
    std::string label;
    FpModule mod;
    std::optional<bool> irreducible;
};

struct Fixture {
    std::string name;
    int p = 2;
    int dim = 0;
    uint64_t order = 0;
    bool transitive = false;
    std::vector<FpMat> gens;
    std::vector<Word> relators;
    std::optional<Word> tcsub;
    std::vector<FixtureModule> modules;

    MatrixGroup group() const { return MatrixGroup(p, dim, gens); }
    Presentation presentation() const {
        return Presentation{int(gens.size()), relators};
    }
    const FixtureModule* find_module(const std::string& label) const;
};

Fixture parse_fixture(const std::string& text);
std::string serialize_fixture(const Fixture& f);

Fixture load_fixture_file(const std::string& path);

// Re-derives every claim in the record: group order, transitivity, the
// presentation (relators hold + coset enumeration reaches the order), and
// for each module that the relators hold on it and that any irreducibility
// claim is correct.  Throws Error with a description on the first failure.
void certify_fixture(const Fixture& f, uint64_t tc_max_rows = 4000000);

// Sorted *.fix basenames in the directory (without extension).
std::vector<std::string> fixture_manifest(const std::string& dir);

// Directory resolution: explicit override > AFFRANK3_FIXTURES > "fixtures".
std::string fixtures_dir(const std::string& override_dir = "");

}  // namespace af3
