#pragma once

// Presentations, coset enumeration, and first cohomology of a finitely
// presented matrix group on an F_p[G]-module.

#include "af3/module.hpp"

#include <string>

namespace af3 {

// A word over abstract generators a, b, c, ...  Letters are column indices:
// generator i forward = 2i, inverse = 2i + 1.
struct Word {
    std::vector<int> letters;
    bool operator==(const Word& o) const { return letters == o.letters; }
};

// Grammar: expr = term ('*' term)*;  term = atom ['^' int];
// atom = letter | '(' expr ')' | '[' expr ',' expr ']'  ([u,v] = u^-1 v^-1 u v).
Word parse_word(const std::string& s, int ngens);
std::string word_str(const Word& w);
Word word_inverse(const Word& w);
Word word_pow(const Word& w, int e);
Word word_free_reduce(const Word& w);

FpMat evaluate_word(const Word& w, const std::vector<FpMat>& gens);

struct Presentation {
    int ngens = 0;
    std::vector<Word> relators;
};

struct TcResult {
    uint64_t index = 0;  // number of cosets of the subgroup in the presented group
    uint64_t rows_used = 0;
};

// HLT coset enumeration with coincidence handling. Throws on hitting max_rows.
TcResult todd_coxeter(const Presentation& P, const std::vector<Word>& subgens = {},
                      uint64_t max_rows = 4000000);

// Certifies that P presents G:
//  (1) every relator evaluates to the identity on G's generators (so the
//      presented group surjects onto G), and
//  (2) coset enumeration bounds the presented group's order by |G|.
// With an empty tc_subgroup the enumeration is over the trivial subgroup.
// Otherwise tc_subgroup must be a single word w; soundness then requires a
// relator freely equal to w^m with m the order of w's image in G, which this
// function checks before trusting index * m == |G|.
bool verify_presentation(const MatrixGroup& G, const Presentation& P,
                         const std::vector<Word>& tc_subgroup = {},
                         uint64_t max_rows = 4000000);

// Search for a presentation of G on its own generator list: power relators
// of short words are accumulated until coset enumeration certifies that the
// presented group has order |G|.  The result is verified before returning.
// When tcsub is given, enumeration runs over that cyclic subgroup (its
// power relator is added automatically, keeping the certificate sound).
Presentation discover_presentation(const MatrixGroup& G, uint64_t max_rows = 4000000,
                                   uint32_t seed = 1,
                                   const std::optional<Word>& tcsub = std::nullopt);

// First cohomology of G (presented by P, which must be a verified
// presentation on G's generator list) with coefficients in M (aligned with
// G's generators).  A cocycle is stored as the concatenation of its values
// on the generators: phi = (phi(g_0) | phi(g_1) | ...), length ngens * dim M.
// Convention (left action): phi(gh) = phi(g) + g phi(h), so coboundaries are
// phi_q(g) = g q - q.
struct CocycleSpace {
    int p = 2;
    int mdim = 0;
    int ngens = 0;
    std::vector<FpVec> z_basis;  // basis of Z^1, reduced echelon
    std::vector<FpVec> b_basis;  // basis of B^1, reduced echelon
    int h1_dim() const { return int(z_basis.size()) - int(b_basis.size()); }
};

CocycleSpace cocycle_space(const MatrixGroup& G, const FpModule& M, const Presentation& P);

// Value of the cocycle phi on an arbitrary word in the generators.
FpVec cocycle_on_word(const FpVec& phi, const Word& w, const FpModule& M);

// Canonical representatives of the H^1 classes: the unique element of each
// coset of B^1 whose B^1-pivot coordinates vanish.  Size p^h1; deterministic
// order.  Throws if p^h1 > cap.
std::vector<FpVec> h1_representatives(const CocycleSpace& C, uint64_t cap = 4096);

}  // namespace af3
