#pragma once

// Split extensions ("scenes") Q : H inside GL_n(p), where V = W (+) U with
// W the span of the first d coordinates, H acts block-diagonally through a
// pair of modules (A on W, B on U), and Q = { u(C) = [[I, C], [0, I]] } is
// the full unipotent radical, on which H acts by C -> A C B^-1 (the tensor
// module W (x) U^*).  Complements of Q correspond to 1-cocycles.

#include "af3/cohom.hpp"

namespace af3 {

struct Scene {
    int p = 2;
    int d = 0, e = 0;     // dim W, dim U; ambient dimension n = d + e
    FpModule Wmod, Umod;  // aligned generator actions of H
    FpModule Qmod;        // tensor W (x) U^*: action on vec(C), row-major
    MatrixGroup H_levi;   // < diag(A_i, B_i) >
    MatrixGroup full;     // < levi gens, u(E_jk) > = Q : H
    int n() const { return d + e; }
};

Scene build_scene(const FpModule& Wmod, const FpModule& Umod);

// u(C) with C given as row-major vec of length d*e.
FpMat unipotent(int p, int d, int e, const FpVec& c);
FpMat levi_embed(const FpMat& A, const FpMat& B);

// s(g) u(E) s(g)^-1 == u(Qmod(g) vec(E)) for every generator and basis E.
bool conjugation_matches_tensor(const Scene& S);

// The complement subgroup { u(phi(h)) s(h) : h in H } for a cocycle phi
// (values on generators, concatenated).  Throws if the result does not have
// order |H| (which certifies that phi is a cocycle).
MatrixGroup complement_group(const Scene& S, const FpVec& phi);

// Cocycles of H on Q.  P must present H on the scene's generator list; this
// is re-verified here against the Levi image.
CocycleSpace scene_cocycles(const Scene& S, const Presentation& P,
                            const std::vector<Word>& tc_subgroup = {});

struct ComplementClassInfo {
    FpVec phi;                          // canonical cocycle representative
    std::vector<uint64_t> orbit_sizes;  // sorted orbit sizes on F_p^n
};

// One entry per conjugacy class of complements of Q in the scene (classes
// correspond to H^1 classes), with the orbit census of a representative.
std::vector<ComplementClassInfo> complement_classes(const Scene& S, const Presentation& P,
                                                    const std::vector<Word>& tc_subgroup = {});

// Oracle for small scenes: enumerate every cocycle, build every complement,
// and bucket them under conjugation by the full scene.  Returns the number
// of conjugacy classes.  Throws if |scene| or |Z^1| exceeds the bounds.
uint64_t count_complement_classes_bruteforce(const Scene& S, const Presentation& P,
                                             uint64_t scene_bound = 200000,
                                             uint64_t cocycle_bound = 4096,
                                             const std::vector<Word>& tc_subgroup = {});

// ------------------------------------------------------- specific groups

// Generators of GL_m(p) (adjacent transvections + a primitive-root scalar).
std::vector<FpMat> gl_generators(int p, int m);
int primitive_root(int p);

// Stabilizer of <e_0, ..., e_{d-1}> in GL_n(p): all [[A, C], [0, B]].
MatrixGroup parabolic(int p, int n, int d);

// The two rank-3 groups of the classification and the Levi GL1 x GL3
// inside GL4(2), with their verbatim generator matrices.
MatrixGroup paper_G1();  // stabilizes a 1-space W, transitive on V - W
MatrixGroup paper_G2();  // stabilizes a 3-space U, transitive on V - U
MatrixGroup paper_L();   // diag(1, GL3(2))

}  // namespace af3
