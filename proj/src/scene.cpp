#include "af3/scene.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace af3 {

FpMat unipotent(int p, int d, int e, const FpVec& c) {
    if (int(c.size()) != d * e) throw Error("unipotent: wrong vec length");
    FpMat M = FpMat::identity(p, d + e);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < e; ++j) M.set(i, d + j, c[size_t(i * e + j)]);
    return M;
}

FpMat levi_embed(const FpMat& A, const FpMat& B) {
    if (A.p() != B.p()) throw Error("levi_embed: modulus mismatch");
    const int p = A.p(), d = A.rows(), e = B.rows();
    FpMat M = FpMat::zero(p, d + e, d + e);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) M.set(i, j, A.at(i, j));
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) M.set(d + i, d + j, B.at(i, j));
    return M;
}

Scene build_scene(const FpModule& Wmod, const FpModule& Umod) {
    if (Wmod.p != Umod.p || Wmod.mats.size() != Umod.mats.size())
        throw Error("build_scene: misaligned modules");
    Scene S;
    S.p = Wmod.p;
    S.d = Wmod.dim;
    S.e = Umod.dim;
    S.Wmod = Wmod;
    S.Umod = Umod;
    S.Qmod = tensor_module(Wmod, dual_module(Umod));
    std::vector<FpMat> levi;
    for (size_t i = 0; i < Wmod.mats.size(); ++i)
        levi.push_back(levi_embed(Wmod.mats[i], Umod.mats[i]));
    S.H_levi = MatrixGroup(S.p, S.n(), levi);
    std::vector<FpMat> all = levi;
    for (int i = 0; i < S.d * S.e; ++i) {
        FpVec c(size_t(S.d * S.e), 0);
        c[size_t(i)] = 1;
        all.push_back(unipotent(S.p, S.d, S.e, c));
    }
    S.full = MatrixGroup(S.p, S.n(), all);
    return S;
}

bool conjugation_matches_tensor(const Scene& S) {
    for (size_t g = 0; g < S.H_levi.gens().size(); ++g) {
        const FpMat& s = S.H_levi.gens()[g];
        FpMat si = mat_inverse_or_throw(s);
        for (int i = 0; i < S.d * S.e; ++i) {
            FpVec c(size_t(S.d * S.e), 0);
            c[size_t(i)] = 1;
            FpMat lhs = mat_mul(s, mat_mul(unipotent(S.p, S.d, S.e, c), si));
            FpMat rhs = unipotent(S.p, S.d, S.e, mat_apply(S.Qmod.mats[g], c));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

MatrixGroup complement_group(const Scene& S, const FpVec& phi) {
    const int q = S.d * S.e;
    if (int(phi.size()) != q * int(S.H_levi.gens().size()))
        throw Error("complement_group: wrong cocycle length");
    std::vector<FpMat> gens;
    for (size_t i = 0; i < S.H_levi.gens().size(); ++i) {
        FpVec val(phi.begin() + long(i) * q, phi.begin() + long(i + 1) * q);
        gens.push_back(mat_mul(unipotent(S.p, S.d, S.e, val), S.H_levi.gens()[i]));
    }
    MatrixGroup C(S.p, S.n(), gens);
    if (C.order() != S.H_levi.order())
        throw Error("complement_group: wrong order (phi is not a cocycle)");
    return C;
}

CocycleSpace scene_cocycles(const Scene& S, const Presentation& P,
                            const std::vector<Word>& tc_subgroup) {
    if (!verify_presentation(S.H_levi, P, tc_subgroup))
        throw Error("scene_cocycles: presentation does not present the Levi");
    return cocycle_space(S.H_levi, S.Qmod, P);
}

std::vector<ComplementClassInfo> complement_classes(const Scene& S, const Presentation& P,
                                                    const std::vector<Word>& tc_subgroup) {
    CocycleSpace C = scene_cocycles(S, P, tc_subgroup);
    std::vector<ComplementClassInfo> out;
    for (const FpVec& phi : h1_representatives(C)) {
        ComplementClassInfo info;
        info.phi = phi;
        info.orbit_sizes = orbit_sizes_sorted(complement_group(S, phi));
        out.push_back(std::move(info));
    }
    return out;
}

uint64_t count_complement_classes_bruteforce(const Scene& S, const Presentation& P,
                                             uint64_t scene_bound, uint64_t cocycle_bound,
                                             const std::vector<Word>& tc_subgroup) {
    CocycleSpace C = scene_cocycles(S, P, tc_subgroup);
    uint64_t nz = 1;
    for (size_t i = 0; i < C.z_basis.size(); ++i) {
        nz *= uint64_t(S.p);
        if (nz > cocycle_bound) throw Error("bruteforce: too many cocycles");
    }
    if (S.full.order() > scene_bound) throw Error("bruteforce: scene too large");

    const int unknowns = int(C.z_basis.size());
    const int len = C.ngens * C.mdim;
    struct Sub {
        std::vector<ElemKey> keys;
        std::vector<FpMat> gens;
    };
    std::vector<Sub> subs;
    std::map<std::vector<ElemKey>, size_t> index;
    auto keys_of = [&](const MatrixGroup& G) {
        std::vector<FpMat> el = enumerate_elements(G, G.order() + 1);
        std::vector<ElemKey> ks;
        for (const FpMat& m : el) ks.push_back(mat_key(m));
        std::sort(ks.begin(), ks.end());
        return ks;
    };
    for (uint64_t code = 0; code < nz; ++code) {
        FpVec phi(size_t(len), 0);
        uint64_t cc = code;
        for (int i = 0; i < unknowns; ++i) {
            uint8_t coef = uint8_t(cc % uint64_t(S.p));
            cc /= uint64_t(S.p);
            if (coef)
                for (int k = 0; k < len; ++k)
                    phi[size_t(k)] =
                        fp_add(phi[size_t(k)], fp_mul(coef, C.z_basis[size_t(i)][size_t(k)], S.p), S.p);
        }
        MatrixGroup G = complement_group(S, phi);
        std::vector<ElemKey> ks = keys_of(G);
        if (!index.count(ks)) {
            index.emplace(ks, subs.size());
            subs.push_back(Sub{std::move(ks), G.gens()});
        }
    }
    // distinct cocycles give distinct complements
    if (subs.size() != nz) throw Error("bruteforce: cocycle/complement bijection broken");

    std::vector<size_t> parent(subs.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t id = 0; id < subs.size(); ++id) {
        for (const FpMat& g : S.full.gens()) {
            FpMat gi = mat_inverse_or_throw(g);
            std::vector<FpMat> cg;
            for (const FpMat& h : subs[id].gens) cg.push_back(mat_mul(gi, mat_mul(h, g)));
            std::vector<ElemKey> ks = keys_of(MatrixGroup(S.p, S.n(), cg));
            auto it = index.find(ks);
            if (it == index.end()) throw Error("bruteforce: conjugate complement missing");
            size_t ra = find(id), rb = find(it->second);
            if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
    }
    std::set<size_t> roots;
    for (size_t id = 0; id < subs.size(); ++id) roots.insert(find(id));
    return roots.size();
}

// ---------------------------------------------------------- named groups

int primitive_root(int p) {
    for (int r = 2; r < p; ++r) {
        int x = r % p, ord = 1;
        while (x != 1) {
            x = x * r % p;
            ++ord;
        }
        if (ord == p - 1) return r;
    }
    throw Error("primitive_root: none found");
}

std::vector<FpMat> gl_generators(int p, int m) {
    // adjacent transvections generate SL_m(p); a primitive-root scalar in
    // one slot covers the determinants
    std::vector<FpMat> out;
    for (int i = 0; i + 1 < m; ++i) {
        FpMat t = FpMat::identity(p, m);
        t.set(i, i + 1, 1);
        out.push_back(t);
        FpMat s = FpMat::identity(p, m);
        s.set(i + 1, i, 1);
        out.push_back(s);
    }
    if (p > 2) {
        FpMat dgen = FpMat::identity(p, m);
        dgen.set(0, 0, primitive_root(p));
        out.push_back(dgen);
    }
    return out;
}

MatrixGroup parabolic(int p, int n, int d) {
    if (d <= 0 || d >= n) throw Error("parabolic: need 0 < d < n");
    std::vector<FpMat> gens;
    for (const FpMat& A : gl_generators(p, d)) gens.push_back(levi_embed(A, FpMat::identity(p, n - d)));
    for (const FpMat& B : gl_generators(p, n - d)) gens.push_back(levi_embed(FpMat::identity(p, d), B));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n - d; ++j) {
            FpVec c(size_t(d * (n - d)), 0);
            c[size_t(i * (n - d) + j)] = 1;
            gens.push_back(unipotent(p, d, n - d, c));
        }
    return MatrixGroup(p, n, gens);
}

MatrixGroup paper_G1() {
    FpMat a = FpMat::from_rows(2, {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
    FpMat b = FpMat::from_rows(2, {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    return MatrixGroup(2, 4, {a, b});
}

MatrixGroup paper_G2() {
    FpMat a = FpMat::from_rows(2, {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
    FpMat b = FpMat::from_rows(2, {{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
    return MatrixGroup(2, 4, {a, b});
}

MatrixGroup paper_L() {
    FpMat b1 = FpMat::from_rows(2, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    FpMat b2 = FpMat::from_rows(2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    FpMat I1 = FpMat::identity(2, 1);
    return MatrixGroup(2, 4, {levi_embed(I1, b1), levi_embed(I1, b2)});
}

}  // namespace af3
