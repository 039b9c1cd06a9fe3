#include "af3/grp.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

namespace af3 {

// ---------------------------------------------------------------- Subspace

Subspace Subspace::from_vectors(int p, int ambient, const std::vector<FpVec>& vecs) {
    Subspace S;
    S.p = p;
    S.ambient = ambient;
    if (vecs.empty()) return S;
    FpMat M(p, int(vecs.size()), ambient);
    for (size_t r = 0; r < vecs.size(); ++r) {
        if (int(vecs[r].size()) != ambient) throw Error("Subspace: dimension mismatch");
        for (int c = 0; c < ambient; ++c) M.set(int(r), c, vecs[r][c]);
    }
    std::vector<int> piv = rref_in_place(M);
    for (size_t r = 0; r < piv.size(); ++r) {
        FpVec row(ambient);
        for (int c = 0; c < ambient; ++c) row[c] = M.at(int(r), c);
        S.basis.push_back(std::move(row));
    }
    return S;
}

bool Subspace::contains(const FpVec& v) const {
    FpVec r = v;
    for (const FpVec& b : basis) {
        int pc = 0;
        while (pc < ambient && b[pc] == 0) ++pc;
        if (pc == ambient) continue;
        uint8_t f = r[pc];  // basis rows are normalized: pivot = 1
        if (f)
            for (int c = 0; c < ambient; ++c) r[c] = fp_sub(r[c], fp_mul(f, b[c], p), p);
    }
    for (uint8_t e : r)
        if (e) return false;
    return true;
}

bool Subspace::contains_subspace(const Subspace& other) const {
    for (const FpVec& b : other.basis)
        if (!contains(b)) return false;
    return true;
}

bool Subspace::operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    return basis < o.basis;
}

// ------------------------------------------------------------ MatrixGroup

MatrixGroup::MatrixGroup(int p, int dim, std::vector<FpMat> gens)
    : p_(p), dim_(dim), gens_(std::move(gens)) {
    for (const FpMat& g : gens_) {
        if (g.p() != p || g.rows() != dim || g.cols() != dim)
            throw Error("MatrixGroup: generator shape/modulus mismatch");
        if (!mat_inverse(g)) throw Error("MatrixGroup: singular generator");
    }
}

uint32_t MatrixGroup::domain_size() const {
    uint64_t d = 1;
    for (int i = 0; i < dim_; ++i) {
        d *= uint64_t(p_);
        if (d > (1u << 24)) throw Error("domain too large");
    }
    return uint32_t(d);
}

namespace {

uint32_t apply_code(const FpMat& M, uint32_t code) {
    return encode_vec(mat_apply(M, decode_vec(code, M.p(), M.cols())), M.p());
}

struct BsgsBuilder {
    int p, dim;
    std::vector<FpMat> strong;
    std::vector<uint32_t> base;
    std::vector<std::unordered_map<uint32_t, FpMat>> transversal;
    std::vector<std::vector<uint32_t>> orbit_order;

    bool fixes_prefix(const FpMat& g, size_t k) const {
        for (size_t j = 0; j < k; ++j)
            if (apply_code(g, base[j]) != base[j]) return false;
        return true;
    }

    std::vector<FpMat> level_gens(size_t i) const {
        std::vector<FpMat> out;
        for (const FpMat& g : strong)
            if (fixes_prefix(g, i)) out.push_back(g);
        return out;
    }

    // Append a base point moved by g (greedy: first moved encoded vector).
    void extend_base(const FpMat& g) {
        uint64_t dom = 1;
        for (int i = 0; i < dim; ++i) dom *= uint64_t(p);
        for (uint32_t c = 1; c < dom; ++c) {
            if (apply_code(g, c) != c) {
                base.push_back(c);
                transversal.emplace_back();
                orbit_order.emplace_back();
                return;
            }
        }
        throw Error("bsgs: non-identity generator fixes every point");
    }

    void compute_orbit(size_t i) {
        auto gens = level_gens(i);
        transversal[i].clear();
        orbit_order[i].clear();
        transversal[i].emplace(base[i], FpMat::identity(p, dim));
        orbit_order[i].push_back(base[i]);
        for (size_t qi = 0; qi < orbit_order[i].size(); ++qi) {
            uint32_t x = orbit_order[i][qi];
            const FpMat ux = transversal[i].at(x);
            for (const FpMat& s : gens) {
                uint32_t y = apply_code(s, x);
                if (!transversal[i].count(y)) {
                    transversal[i].emplace(y, mat_mul(s, ux));
                    orbit_order[i].push_back(y);
                }
            }
        }
    }

    // Sift g through levels >= start using current transversals.
    // Returns residue and the level where sifting stopped.
    std::pair<FpMat, size_t> sift(FpMat g, size_t start) const {
        for (size_t j = start; j < base.size(); ++j) {
            uint32_t x = apply_code(g, base[j]);
            auto it = transversal[j].find(x);
            if (it == transversal[j].end()) return {std::move(g), j};
            g = mat_mul(mat_inverse_or_throw(it->second), g);
        }
        return {std::move(g), base.size()};
    }

    void run(const std::vector<FpMat>& input_gens) {
        for (const FpMat& g : input_gens) {
            if (g.is_identity()) continue;
            if (fixes_prefix(g, base.size())) extend_base(g);
            strong.push_back(g);
        }
        if (base.empty()) return;  // trivial group
        size_t i = base.size() - 1;
        // levels > i are verified at all times
        while (true) {
            compute_orbit(i);
            bool clean = true;
            auto gens = level_gens(i);
            for (size_t qi = 0; qi < orbit_order[i].size() && clean; ++qi) {
                uint32_t x = orbit_order[i][qi];
                const FpMat ux = transversal[i].at(x);
                for (const FpMat& s : gens) {
                    uint32_t y = apply_code(s, x);
                    FpMat h = mat_mul(mat_inverse_or_throw(transversal[i].at(y)),
                                      mat_mul(s, ux));
                    if (h.is_identity()) continue;
                    auto [r, j] = sift(std::move(h), i + 1);
                    if (r.is_identity()) continue;
                    if (j == base.size()) {
                        extend_base(r);
                        j = base.size() - 1;
                    }
                    strong.push_back(std::move(r));
                    i = j;
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            if (i == 0) break;
            --i;
        }
    }

    Bsgs finish() const {
        Bsgs b;
        b.base = base;
        b.transversal = transversal;
        b.order = 1;
        for (size_t i = 0; i < base.size(); ++i) {
            b.level_gens.push_back(level_gens(i));
            b.order *= uint64_t(transversal[i].size());
        }
        return b;
    }
};

}  // namespace

const Bsgs& MatrixGroup::bsgs() const {
    if (!bsgs_) {
        BsgsBuilder bld;
        bld.p = p_;
        bld.dim = dim_;
        bld.run(gens_);
        bsgs_ = std::make_shared<Bsgs>(bld.finish());
    }
    return *bsgs_;
}

uint64_t MatrixGroup::order() const { return bsgs().order; }

bool MatrixGroup::contains(const FpMat& g) const {
    if (g.p() != p_ || g.rows() != dim_ || g.cols() != dim_) throw Error("contains: shape mismatch");
    const Bsgs& b = bsgs();
    FpMat r = g;
    for (size_t j = 0; j < b.base.size(); ++j) {
        uint32_t x = apply_code(r, b.base[j]);
        auto it = b.transversal[j].find(x);
        if (it == b.transversal[j].end()) return false;
        r = mat_mul(mat_inverse_or_throw(it->second), r);
    }
    return r.is_identity();
}

uint64_t bsgs_build(const MatrixGroup& G) { return G.order(); }

// --------------------------------------------------------------- elements

std::vector<FpMat> enumerate_elements(const MatrixGroup& G, uint64_t bound) {
    std::vector<FpMat> out;
    std::unordered_set<ElemKey, ElemKeyHash> seen;
    FpMat I = FpMat::identity(G.p(), G.dim());
    out.push_back(I);
    seen.insert(mat_key(I));
    for (size_t qi = 0; qi < out.size(); ++qi) {
        FpMat cur = out[qi];
        for (const FpMat& g : G.gens()) {
            FpMat nx = mat_mul(cur, g);
            ElemKey k = mat_key(nx);
            if (seen.insert(k).second) {
                out.push_back(std::move(nx));
                if (out.size() > bound) throw Error("enumerate_elements: too large");
            }
        }
    }
    return out;
}

std::unordered_set<ElemKey, ElemKeyHash> element_key_set(const std::vector<FpMat>& elems) {
    std::unordered_set<ElemKey, ElemKeyHash> s;
    s.reserve(elems.size() * 2);
    for (const FpMat& e : elems) s.insert(mat_key(e));
    return s;
}

// ------------------------------------------------------------------ orbits

OrbitPartition orbits(const MatrixGroup& G) {
    const uint32_t dom = G.domain_size();
    // permutation table per generator
    std::vector<std::vector<uint32_t>> perm(G.gens().size(), std::vector<uint32_t>(dom));
    for (size_t gi = 0; gi < G.gens().size(); ++gi)
        for (uint32_t c = 0; c < dom; ++c) perm[gi][c] = apply_code(G.gens()[gi], c);

    OrbitPartition P;
    P.domain = dom;
    P.orbit_id.assign(dom, -1);
    std::vector<uint32_t> queue;
    for (uint32_t start = 0; start < dom; ++start) {
        if (P.orbit_id[start] >= 0) continue;
        int32_t id = int32_t(P.reps.size());
        P.reps.push_back(start);
        queue.clear();
        queue.push_back(start);
        P.orbit_id[start] = id;
        uint64_t sz = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            uint32_t x = queue[qi];
            for (auto& pm : perm) {
                uint32_t y = pm[x];
                if (P.orbit_id[y] < 0) {
                    P.orbit_id[y] = id;
                    queue.push_back(y);
                    ++sz;
                }
            }
        }
        P.sizes.push_back(sz);
    }
    // canonical: sort sizes ascending (reps stay aligned to orbit ids)
    std::vector<uint64_t> sorted = P.sizes;
    std::sort(sorted.begin(), sorted.end());
    std::swap(P.sizes, sorted);
    return P;
}

std::vector<uint64_t> orbit_sizes_sorted(const MatrixGroup& G) { return orbits(G).sizes; }

// -------------------------------------------------------------------- spin

Subspace spin_vectors(int p, int dim, const std::vector<FpMat>& gens,
                      const std::vector<FpVec>& seeds) {
    std::vector<FpVec> rows;  // echelon rows, pivot normalized
    std::vector<int> pivots;
    auto reduce = [&](FpVec v) -> FpVec {
        for (size_t r = 0; r < rows.size(); ++r) {
            uint8_t f = v[pivots[r]];
            if (f)
                for (int c = 0; c < dim; ++c)
                    v[c] = fp_sub(v[c], fp_mul(f, rows[r][c], p), p);
        }
        return v;
    };
    std::deque<FpVec> work;
    auto insert = [&](const FpVec& v) {
        FpVec r = reduce(v);
        int pc = 0;
        while (pc < dim && r[pc] == 0) ++pc;
        if (pc == dim) return;
        uint8_t inv = fp_inv(r[pc], p);
        for (int c = 0; c < dim; ++c) r[c] = fp_mul(r[c], inv, p);
        // back-reduce existing rows
        for (size_t k = 0; k < rows.size(); ++k) {
            uint8_t f = rows[k][pc];
            if (f)
                for (int c = 0; c < dim; ++c)
                    rows[k][c] = fp_sub(rows[k][c], fp_mul(f, r[c], p), p);
        }
        rows.push_back(r);
        pivots.push_back(pc);
        work.push_back(r);
    };
    for (const FpVec& s : seeds) insert(s);
    while (!work.empty()) {
        FpVec v = work.front();
        work.pop_front();
        for (const FpMat& g : gens) insert(mat_apply(g, v));
    }
    // canonical order: sort rows by pivot
    std::vector<size_t> idx(rows.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return pivots[a] < pivots[b]; });
    std::vector<FpVec> sorted;
    for (size_t i : idx) sorted.push_back(rows[i]);
    Subspace S;
    S.p = p;
    S.ambient = dim;
    S.basis = std::move(sorted);
    return S;
}

bool is_invariant(const MatrixGroup& G, const Subspace& W) {
    for (const FpMat& g : G.gens())
        for (const FpVec& b : W.basis)
            if (!W.contains(mat_apply(g, b))) return false;
    return true;
}

// -------------------------------------------------- coset stabilizer, rank 3

namespace {

// canonical representative of v+W: eliminate the pivot coordinates of W
FpVec coset_rep(const Subspace& W, FpVec v) {
    for (const FpVec& b : W.basis) {
        int pc = 0;
        while (pc < W.ambient && b[pc] == 0) ++pc;
        uint8_t f = v[pc];
        if (f)
            for (int c = 0; c < W.ambient; ++c) v[c] = fp_sub(v[c], fp_mul(f, b[c], W.p), W.p);
    }
    return v;
}

}  // namespace

MatrixGroup setwise_coset_stabilizer(const MatrixGroup& G, const Subspace& W, const FpVec& v) {
    if (!is_invariant(G, W)) throw Error("setwise_coset_stabilizer: W is not G-invariant");
    const int p = G.p(), n = G.dim();
    auto rep_code = [&](const FpVec& u) { return encode_vec(coset_rep(W, u), p); };
    uint32_t start = rep_code(v);
    std::unordered_map<uint32_t, FpMat> trans;
    std::vector<uint32_t> order;
    trans.emplace(start, FpMat::identity(p, n));
    order.push_back(start);
    for (size_t qi = 0; qi < order.size(); ++qi) {
        uint32_t x = order[qi];
        FpMat ux = trans.at(x);
        for (const FpMat& g : G.gens()) {
            uint32_t y = rep_code(mat_apply(g, decode_vec(x, p, n)));
            if (!trans.count(y)) {
                trans.emplace(y, mat_mul(g, ux));
                order.push_back(y);
            }
        }
    }
    std::vector<FpMat> stab_gens;
    std::unordered_set<ElemKey, ElemKeyHash> seen;
    for (uint32_t x : order) {
        const FpMat& ux = trans.at(x);
        for (const FpMat& g : G.gens()) {
            uint32_t y = rep_code(mat_apply(g, decode_vec(x, p, n)));
            FpMat h = mat_mul(mat_inverse_or_throw(trans.at(y)), mat_mul(g, ux));
            if (h.is_identity()) continue;
            if (seen.insert(mat_key(h)).second) stab_gens.push_back(std::move(h));
        }
    }
    if (stab_gens.empty()) stab_gens.push_back(FpMat::identity(p, n));
    return MatrixGroup(p, n, std::move(stab_gens));
}

bool rank3_criterion(const MatrixGroup& G, const Subspace& W, const FpVec& v) {
    if (!is_invariant(G, W)) throw Error("rank3_criterion: W is not G-invariant");
    if (W.contains(v)) throw Error("rank3_criterion: v lies in W");
    MatrixGroup S = setwise_coset_stabilizer(G, W, v);
    // orbit of v under the stabilizer; it stays inside v+W
    const int p = G.p();
    std::unordered_set<uint32_t> seen;
    std::vector<FpVec> queue{v};
    seen.insert(encode_vec(v, p));
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        FpVec x = queue[qi];
        for (const FpMat& g : S.gens()) {
            FpVec y = mat_apply(g, x);
            if (seen.insert(encode_vec(y, p)).second) queue.push_back(std::move(y));
        }
    }
    uint64_t coset_size = pow_u64(uint64_t(p), uint32_t(W.dim()));
    return seen.size() == coset_size;
}

// ------------------------------------------------------------------ p-core

namespace {

std::vector<FpMat> closure_of(int p, int dim, const std::vector<FpMat>& gens, uint64_t bound) {
    MatrixGroup tmp(p, dim, gens);
    return enumerate_elements(tmp, bound);
}

}  // namespace

MatrixGroup group_from_element_set(int p, int dim, const std::vector<FpMat>& elems) {
    std::vector<FpMat> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    std::vector<FpMat> gens;
    std::unordered_set<ElemKey, ElemKeyHash> have;
    have.insert(mat_key(FpMat::identity(p, dim)));
    for (const FpMat& e : sorted) {
        if (have.count(mat_key(e))) continue;
        gens.push_back(e);
        for (const FpMat& x : closure_of(p, dim, gens, elems.size() + 1)) have.insert(mat_key(x));
        if (have.size() >= elems.size()) break;
    }
    if (gens.empty()) gens.push_back(FpMat::identity(p, dim));
    return MatrixGroup(p, dim, std::move(gens));
}

MatrixGroup p_core(const MatrixGroup& G, uint64_t bound) {
    const int p = G.p(), n = G.dim();
    std::vector<FpMat> elems = enumerate_elements(G, bound);
    uint64_t order = elems.size();
    uint64_t pp = 1;
    while (order % (pp * p) == 0) pp *= p;
    FpMat I = FpMat::identity(p, n);
    if (pp == 1) return MatrixGroup(p, n, {I});

    std::sort(elems.begin(), elems.end());
    std::vector<FpMat> p_elems;
    for (const FpMat& e : elems) {
        if (e.is_identity()) continue;
        int o = mat_order(e, int(order) + 1);
        bool ppow = true;
        while (o > 1) {
            if (o % p) { ppow = false; break; }
            o /= p;
        }
        if (ppow) p_elems.push_back(e);
    }

    // greedy Sylow growth
    std::vector<FpMat> sgens;
    std::vector<FpMat> S{I};
    auto Sset = element_key_set(S);
    while (uint64_t(S.size()) < pp) {
        bool progress = false;
        for (const FpMat& x : p_elems) {
            if (Sset.count(mat_key(x))) continue;
            FpMat xi = mat_inverse_or_throw(x);
            bool normalizes = true;
            for (const FpMat& g : sgens)
                if (!Sset.count(mat_key(mat_mul(xi, mat_mul(g, x))))) { normalizes = false; break; }
            if (!normalizes) continue;
            std::vector<FpMat> cand = sgens;
            cand.push_back(x);
            std::vector<FpMat> T = closure_of(p, n, cand, pp + 1);
            if (uint64_t(T.size()) > pp) continue;
            sgens = std::move(cand);
            S = std::move(T);
            Sset = element_key_set(S);
            progress = true;
            break;
        }
        if (!progress) throw Error("p_core: Sylow growth stalled");
    }

    // largest normal subgroup contained in the Sylow: iterated conjugate intersection
    std::vector<FpMat> K = S;
    while (true) {
        auto Kset = element_key_set(K);
        bool changed = false;
        for (const FpMat& g : G.gens()) {
            FpMat gi = mat_inverse_or_throw(g);
            std::vector<FpMat> next;
            for (const FpMat& k : K)
                if (Kset.count(mat_key(mat_mul(gi, mat_mul(k, g))))) next.push_back(k);
            if (next.size() != K.size()) {
                K = std::move(next);
                changed = true;
                Kset = element_key_set(K);
            }
        }
        if (!changed) break;
    }
    return group_from_element_set(p, n, K);
}

// ------------------------------------------------------------- conjugation

std::optional<FpMat> subgroup_conjugator(const MatrixGroup& ambient, const MatrixGroup& H,
                                         const MatrixGroup& K, uint64_t bound) {
    if (H.order() != K.order()) return std::nullopt;
    std::vector<FpMat> elems = enumerate_elements(ambient, bound);
    std::sort(elems.begin(), elems.end());
    auto Kset = element_key_set(enumerate_elements(K, K.order()));
    for (const FpMat& g : elems) {
        FpMat gi = mat_inverse_or_throw(g);
        bool ok = true;
        for (const FpMat& h : H.gens())
            if (!Kset.count(mat_key(mat_mul(gi, mat_mul(h, g))))) { ok = false; break; }
        if (ok) return g;  // <H^g> <= K and |H| = |K| force equality
    }
    return std::nullopt;
}

// ------------------------------------------- minimal invariant subspaces

std::vector<Subspace> minimal_invariant_subspaces(const MatrixGroup& G) {
    const uint32_t dom = G.domain_size();
    std::map<std::vector<FpVec>, Subspace> distinct;
    for (uint32_t c = 1; c < dom; ++c) {
        FpVec v = decode_vec(c, G.p(), G.dim());
        Subspace S = spin_vectors(G.p(), G.dim(), G.gens(), {v});
        distinct.emplace(S.basis, S);
    }
    std::vector<Subspace> all;
    for (auto& [k, s] : distinct) all.push_back(s);
    std::vector<Subspace> minimal;
    for (const Subspace& s : all) {
        bool min = true;
        for (const Subspace& t : all)
            if (t.dim() < s.dim() && s.contains_subspace(t)) { min = false; break; }
        if (min) minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

// ------------------------------------------------------------- L2(7) census

namespace {

struct SubgroupRecord {
    std::vector<ElemKey> sorted_keys;
    FpMat a, b;  // the discovered standard generator pair
};

uint64_t keys_hash(const std::vector<ElemKey>& v) {
    uint64_t h = 1469598103934665603ULL;
    ElemKeyHash kh;
    for (const ElemKey& k : v) {
        h ^= kh(k);
        h *= 1099511628211ULL;
    }
    return h;
}

int count_invariant_1spaces(const std::vector<FpMat>& gens, int p, int n) {
    uint64_t dom = pow_u64(p, n);
    std::unordered_set<uint32_t> seen_lines;
    int count = 0;
    for (uint32_t c = 1; c < dom; ++c) {
        if (seen_lines.count(c)) continue;
        FpVec v = decode_vec(c, p, n);
        // mark whole line
        Subspace line = Subspace::from_vectors(p, n, {v});
        bool inv = true;
        for (const FpMat& g : gens)
            if (!line.contains(mat_apply(g, v))) { inv = false; break; }
        for (int s = 1; s < p; ++s) {
            FpVec sv(v.size());
            for (size_t i = 0; i < v.size(); ++i) sv[i] = fp_mul(v[i], uint8_t(s), p);
            seen_lines.insert(encode_vec(sv, p));
        }
        if (inv) ++count;
    }
    return count;
}

// Order of A if it is at most `limit`, otherwise 0 (no throw).
int order_or_zero(const FpMat& A, int limit) {
    FpMat x = A;
    for (int k = 1; k <= limit; ++k) {
        if (x.is_identity()) return k;
        x = mat_mul(x, A);
    }
    return 0;
}

}  // namespace

std::vector<SubgroupClass> l27_subgroup_census(const MatrixGroup& ambient, uint64_t bound) {
    const int p = ambient.p(), n = ambient.dim();
    std::vector<FpMat> elems = enumerate_elements(ambient, bound);
    std::sort(elems.begin(), elems.end());
    const uint64_t N = elems.size();

    std::vector<FpMat> invs, thirds;
    for (const FpMat& e : elems) {
        if (e.is_identity()) continue;
        int o = mat_order(e, int(N) + 1);
        if (o == 2) invs.push_back(e);
        else if (o == 3) thirds.push_back(e);
    }

    std::vector<SubgroupRecord> subs;
    std::unordered_map<uint64_t, std::vector<size_t>> by_hash;
    // element key -> ids of found subgroups containing it (pair-skip pruning)
    std::unordered_map<ElemKey, std::vector<uint32_t>, ElemKeyHash> containing;

    auto register_subgroup = [&](std::vector<FpMat>&& sel, const FpMat& a,
                                 const FpMat& b) -> size_t {
        SubgroupRecord rec;
        rec.a = a;
        rec.b = b;
        for (const FpMat& e : sel) rec.sorted_keys.push_back(mat_key(e));
        std::sort(rec.sorted_keys.begin(), rec.sorted_keys.end());
        uint64_t h = keys_hash(rec.sorted_keys);
        for (size_t id : by_hash[h])
            if (subs[id].sorted_keys == rec.sorted_keys) return id;
        size_t id = subs.size();
        by_hash[h].push_back(id);
        for (const ElemKey& k : rec.sorted_keys) containing[k].push_back(uint32_t(id));
        subs.push_back(std::move(rec));
        return id;
    };

    for (const FpMat& a : invs) {
        for (const FpMat& b : thirds) {
            FpMat ab = mat_mul(a, b);
            if (order_or_zero(ab, 8) != 7) continue;
            // [a,b] = a^-1 b^-1 a b = a b^2 a b (a has order 2, b order 3)
            FpMat comm = mat_mul(mat_mul(a, mat_mul(b, b)), ab);
            if (order_or_zero(comm, 5) != 4) continue;
            // both already inside a known L2(7)?
            auto ia = containing.find(mat_key(a));
            auto ib = containing.find(mat_key(b));
            if (ia != containing.end() && ib != containing.end()) {
                bool shared = false;
                for (uint32_t x : ia->second) {
                    for (uint32_t y : ib->second)
                        if (x == y) { shared = true; break; }
                    if (shared) break;
                }
                if (shared) continue;
            }
            MatrixGroup S(p, n, {a, b});
            std::vector<FpMat> sel = enumerate_elements(S, 200);
            if (sel.size() != 168) throw Error("l27 census: pair closure is not L2(7)");
            register_subgroup(std::move(sel), a, b);
        }
    }

    // conjugacy bucketing under ambient generators (union-find)
    std::vector<size_t> parent(subs.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::unordered_map<uint64_t, std::vector<size_t>> lookup = by_hash;
    for (size_t id = 0; id < subs.size(); ++id) {
        for (const FpMat& g : ambient.gens()) {
            FpMat gi = mat_inverse_or_throw(g);
            // conjugate the generating pair and identify the image subgroup
            FpMat ca = mat_mul(gi, mat_mul(subs[id].a, g));
            FpMat cb = mat_mul(gi, mat_mul(subs[id].b, g));
            MatrixGroup img(p, n, {ca, cb});
            std::vector<FpMat> sel = enumerate_elements(img, 200);
            std::vector<ElemKey> keys;
            for (const FpMat& e : sel) keys.push_back(mat_key(e));
            std::sort(keys.begin(), keys.end());
            uint64_t h = keys_hash(keys);
            bool found = false;
            for (size_t other : by_hash[h]) {
                if (subs[other].sorted_keys == keys) {
                    size_t ra = find(id), rb = find(other);
                    if (ra != rb) parent[ra] = rb;
                    found = true;
                    break;
                }
            }
            if (!found) throw Error("l27 census: conjugate subgroup missing (census incomplete)");
        }
    }

    std::map<size_t, std::vector<size_t>> classes;
    for (size_t id = 0; id < subs.size(); ++id) classes[find(id)].push_back(id);

    std::vector<SubgroupClass> out;
    for (auto& [root, members] : classes) {
        // representative: lexicographically minimal element-key list
        size_t best = members[0];
        for (size_t m : members)
            if (subs[m].sorted_keys < subs[best].sorted_keys) best = m;
        SubgroupClass cls;
        cls.rep = MatrixGroup(p, n, {subs[best].a, subs[best].b});
        cls.class_size = members.size();
        std::vector<FpMat> rg = cls.rep.gens();
        cls.invariant_1spaces = count_invariant_1spaces(rg, p, n);
        std::vector<FpMat> tg;
        for (const FpMat& g : rg) tg.push_back(g.transpose());
        cls.invariant_hyperplanes = count_invariant_1spaces(tg, p, n);
        out.push_back(std::move(cls));
    }
    std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
        return std::make_tuple(a.invariant_1spaces, a.invariant_hyperplanes) <
               std::make_tuple(b.invariant_1spaces, b.invariant_hyperplanes);
    });
    return out;
}

}  // namespace af3
