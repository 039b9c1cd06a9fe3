#include "af3/module.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace af3 {

FpModule module_from_group(const MatrixGroup& G) {
    return FpModule{G.p(), G.dim(), G.gens()};
}

MatrixGroup group_from_module(const FpModule& M) {
    return MatrixGroup(M.p, M.dim, M.mats);
}

FpModule trivial_module(int p, int ngens) {
    FpModule M{p, 1, {}};
    for (int i = 0; i < ngens; ++i) M.mats.push_back(FpMat::identity(p, 1));
    return M;
}

FpModule dual_module(const FpModule& M) {
    FpModule D{M.p, M.dim, {}};
    for (const FpMat& g : M.mats) D.mats.push_back(inverse_transpose(g));
    return D;
}

FpModule tensor_module(const FpModule& A, const FpModule& B) {
    if (A.p != B.p || A.mats.size() != B.mats.size())
        throw Error("tensor_module: misaligned modules");
    FpModule T{A.p, A.dim * B.dim, {}};
    for (size_t i = 0; i < A.mats.size(); ++i)
        T.mats.push_back(kronecker(A.mats[i], B.mats[i]));
    return T;
}

Subspace spin_module(const FpModule& M, const std::vector<FpVec>& seeds) {
    return spin_vectors(M.p, M.dim, M.mats, seeds);
}

Subspace fixed_space(const FpModule& M) {
    if (M.mats.empty()) {
        Subspace S;
        S.p = M.p;
        S.ambient = M.dim;
        for (int i = 0; i < M.dim; ++i) {
            FpVec e(M.dim, 0);
            e[i] = 1;
            S.basis.push_back(e);
        }
        return S;
    }
    FpMat stack(M.p, M.dim * int(M.mats.size()), M.dim);
    for (size_t i = 0; i < M.mats.size(); ++i)
        for (int r = 0; r < M.dim; ++r)
            for (int c = 0; c < M.dim; ++c) {
                uint8_t v = M.mats[i].at(r, c);
                if (r == c) v = fp_sub(v, 1, M.p);
                stack.set(int(i) * M.dim + r, c, v);
            }
    std::vector<FpVec> ker = kernel_basis(stack);
    return Subspace::from_vectors(M.p, M.dim, ker);
}

FpModule submodule_action(const FpModule& M, const Subspace& U) {
    const int p = M.p, n = M.dim, d = U.dim();
    std::vector<int> pivots;
    for (const FpVec& b : U.basis) {
        int pc = 0;
        while (pc < n && b[pc] == 0) ++pc;
        pivots.push_back(pc);
    }
    FpModule R{p, d, {}};
    for (const FpMat& g : M.mats) {
        FpMat A(p, d, d);
        for (int j = 0; j < d; ++j) {
            FpVec img = mat_apply(g, U.basis[j]);
            if (!U.contains(img)) throw Error("submodule_action: subspace not invariant");
            // coordinates of img in the reduced-echelon basis = pivot entries
            for (int k = 0; k < d; ++k) A.set(k, j, img[pivots[k]]);
        }
        R.mats.push_back(std::move(A));
    }
    return R;
}

FpModule quotient_action(const FpModule& M, const Subspace& U) {
    const int p = M.p, n = M.dim;
    std::vector<bool> is_pivot(n, false);
    for (const FpVec& b : U.basis) {
        int pc = 0;
        while (pc < n && b[pc] == 0) ++pc;
        is_pivot[pc] = true;
    }
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    const int q = int(free_cols.size());
    auto reduce_mod_U = [&](FpVec v) {
        for (const FpVec& b : U.basis) {
            int pc = 0;
            while (pc < n && b[pc] == 0) ++pc;
            uint8_t f = v[pc];
            if (f)
                for (int c = 0; c < n; ++c) v[c] = fp_sub(v[c], fp_mul(f, b[c], p), p);
        }
        return v;
    };
    FpModule R{p, q, {}};
    for (const FpMat& g : M.mats) {
        FpMat A(p, q, q);
        for (int j = 0; j < q; ++j) {
            FpVec e(n, 0);
            e[free_cols[j]] = 1;
            FpVec img = reduce_mod_U(mat_apply(g, e));
            for (int k = 0; k < q; ++k) A.set(k, j, img[free_cols[k]]);
        }
        R.mats.push_back(std::move(A));
    }
    return R;
}

std::vector<FpMat> hom_space(const FpModule& M, const FpModule& N) {
    if (M.p != N.p || M.mats.size() != N.mats.size())
        throw Error("hom_space: misaligned modules");
    const int p = M.p, m = M.dim, n = N.dim;
    // unknowns: vec(X) row-major, X is n x m.  N_i X - X M_i = 0, i.e.
    // (N_i (x) I_m) vecX - (I_n (x) M_i^T) vecX = 0.
    const int nm = n * m;
    FpMat stack(p, nm * int(M.mats.size()), nm);
    for (size_t i = 0; i < M.mats.size(); ++i) {
        FpMat L = kronecker(N.mats[i], FpMat::identity(p, m));
        FpMat R = kronecker(FpMat::identity(p, n), M.mats[i].transpose());
        for (int r = 0; r < nm; ++r)
            for (int c = 0; c < nm; ++c)
                stack.set(int(i) * nm + r, c, fp_sub(L.at(r, c), R.at(r, c), p));
    }
    std::vector<FpVec> ker = kernel_basis(stack);
    std::vector<FpMat> out;
    for (const FpVec& v : ker) {
        FpMat X(p, n, m);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < m; ++c) X.set(r, c, v[size_t(r) * m + c]);
        out.push_back(std::move(X));
    }
    return out;
}

bool is_isomorphic(const FpModule& M, const FpModule& N) {
    if (M.p != N.p || M.mats.size() != N.mats.size())
        throw Error("is_isomorphic: misaligned modules");
    if (M.dim != N.dim) return false;
    if (M.dim == 0) return true;
    std::vector<FpMat> H = hom_space(M, N);
    if (H.empty()) return false;
    const int p = M.p;
    const size_t k = H.size();
    auto combo_invertible = [&](const std::vector<uint8_t>& coef) {
        FpMat X = FpMat::zero(p, N.dim, M.dim);
        for (size_t i = 0; i < k; ++i)
            if (coef[i])
                for (int r = 0; r < N.dim; ++r)
                    for (int c = 0; c < M.dim; ++c)
                        X.set(r, c, fp_add(X.at(r, c), fp_mul(coef[i], H[i].at(r, c), p), p));
        return mat_inverse(X).has_value();
    };
    uint64_t total = 1;
    bool small = true;
    for (size_t i = 0; i < k; ++i) {
        total *= uint64_t(p);
        if (total > 65536) { small = false; break; }
    }
    if (small) {
        std::vector<uint8_t> coef(k, 0);
        for (uint64_t code = 1; code < total; ++code) {
            uint64_t c = code;
            for (size_t i = 0; i < k; ++i) { coef[i] = uint8_t(c % p); c /= p; }
            if (combo_invertible(coef)) return true;
        }
        return false;
    }
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> d(0, p - 1);
    std::vector<uint8_t> coef(k);
    for (int t = 0; t < 2000; ++t) {
        for (auto& e : coef) e = uint8_t(d(rng));
        if (combo_invertible(coef)) return true;
    }
    return false;
}

// ------------------------------------------------------------ polynomials

namespace {

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_deg(const Poly& a) { return int(a.size()) - 1; }  // -1 for zero

Poly poly_monic(Poly a, int p) {
    poly_trim(a);
    if (a.empty()) return a;
    uint8_t inv = fp_inv(a.back(), p);
    for (auto& c : a) c = fp_mul(c, inv, p);
    return a;
}

Poly poly_sub(const Poly& a, const Poly& b, int p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint8_t x = i < a.size() ? a[i] : 0;
        uint8_t y = i < b.size() ? b[i] : 0;
        r[i] = fp_sub(x, y, p);
    }
    poly_trim(r);
    return r;
}

Poly poly_divmod(const Poly& a, const Poly& m, int p, Poly* quot) {
    Poly r = a;
    poly_trim(r);
    Poly q;
    if (m.empty()) throw Error("poly division by zero");
    if (quot) q.assign(a.size(), 0);
    uint8_t lead_inv = fp_inv(m.back(), p);
    while (int(r.size()) >= int(m.size())) {
        size_t shift = r.size() - m.size();
        uint8_t f = fp_mul(r.back(), lead_inv, p);
        if (quot) q[shift] = f;
        for (size_t i = 0; i < m.size(); ++i)
            r[shift + i] = fp_sub(r[shift + i], fp_mul(f, m[i], p), p);
        poly_trim(r);
    }
    if (quot) {
        poly_trim(q);
        *quot = q;
    }
    return r;
}

Poly poly_deriv(const Poly& a, int p) {
    Poly d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(fp_mul(a[i], uint8_t(i % p), p));
    poly_trim(d);
    return d;
}

Poly poly_powmod(Poly b, uint64_t e, const Poly& m, int p) {
    Poly r{1};
    b = poly_mod(b, m, p);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, b, p), m, p);
        b = poly_mod(poly_mul(b, b, p), m, p);
        e >>= 1;
    }
    return r;
}

void edf(const Poly& g, int d, int p, std::mt19937& rng, std::vector<Poly>& out) {
    if (poly_deg(g) == d) {
        out.push_back(poly_monic(g, p));
        return;
    }
    std::uniform_int_distribution<int> dist(0, p - 1);
    for (;;) {
        Poly r(size_t(poly_deg(g)), 0);
        for (auto& c : r) c = uint8_t(dist(rng));
        poly_trim(r);
        if (r.empty()) continue;
        Poly s;
        if (p == 2) {
            // trace map r + r^2 + ... + r^(2^(d-1))
            s = poly_mod(r, g, 2);
            Poly acc = s;
            for (int i = 1; i < d; ++i) {
                acc = poly_mod(poly_mul(acc, acc, 2), g, 2);
                s = poly_sub(s, acc, 2);  // == addition over F_2
            }
        } else {
            uint64_t e = (pow_u64(uint64_t(p), uint32_t(d)) - 1) / 2;
            s = poly_sub(poly_powmod(r, e, g, p), Poly{1}, p);
        }
        Poly h = poly_gcd(s, g, p);
        if (poly_deg(h) > 0 && poly_deg(h) < poly_deg(g)) {
            Poly q;
            poly_divmod(g, h, p, &q);
            edf(h, d, p, rng, out);
            edf(q, d, p, rng, out);
            return;
        }
    }
}

void ddf(Poly w, int p, std::mt19937& rng, std::vector<Poly>& out) {
    // w squarefree, monic
    Poly x{0, 1};
    Poly h = x;
    int d = 0;
    while (poly_deg(w) > 0) {
        ++d;
        if (2 * d > poly_deg(w)) {
            out.push_back(poly_monic(w, p));
            break;
        }
        h = poly_powmod(h, uint64_t(p), w, p);
        Poly g = poly_gcd(poly_sub(h, x, p), w, p);
        if (poly_deg(g) > 0) {
            edf(g, d, p, rng, out);
            Poly q;
            poly_divmod(w, g, p, &q);
            w = poly_monic(q, p);
            h = poly_mod(h, w, p);
        }
    }
}

void distinct_factors(Poly f, int p, std::mt19937& rng, std::vector<Poly>& out) {
    f = poly_monic(f, p);
    if (poly_deg(f) <= 0) return;
    Poly fp_ = poly_deriv(f, p);
    if (fp_.empty()) {
        // f = h(x^p); in F_p the coefficient p-th roots are the coefficients
        Poly h;
        for (size_t i = 0; i < f.size(); i += size_t(p)) h.push_back(f[i]);
        distinct_factors(h, p, rng, out);
        return;
    }
    Poly g = poly_gcd(f, fp_, p);
    Poly w;
    poly_divmod(f, g, p, &w);
    ddf(poly_monic(w, p), p, rng, out);
    if (poly_deg(g) > 0) distinct_factors(g, p, rng, out);
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = fp_add(r[i + j], fp_mul(a[i], b[j], p), p);
    poly_trim(r);
    return r;
}

Poly poly_mod(const Poly& a, const Poly& m, int p) { return poly_divmod(a, m, p, nullptr); }

Poly poly_gcd(Poly a, Poly b, int p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a, p);
}

FpMat poly_eval_mat(const Poly& f, const FpMat& z) {
    const int p = z.p(), n = z.rows();
    FpMat r = FpMat::zero(p, n, n);
    // Horner
    for (size_t i = f.size(); i-- > 0;) {
        r = mat_mul(r, z);
        for (int d = 0; d < n; ++d) r.set(d, d, fp_add(r.at(d, d), f[i], p));
    }
    return r;
}

Poly min_poly(const FpMat& z) {
    const int p = z.p(), n = z.rows();
    if (n != z.cols()) throw Error("min_poly: square matrix required");
    const int nn = n * n;
    // incremental elimination over vec(z^k), tracking combinations
    std::vector<FpVec> rows;        // reduced rows, length nn
    std::vector<int> pivots;
    std::vector<Poly> combos;       // combos[i][j]: coefficient of z^j
    FpMat zk = FpMat::identity(p, n);
    for (int k = 0;; ++k) {
        FpVec v(size_t(nn), 0);
        for (int i = 0; i < nn; ++i) v[size_t(i)] = zk.data()[size_t(i)];
        Poly combo(size_t(k) + 1, 0);
        combo[size_t(k)] = 1;
        for (size_t r = 0; r < rows.size(); ++r) {
            uint8_t f = v[size_t(pivots[r])];
            if (f) {
                for (int c = 0; c < nn; ++c) v[size_t(c)] = fp_sub(v[size_t(c)], fp_mul(f, rows[r][size_t(c)], p), p);
                for (size_t j = 0; j < combos[r].size(); ++j)
                    combo[j] = fp_sub(combo[j], fp_mul(f, combos[r][j], p), p);
            }
        }
        int pc = 0;
        while (pc < nn && v[size_t(pc)] == 0) ++pc;
        if (pc == nn) {
            poly_trim(combo);
            return poly_monic(combo, p);
        }
        uint8_t inv = fp_inv(v[size_t(pc)], p);
        for (int c = 0; c < nn; ++c) v[size_t(c)] = fp_mul(v[size_t(c)], inv, p);
        for (auto& cc : combo) cc = fp_mul(cc, inv, p);
        rows.push_back(std::move(v));
        pivots.push_back(pc);
        combos.push_back(std::move(combo));
        zk = mat_mul(zk, z);
        if (k > nn) throw Error("min_poly: no dependence found");
    }
}

std::vector<Poly> poly_distinct_irreducible_factors(const Poly& f, int p, uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<Poly> out;
    distinct_factors(f, p, rng, out);
    std::set<Poly> dedup(out.begin(), out.end());
    return std::vector<Poly>(dedup.begin(), dedup.end());
}

// ---------------------------------------------------------------- meataxe

namespace {

Subspace spin_with(const std::vector<FpMat>& mats, int p, int n, const FpVec& v) {
    return spin_vectors(p, n, mats, {v});
}

}  // namespace

MeataxeResult meataxe(const FpModule& M, uint32_t seed) {
    const int p = M.p, n = M.dim;
    if (n == 0) throw Error("meataxe: zero module");
    MeataxeResult res;
    if (n == 1) {
        res.irreducible = true;
        return res;
    }
    std::vector<FpMat> gens = M.mats;
    if (gens.empty()) gens.push_back(FpMat::identity(p, n));
    std::vector<FpMat> tgens;
    for (const FpMat& g : gens) tgens.push_back(g.transpose());

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> gpick(0, int(gens.size()) - 1);
    std::uniform_int_distribution<int> cpick(0, p - 1);

    // pool of algebra elements: generators, then random sums of random words
    auto random_algebra_element = [&]() {
        FpMat z = FpMat::zero(p, n, n);
        int terms = 2 + int(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            FpMat w = FpMat::identity(p, n);
            int len = 1 + int(rng() % 3);
            for (int l = 0; l < len; ++l) w = mat_mul(w, gens[size_t(gpick(rng))]);
            uint8_t c = uint8_t(1 + cpick(rng) % (p - 1 == 0 ? 1 : p - 1));
            for (int r = 0; r < n; ++r)
                for (int cc = 0; cc < n; ++cc)
                    z.set(r, cc, fp_add(z.at(r, cc), fp_mul(c, w.at(r, cc), p), p));
        }
        return z;
    };

    for (int attempt = 0; attempt < 200; ++attempt) {
        FpMat z = attempt < int(gens.size()) ? gens[size_t(attempt)] : random_algebra_element();
        Poly mp = min_poly(z);
        if (poly_deg(mp) < 1) continue;
        std::vector<Poly> factors = poly_distinct_irreducible_factors(mp, p, seed + uint32_t(attempt));
        for (const Poly& q : factors) {
            FpMat B = poly_eval_mat(q, z);
            std::vector<FpVec> ker = kernel_basis(B);
            if (ker.empty()) continue;  // should not happen for a min-poly factor
            Subspace S = spin_with(gens, p, n, ker[0]);
            if (S.dim() < n) {
                res.irreducible = false;
                res.submodule = S;
                return res;
            }
            if (int(ker.size()) == poly_deg(q)) {
                // Norton's test is conclusive: check the dual side
                std::vector<FpVec> tker = kernel_basis(B.transpose());
                if (tker.empty()) throw Error("meataxe: transpose kernel empty");
                Subspace T = spin_with(tgens, p, n, tker[0]);
                if (T.dim() < n) {
                    // perp of a submodule of the transpose module is invariant
                    FpMat rowsT(p, T.dim(), n);
                    for (int r = 0; r < T.dim(); ++r)
                        for (int c = 0; c < n; ++c) rowsT.set(r, c, T.basis[size_t(r)][size_t(c)]);
                    std::vector<FpVec> perp = kernel_basis(rowsT);
                    Subspace P = Subspace::from_vectors(p, n, perp);
                    if (P.dim() == 0 || P.dim() == n)
                        throw Error("meataxe: degenerate perp");
                    res.irreducible = false;
                    res.submodule = P;
                    return res;
                }
                res.irreducible = true;
                return res;
            }
        }
    }
    throw Error("meataxe: gave up (no conclusive witness found)");
}

bool is_irreducible(const FpModule& M, uint32_t seed) { return meataxe(M, seed).irreducible; }

std::vector<FpModule> composition_factors(const FpModule& M, uint32_t seed) {
    MeataxeResult r = meataxe(M, seed);
    if (r.irreducible) return {M};
    std::vector<FpModule> out = composition_factors(submodule_action(M, r.submodule), seed);
    std::vector<FpModule> rest = composition_factors(quotient_action(M, r.submodule), seed);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

bool is_irreducible_exhaustive(const FpModule& M) {
    uint64_t dom = 1;
    for (int i = 0; i < M.dim; ++i) {
        dom *= uint64_t(M.p);
        if (dom > (1u << 20)) throw Error("is_irreducible_exhaustive: domain too large");
    }
    if (M.dim == 0) throw Error("is_irreducible_exhaustive: zero module");
    for (uint32_t c = 1; c < dom; ++c) {
        Subspace S = spin_module(M, {decode_vec(c, M.p, M.dim)});
        if (S.dim() < M.dim) return false;
    }
    return true;
}

}  // namespace af3
