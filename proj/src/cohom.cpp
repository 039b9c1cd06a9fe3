#include "af3/cohom.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <random>
#include <set>

namespace af3 {

// ------------------------------------------------------------------- words

namespace {

struct WordParser {
    const std::string& s;
    size_t pos = 0;
    int ngens;

    explicit WordParser(const std::string& str, int ng) : s(str), ngens(ng) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw Error("word parse error at position " + std::to_string(pos) + ": " + why +
                    " in \"" + s + "\"");
    }

    int parse_int() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = (s[pos++] == '-');
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos++] - '0');
            if (v > 1000000) fail("exponent too large");
        }
        return int(neg ? -v : v);
    }

    Word parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end");
        char c = s[pos];
        if (c >= 'a' && c <= 'z') {
            ++pos;
            int g = c - 'a';
            if (g >= ngens) fail(std::string("unknown generator '") + c + "'");
            return Word{{2 * g}};
        }
        if (c == '(') {
            ++pos;
            Word w = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return w;
        }
        if (c == '[') {
            ++pos;
            Word u = parse_expr();
            if (!eat(',')) fail("expected ',' in commutator");
            Word v = parse_expr();
            if (!eat(']')) fail("expected ']'");
            Word w = word_inverse(u);
            Word vi = word_inverse(v);
            w.letters.insert(w.letters.end(), vi.letters.begin(), vi.letters.end());
            w.letters.insert(w.letters.end(), u.letters.begin(), u.letters.end());
            w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
            return w;
        }
        fail("unexpected character");
    }

    Word parse_term() {
        Word w = parse_atom();
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            int e = parse_int();
            w = word_pow(w, e);
        }
        return w;
    }

    Word parse_expr() {
        Word w = parse_term();
        for (;;) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                Word t = parse_term();
                w.letters.insert(w.letters.end(), t.letters.begin(), t.letters.end());
            } else {
                return w;
            }
        }
    }
};

}  // namespace

Word parse_word(const std::string& s, int ngens) {
    WordParser P(s, ngens);
    Word w = P.parse_expr();
    P.skip_ws();
    if (P.pos != s.size()) P.fail("trailing input");
    return w;
}

std::string word_str(const Word& w) {
    if (w.letters.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += "*";
        int l = w.letters[i];
        out += char('a' + l / 2);
        if (l & 1) out += "^-1";
    }
    return out;
}

Word word_inverse(const Word& w) {
    Word r;
    for (size_t i = w.letters.size(); i-- > 0;) r.letters.push_back(w.letters[i] ^ 1);
    return r;
}

Word word_pow(const Word& w, int e) {
    Word base = e < 0 ? word_inverse(w) : w;
    int n = e < 0 ? -e : e;
    Word r;
    for (int i = 0; i < n; ++i)
        r.letters.insert(r.letters.end(), base.letters.begin(), base.letters.end());
    return r;
}

Word word_free_reduce(const Word& w) {
    Word r;
    for (int l : w.letters) {
        if (!r.letters.empty() && (r.letters.back() ^ 1) == l)
            r.letters.pop_back();
        else
            r.letters.push_back(l);
    }
    return r;
}

FpMat evaluate_word(const Word& w, const std::vector<FpMat>& gens) {
    if (gens.empty()) throw Error("evaluate_word: no generators");
    const int p = gens[0].p(), n = gens[0].rows();
    FpMat r = FpMat::identity(p, n);
    for (int l : w.letters) {
        int g = l / 2;
        if (g >= int(gens.size())) throw Error("evaluate_word: letter out of range");
        r = mat_mul(r, (l & 1) ? mat_inverse_or_throw(gens[size_t(g)]) : gens[size_t(g)]);
    }
    return r;
}

// ----------------------------------------------------------- Todd-Coxeter

namespace {

constexpr uint32_t UNDEF = 0xffffffffu;

struct CosetTable {
    int ncols;
    std::vector<std::vector<uint32_t>> tab;  // tab[coset][col]
    std::vector<uint32_t> uf;                // union-find, rep = smallest
    uint64_t live = 0;
    uint64_t total = 0;
    uint64_t max_rows;

    explicit CosetTable(int ngens, uint64_t mr) : ncols(2 * ngens), max_rows(mr) {
        new_coset();
    }

    uint32_t new_coset() {
        if (total >= max_rows) throw Error("todd_coxeter: row limit exceeded");
        tab.emplace_back(size_t(ncols), UNDEF);
        uf.push_back(uint32_t(tab.size() - 1));
        ++live;
        ++total;
        return uint32_t(tab.size() - 1);
    }

    uint32_t rep(uint32_t a) {
        while (uf[a] != a) {
            uf[a] = uf[uf[a]];
            a = uf[a];
        }
        return a;
    }

    void merge(uint32_t a, uint32_t b, std::deque<uint32_t>& q) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        uf[b] = a;
        --live;
        q.push_back(b);
    }

    void coincidence(uint32_t a, uint32_t b) {
        std::deque<uint32_t> q;
        merge(a, b, q);
        while (!q.empty()) {
            uint32_t g = q.front();
            q.pop_front();
            for (int x = 0; x < ncols; ++x) {
                uint32_t d = tab[g][size_t(x)];
                if (d == UNDEF) continue;
                tab[g][size_t(x)] = UNDEF;
                // remove the reverse entry
                if (tab[d][size_t(x ^ 1)] == g) tab[d][size_t(x ^ 1)] = UNDEF;
                uint32_t mu = rep(g), nu = rep(d);
                if (tab[mu][size_t(x)] != UNDEF)
                    merge(nu, tab[mu][size_t(x)], q);
                else if (tab[nu][size_t(x ^ 1)] != UNDEF)
                    merge(mu, tab[nu][size_t(x ^ 1)], q);
                else {
                    tab[mu][size_t(x)] = nu;
                    tab[nu][size_t(x ^ 1)] = mu;
                }
            }
        }
    }

    void scan_and_fill(uint32_t alpha, const std::vector<int>& w) {
        if (w.empty()) return;
        uint32_t f = rep(alpha), b = f;
        int i = 0, j = int(w.size()) - 1;
        for (;;) {
            while (i <= j && tab[f][size_t(w[size_t(i)])] != UNDEF) {
                f = tab[f][size_t(w[size_t(i)])];
                ++i;
            }
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && tab[b][size_t(w[size_t(j)] ^ 1)] != UNDEF) {
                b = tab[b][size_t(w[size_t(j)] ^ 1)];
                --j;
            }
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (j == i) {
                tab[f][size_t(w[size_t(i)])] = b;
                tab[b][size_t(w[size_t(i)] ^ 1)] = f;
                return;
            }
            uint32_t n = new_coset();
            tab[f][size_t(w[size_t(i)])] = n;
            tab[n][size_t(w[size_t(i)] ^ 1)] = f;
            f = n;
            ++i;
        }
    }
};

}  // namespace

TcResult todd_coxeter(const Presentation& P, const std::vector<Word>& subgens,
                      uint64_t max_rows) {
    if (P.ngens <= 0) throw Error("todd_coxeter: presentation needs generators");
    std::vector<std::vector<int>> rels;
    for (const Word& r : P.relators) {
        Word red = word_free_reduce(r);
        if (!red.letters.empty()) rels.push_back(red.letters);
    }
    CosetTable T(P.ngens, max_rows);
    for (const Word& s : subgens) {
        Word red = word_free_reduce(s);
        if (!red.letters.empty()) T.scan_and_fill(0, red.letters);
    }
    for (uint32_t a = 0; a < T.tab.size(); ++a) {
        if (T.rep(a) != a) continue;
        for (const auto& r : rels) {
            if (T.rep(a) != a) break;  // row died during an earlier scan
            T.scan_and_fill(a, r);
        }
        if (T.rep(a) != a) continue;
        for (int x = 0; x < T.ncols; ++x) {
            if (T.rep(a) != a) break;
            if (T.tab[a][size_t(x)] == UNDEF) {
                uint32_t n = T.new_coset();
                T.tab[a][size_t(x)] = n;
                T.tab[n][size_t(x ^ 1)] = a;
            }
        }
    }
    return TcResult{T.live, T.total};
}

bool verify_presentation(const MatrixGroup& G, const Presentation& P,
                         const std::vector<Word>& tc_subgroup, uint64_t max_rows) {
    if (P.ngens != int(G.gens().size()))
        throw Error("verify_presentation: generator count mismatch");
    for (const Word& r : P.relators)
        if (!evaluate_word(r, G.gens()).is_identity()) return false;
    uint64_t ord = G.order();
    if (tc_subgroup.empty()) {
        TcResult t = todd_coxeter(P, {}, max_rows);
        return t.index == ord;
    }
    if (tc_subgroup.size() != 1)
        throw Error("verify_presentation: at most one subgroup word supported");
    const Word w = word_free_reduce(tc_subgroup[0]);
    FpMat img = evaluate_word(w, G.gens());
    int m = mat_order(img, int(std::min<uint64_t>(ord + 1, 1 << 20)));
    // soundness: the presentation itself must bound the subgroup's order,
    // via a relator freely equal to w^m
    Word pw = word_free_reduce(word_pow(w, m));
    bool have_power = false;
    for (const Word& r : P.relators)
        if (word_free_reduce(r) == pw) { have_power = true; break; }
    if (!have_power) throw Error("verify_presentation: missing power relator for tc subgroup");
    TcResult t = todd_coxeter(P, {w}, max_rows);
    return t.index * uint64_t(m) == ord;
}

Presentation discover_presentation(const MatrixGroup& G, uint64_t max_rows, uint32_t seed,
                                   const std::optional<Word>& tcsub) {
    const int ng = int(G.gens().size());
    const uint64_t ord = G.order();
    Presentation P;
    P.ngens = ng;
    std::set<std::vector<int>> have;

    auto add_power_relator = [&](const Word& w) {
        Word red = word_free_reduce(w);
        if (red.letters.empty()) return;
        FpMat img = evaluate_word(red, G.gens());
        int m = mat_order(img, int(std::min<uint64_t>(ord + 1, 1 << 20)));
        Word rel = word_free_reduce(word_pow(red, m));
        if (rel.letters.empty()) return;
        if (have.insert(rel.letters).second) P.relators.push_back(rel);
    };

    uint64_t sub_order = 1;
    std::vector<Word> sub;
    if (tcsub) {
        Word w = word_free_reduce(*tcsub);
        sub_order = uint64_t(
            mat_order(evaluate_word(w, G.gens()), int(std::min<uint64_t>(ord + 1, 1 << 20))));
        add_power_relator(w);  // sound bound on the subgroup's order
        sub.push_back(w);
    }
    const uint64_t index_goal = ord / sub_order;
    if (index_goal * sub_order != ord) throw Error("discover_presentation: bad tcsub order");

    auto attempt_capped = [&](uint64_t cap) -> std::optional<uint64_t> {
        try {
            TcResult t = todd_coxeter(P, sub, cap);
            if (t.index == index_goal) return t.rows_used;
        } catch (const Error&) {
        }
        return std::nullopt;
    };
    auto attempt = [&]() {
        return attempt_capped(std::min<uint64_t>(max_rows, 200 * index_goal + 5000)).has_value();
    };

    // Once a certifying relator set is found, greedily drop relators that
    // the enumeration does not need.  The tcsub power relator is kept: the
    // soundness of the index bound depends on it.
    auto prune_and_return = [&]() {
        uint64_t rows = *attempt_capped(max_rows);
        uint64_t cap = std::min<uint64_t>(max_rows, 3 * rows + 1000);
        std::optional<std::vector<int>> keep;
        if (tcsub)
            keep = word_free_reduce(word_pow(word_free_reduce(*tcsub), int(sub_order))).letters;
        for (size_t i = P.relators.size(); i-- > 0;) {
            if (keep && P.relators[i].letters == *keep) continue;
            Word saved = std::move(P.relators[i]);
            P.relators.erase(P.relators.begin() + long(i));
            if (!attempt_capped(cap))
                P.relators.insert(P.relators.begin() + long(i), std::move(saved));
        }
        return P;
    };

    // power relators of short forward words
    std::vector<std::vector<int>> tier{{}};
    for (int len = 1; len <= 3 && tier.size() * size_t(ng) <= 4000; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : tier)
            for (int g = 0; g < ng; ++g) {
                auto e = w;
                e.push_back(2 * g);
                next.push_back(e);
            }
        tier = std::move(next);
        for (const auto& w : tier) add_power_relator(Word{w});
        if (len >= 2 && attempt()) return prune_and_return();
    }

    // relators from coincidences in the Cayley graph: breadth-first over
    // freely reduced words in forward and inverse letters; when a word
    // reaches an element already reached by a shortlex-earlier word, the
    // quotient of the two words is a relator
    std::vector<FpMat> letter_mat;
    for (const FpMat& g : G.gens()) {
        letter_mat.push_back(g);
        letter_mat.push_back(mat_inverse_or_throw(g));
    }
    struct Node {
        Word w;
        FpMat m;
    };
    std::unordered_map<ElemKey, Word, ElemKeyHash> seen;
    std::vector<Node> frontier{{Word{}, FpMat::identity(G.p(), G.dim())}};
    seen.emplace(mat_key(frontier[0].m), Word{});
    size_t total_emitted = 0;
    for (int len = 1; len <= 8 && !frontier.empty(); ++len) {
        std::vector<Node> next;
        size_t tier_emitted = 0;
        for (const Node& nd : frontier) {
            for (int l = 0; l < 2 * ng; ++l) {
                if (!nd.w.letters.empty() && (nd.w.letters.back() ^ 1) == l) continue;
                FpMat m = mat_mul(nd.m, letter_mat[size_t(l)]);
                ElemKey key = mat_key(m);
                auto it = seen.find(key);
                Word w = nd.w;
                w.letters.push_back(l);
                if (it == seen.end()) {
                    seen.emplace(key, w);
                    if (seen.size() <= 60000) next.push_back({std::move(w), std::move(m)});
                } else if (tier_emitted < 60 && total_emitted < 300) {
                    Word rel = it->second;
                    std::reverse(rel.letters.begin(), rel.letters.end());
                    for (int& x : rel.letters) x ^= 1;
                    Word cat = w;
                    cat.letters.insert(cat.letters.end(), rel.letters.begin(), rel.letters.end());
                    cat = word_free_reduce(cat);
                    if (!cat.letters.empty() && have.insert(cat.letters).second) {
                        P.relators.push_back(std::move(cat));
                        ++tier_emitted;
                        ++total_emitted;
                    }
                }
            }
        }
        frontier = std::move(next);
        if (len >= 3 && tier_emitted > 0 && attempt()) return prune_and_return();
    }

    // fall back to random longer power relators
    std::mt19937 rng(seed);
    for (int round = 0; round < 60; ++round) {
        for (int k = 0; k < 8; ++k) {
            int len = 5 + int(rng() % 6);
            Word w;
            for (int i = 0; i < len; ++i) w.letters.push_back(2 * int(rng() % uint32_t(ng)));
            add_power_relator(w);
        }
        if (attempt()) return prune_and_return();
    }
    throw Error("discover_presentation: failed to certify a presentation");
}

// ------------------------------------------------------------- cohomology

CocycleSpace cocycle_space(const MatrixGroup& G, const FpModule& M, const Presentation& P) {
    if (int(M.mats.size()) != int(G.gens().size()) || P.ngens != int(G.gens().size()))
        throw Error("cocycle_space: misaligned generators");
    const int p = M.p, m = M.dim, ng = P.ngens;
    const int unknowns = ng * m;

    // one block row of equations per relator: phi(relator) = 0
    std::vector<FpVec> eq_rows;
    for (const Word& r : P.relators) {
        // coeff[g] accumulates the matrix applied to phi(g)
        std::vector<FpMat> coeff(size_t(ng), FpMat::zero(p, m, m));
        FpMat prefix = FpMat::identity(p, m);
        for (int l : r.letters) {
            int g = l / 2;
            if (l & 1) {
                FpMat nxt = mat_mul(prefix, mat_inverse_or_throw(M.mats[size_t(g)]));
                coeff[size_t(g)] = mat_sub(coeff[size_t(g)], nxt);
                prefix = std::move(nxt);
            } else {
                coeff[size_t(g)] = mat_add(coeff[size_t(g)], prefix);
                prefix = mat_mul(prefix, M.mats[size_t(g)]);
            }
        }
        for (int row = 0; row < m; ++row) {
            FpVec e(size_t(unknowns), 0);
            for (int g = 0; g < ng; ++g)
                for (int c = 0; c < m; ++c)
                    e[size_t(g * m + c)] = coeff[size_t(g)].at(row, c);
            eq_rows.push_back(std::move(e));
        }
    }

    CocycleSpace C;
    C.p = p;
    C.mdim = m;
    C.ngens = ng;
    if (eq_rows.empty()) {
        // free group: every map on generators is a cocycle
        for (int i = 0; i < unknowns; ++i) {
            FpVec e(size_t(unknowns), 0);
            e[size_t(i)] = 1;
            C.z_basis.push_back(std::move(e));
        }
    } else {
        FpMat A(p, int(eq_rows.size()), unknowns);
        for (size_t r = 0; r < eq_rows.size(); ++r)
            for (int c = 0; c < unknowns; ++c) A.set(int(r), c, eq_rows[r][size_t(c)]);
        C.z_basis = kernel_basis(A);
    }

    std::vector<FpVec> bvecs;
    for (int i = 0; i < m; ++i) {
        FpVec q(size_t(m), 0);
        q[size_t(i)] = 1;
        FpVec phi(size_t(unknowns), 0);
        for (int g = 0; g < ng; ++g) {
            FpVec gq = mat_apply(M.mats[size_t(g)], q);
            for (int c = 0; c < m; ++c) phi[size_t(g * m + c)] = fp_sub(gq[size_t(c)], q[size_t(c)], p);
        }
        bvecs.push_back(std::move(phi));
    }
    Subspace B = Subspace::from_vectors(p, unknowns, bvecs);
    C.b_basis = B.basis;

    // sanity: coboundaries satisfy the cocycle equations
    Subspace Z = Subspace::from_vectors(p, unknowns, C.z_basis);
    for (const FpVec& b : C.b_basis)
        if (!Z.contains(b)) throw Error("cocycle_space: B^1 not contained in Z^1");
    return C;
}

FpVec cocycle_on_word(const FpVec& phi, const Word& w, const FpModule& M) {
    const int p = M.p, m = M.dim;
    FpVec acc(size_t(m), 0);
    FpMat prefix = FpMat::identity(p, m);
    for (int l : w.letters) {
        int g = l / 2;
        FpVec val(phi.begin() + long(g) * m, phi.begin() + long(g + 1) * m);
        if (l & 1) {
            FpMat nxt = mat_mul(prefix, mat_inverse_or_throw(M.mats[size_t(g)]));
            FpVec t = mat_apply(nxt, val);
            for (int c = 0; c < m; ++c) acc[size_t(c)] = fp_sub(acc[size_t(c)], t[size_t(c)], p);
            prefix = std::move(nxt);
        } else {
            FpVec t = mat_apply(prefix, val);
            for (int c = 0; c < m; ++c) acc[size_t(c)] = fp_add(acc[size_t(c)], t[size_t(c)], p);
            prefix = mat_mul(prefix, M.mats[size_t(g)]);
        }
    }
    return acc;
}

std::vector<FpVec> h1_representatives(const CocycleSpace& C, uint64_t cap) {
    const int p = C.p;
    const int unknowns = C.ngens * C.mdim;
    // B^1 pivot columns
    std::vector<int> bpiv;
    for (const FpVec& b : C.b_basis) {
        int pc = 0;
        while (pc < unknowns && b[size_t(pc)] == 0) ++pc;
        bpiv.push_back(pc);
    }
    auto reduce_mod_B = [&](FpVec v) {
        for (size_t r = 0; r < C.b_basis.size(); ++r) {
            uint8_t f = v[size_t(bpiv[r])];
            if (f)
                for (int c = 0; c < unknowns; ++c)
                    v[size_t(c)] = fp_sub(v[size_t(c)], fp_mul(f, C.b_basis[r][size_t(c)], p), p);
        }
        return v;
    };
    // complement basis: Z^1 basis reduced mod B^1, re-echelonized
    std::vector<FpVec> reduced;
    for (const FpVec& z : C.z_basis) reduced.push_back(reduce_mod_B(z));
    Subspace Comp = Subspace::from_vectors(p, unknowns, reduced);
    if (Comp.dim() != C.h1_dim()) throw Error("h1_representatives: dimension mismatch");
    uint64_t count = 1;
    for (int i = 0; i < Comp.dim(); ++i) {
        count *= uint64_t(p);
        if (count > cap) throw Error("h1_representatives: too many classes");
    }
    std::vector<FpVec> reps;
    for (uint64_t code = 0; code < count; ++code) {
        FpVec v(size_t(unknowns), 0);
        uint64_t c = code;
        for (int i = 0; i < Comp.dim(); ++i) {
            uint8_t coef = uint8_t(c % uint64_t(p));
            c /= uint64_t(p);
            if (coef)
                for (int k = 0; k < unknowns; ++k)
                    v[size_t(k)] = fp_add(v[size_t(k)], fp_mul(coef, Comp.basis[size_t(i)][size_t(k)], p), p);
        }
        reps.push_back(std::move(v));
    }
    return reps;
}

}  // namespace af3
