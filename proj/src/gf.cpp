#include "af3/gf.hpp"

#include <algorithm>
#include <sstream>

namespace af3 {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

uint8_t fp_inv(uint8_t a, int p) {
    if (a == 0) throw Error("fp_inv: zero has no inverse");
    // p is tiny; scan.
    for (int x = 1; x < p; ++x)
        if ((a * x) % p == 1) return uint8_t(x);
    throw Error("fp_inv: not invertible (non-prime modulus?)");
}

FpMat::FpMat(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
    if (!is_prime(p) || p > 11) throw Error("FpMat: modulus must be a prime <= 11");
    if (rows < 0 || cols < 0) throw Error("FpMat: negative dimension");
    a_.assign(size_t(rows) * cols, 0);
}

FpMat FpMat::identity(int p, int n) {
    FpMat I(p, n, n);
    for (int i = 0; i < n; ++i) I.set(i, i, 1);
    return I;
}

FpMat FpMat::from_rows(int p, const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw Error("from_rows: empty");
    FpMat M(p, int(rows.size()), int(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) throw Error("from_rows: ragged rows");
        for (size_t c = 0; c < rows[r].size(); ++c) M.set(int(r), int(c), rows[r][c]);
    }
    return M;
}

void FpMat::set(int r, int c, int v) {
    int m = v % p_;
    if (m < 0) m += p_;
    a_[size_t(r) * cols_ + c] = uint8_t(m);
}

bool FpMat::operator<(const FpMat& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return a_ < o.a_;
}

bool FpMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (at(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

FpMat FpMat::transpose() const {
    FpMat T(p_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) T.set(c, r, at(r, c));
    return T;
}

std::string FpMat::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) os << int(at(r, c)) << (c + 1 < cols_ ? " " : "");
        os << "\n";
    }
    return os.str();
}

FpMat mat_mul(const FpMat& A, const FpMat& B) {
    if (A.p() != B.p()) throw Error("mat_mul: modulus mismatch");
    if (A.cols() != B.rows()) throw Error("mat_mul: dimension mismatch");
    const int p = A.p(), n = A.rows(), k = A.cols(), m = B.cols();
    FpMat C(p, n, m);
    for (int i = 0; i < n; ++i) {
        for (int t = 0; t < k; ++t) {
            const int a = A.at(i, t);
            if (!a) continue;
            const uint8_t* brow = &B.data()[size_t(t) * m];
            uint8_t* crow = &C.data()[size_t(i) * m];
            for (int j = 0; j < m; ++j) crow[j] = uint8_t((crow[j] + a * brow[j]) % p);
        }
    }
    return C;
}

FpVec mat_apply(const FpMat& A, const FpVec& v) {
    if (int(v.size()) != A.cols()) throw Error("mat_apply: dimension mismatch");
    const int p = A.p();
    FpVec out(A.rows(), 0);
    for (int i = 0; i < A.rows(); ++i) {
        int acc = 0;
        const uint8_t* row = &A.data()[size_t(i) * A.cols()];
        for (int j = 0; j < A.cols(); ++j) acc += row[j] * v[j];
        out[i] = uint8_t(acc % p);
    }
    return out;
}

std::optional<FpMat> mat_inverse(const FpMat& A) {
    if (A.rows() != A.cols()) throw Error("mat_inverse: not square");
    const int n = A.rows(), p = A.p();
    FpMat M = A;
    FpMat R = FpMat::identity(p, n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (M.at(r, col)) { piv = r; break; }
        if (piv < 0) return std::nullopt;
        if (piv != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(M.data()[size_t(piv) * n + c], M.data()[size_t(col) * n + c]);
                std::swap(R.data()[size_t(piv) * n + c], R.data()[size_t(col) * n + c]);
            }
        }
        uint8_t inv = fp_inv(M.at(col, col), p);
        for (int c = 0; c < n; ++c) {
            M.data()[size_t(col) * n + c] = fp_mul(M.at(col, c), inv, p);
            R.data()[size_t(col) * n + c] = fp_mul(R.at(col, c), inv, p);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            uint8_t f = M.at(r, col);
            if (!f) continue;
            for (int c = 0; c < n; ++c) {
                M.data()[size_t(r) * n + c] =
                    fp_sub(M.at(r, c), fp_mul(f, M.at(col, c), p), p);
                R.data()[size_t(r) * n + c] =
                    fp_sub(R.at(r, c), fp_mul(f, R.at(col, c), p), p);
            }
        }
    }
    return R;
}

FpMat mat_inverse_or_throw(const FpMat& A) {
    auto inv = mat_inverse(A);
    if (!inv) throw Error("matrix is singular");
    return *inv;
}

FpMat inverse_transpose(const FpMat& A) { return mat_inverse_or_throw(A).transpose(); }

FpMat mat_add(const FpMat& A, const FpMat& B) {
    if (A.p() != B.p() || A.rows() != B.rows() || A.cols() != B.cols())
        throw Error("mat_add: shape/modulus mismatch");
    FpMat C = A;
    for (size_t i = 0; i < C.data().size(); ++i) C.data()[i] = fp_add(C.data()[i], B.data()[i], A.p());
    return C;
}

FpMat mat_sub(const FpMat& A, const FpMat& B) {
    if (A.p() != B.p() || A.rows() != B.rows() || A.cols() != B.cols())
        throw Error("mat_sub: shape/modulus mismatch");
    FpMat C = A;
    for (size_t i = 0; i < C.data().size(); ++i) C.data()[i] = fp_sub(C.data()[i], B.data()[i], A.p());
    return C;
}

FpMat mat_pow(const FpMat& A, uint64_t e) {
    if (A.rows() != A.cols()) throw Error("mat_pow: not square");
    FpMat r = FpMat::identity(A.p(), A.rows());
    FpMat b = A;
    while (e) {
        if (e & 1) r = mat_mul(r, b);
        e >>= 1;
        if (e) b = mat_mul(b, b);
    }
    return r;
}

int mat_order(const FpMat& A, int limit) {
    FpMat x = A;
    for (int k = 1; k <= limit; ++k) {
        if (x.is_identity()) return k;
        x = mat_mul(x, A);
    }
    throw Error("mat_order: exceeded limit");
}

std::vector<int> rref_in_place(FpMat& A) {
    const int p = A.p(), nr = A.rows(), nc = A.cols();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int piv = -1;
        for (int r = row; r < nr; ++r)
            if (A.at(r, col)) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < nc; ++c)
                std::swap(A.data()[size_t(piv) * nc + c], A.data()[size_t(row) * nc + c]);
        uint8_t inv = fp_inv(A.at(row, col), p);
        for (int c = 0; c < nc; ++c) A.data()[size_t(row) * nc + c] = fp_mul(A.at(row, c), inv, p);
        for (int r = 0; r < nr; ++r) {
            if (r == row) continue;
            uint8_t f = A.at(r, col);
            if (!f) continue;
            for (int c = 0; c < nc; ++c)
                A.data()[size_t(r) * nc + c] = fp_sub(A.at(r, c), fp_mul(f, A.at(row, c), p), p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int mat_rank(const FpMat& A) {
    FpMat M = A;
    return int(rref_in_place(M).size());
}

std::vector<FpVec> kernel_basis(const FpMat& A) {
    FpMat M = A;
    std::vector<int> pivots = rref_in_place(M);
    const int nc = A.cols(), p = A.p();
    std::vector<bool> is_pivot(nc, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<FpVec> basis;
    for (int fc = 0; fc < nc; ++fc) {
        if (is_pivot[fc]) continue;
        FpVec v(nc, 0);
        v[fc] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = fp_neg(M.at(int(r), fc), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<FpVec> solve_linear(const FpMat& A, const FpVec& b) {
    if (int(b.size()) != A.rows()) throw Error("solve_linear: dimension mismatch");
    const int nr = A.rows(), nc = A.cols(), p = A.p();
    FpMat aug(p, nr, nc + 1);
    for (int r = 0; r < nr; ++r) {
        for (int c = 0; c < nc; ++c) aug.set(r, c, A.at(r, c));
        aug.set(r, nc, b[r]);
    }
    std::vector<int> pivots = rref_in_place(aug);
    for (int c : pivots)
        if (c == nc) return std::nullopt;  // pivot in the constant column
    FpVec x(nc, 0);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), nc);
    return x;
}

FpMat kronecker(const FpMat& A, const FpMat& B) {
    if (A.p() != B.p()) throw Error("kronecker: modulus mismatch");
    const int p = A.p();
    FpMat K(p, A.rows() * B.rows(), A.cols() * B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int k = 0; k < A.cols(); ++k) {
            const uint8_t a = A.at(i, k);
            if (!a) continue;
            for (int j = 0; j < B.rows(); ++j)
                for (int l = 0; l < B.cols(); ++l) {
                    uint8_t v = fp_mul(a, B.at(j, l), p);
                    if (v) K.set(i * B.rows() + j, k * B.cols() + l, v);
                }
        }
    return K;
}

uint32_t encode_vec(const FpVec& v, int p) {
    uint64_t code = 0, mult = 1;
    for (uint8_t e : v) {
        code += uint64_t(e) * mult;
        mult *= uint64_t(p);
        if (mult > (1ULL << 32)) throw Error("encode_vec: domain too large");
    }
    return uint32_t(code);
}

FpVec decode_vec(uint32_t code, int p, int m) {
    FpVec v(m, 0);
    for (int i = 0; i < m; ++i) {
        v[i] = uint8_t(code % uint32_t(p));
        code /= uint32_t(p);
    }
    return v;
}

uint64_t pow_u64(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

ElemKey mat_key(const FpMat& A) {
    int bits;
    switch (A.p()) {
        case 2: bits = 1; break;
        case 3: bits = 2; break;
        case 5:
        case 7: bits = 3; break;
        default: bits = 4; break;
    }
    const size_t total = A.data().size() * size_t(bits);
    if (total > 256) throw Error("mat_key: matrix too large to pack (group too large)");
    ElemKey k;
    size_t pos = 0;
    for (uint8_t e : A.data()) {
        if (64 - (pos & 63) < size_t(bits)) pos += 64 - (pos & 63);  // no straddling
        if (pos + bits > 256) throw Error("mat_key: matrix too large to pack");
        k.w[pos >> 6] |= uint64_t(e) << (pos & 63);
        pos += size_t(bits);
    }
    return k;
}

}  // namespace af3
