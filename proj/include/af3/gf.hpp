#pragma once

// Dense exact linear algebra over prime fields F_p (p <= 11).
// Matrices are row-major, value-semantic, immutable in spirit: every
// operation returns a fresh object.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace af3 {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

bool is_prime(int p);

// Scalar helpers: residues are stored as uint8_t in [0, p).
inline uint8_t fp_add(uint8_t a, uint8_t b, int p) { return uint8_t((a + b) % p); }
inline uint8_t fp_sub(uint8_t a, uint8_t b, int p) { return uint8_t((a + p - b) % p); }
inline uint8_t fp_mul(uint8_t a, uint8_t b, int p) { return uint8_t((a * b) % p); }
uint8_t fp_inv(uint8_t a, int p);
inline uint8_t fp_neg(uint8_t a, int p) { return uint8_t((p - a) % p); }

using FpVec = std::vector<uint8_t>;

class FpMat {
public:
    FpMat() : p_(2), rows_(0), cols_(0) {}
    FpMat(int p, int rows, int cols);

    static FpMat identity(int p, int n);
    static FpMat zero(int p, int rows, int cols) { return FpMat(p, rows, cols); }
    static FpMat from_rows(int p, const std::vector<std::vector<int>>& rows);

    int p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint8_t at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
    void set(int r, int c, int v);

    const std::vector<uint8_t>& data() const { return a_; }
    std::vector<uint8_t>& data() { return a_; }

    bool operator==(const FpMat& o) const {
        return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const FpMat& o) const { return !(*this == o); }
    bool operator<(const FpMat& o) const;  // lexicographic, for canonical ordering

    bool is_identity() const;
    FpMat transpose() const;
    std::string str() const;

private:
    int p_, rows_, cols_;
    std::vector<uint8_t> a_;
};

FpMat mat_mul(const FpMat& A, const FpMat& B);
FpVec mat_apply(const FpMat& A, const FpVec& v);  // column vector, left action
std::optional<FpMat> mat_inverse(const FpMat& A);
FpMat mat_inverse_or_throw(const FpMat& A);
FpMat inverse_transpose(const FpMat& A);
FpMat mat_add(const FpMat& A, const FpMat& B);
FpMat mat_sub(const FpMat& A, const FpMat& B);
FpMat mat_pow(const FpMat& A, uint64_t e);
int mat_order(const FpMat& A, int limit = 1 << 20);

// Reduced row echelon form in place; returns pivot column list.
std::vector<int> rref_in_place(FpMat& A);
int mat_rank(const FpMat& A);

// Basis of the right null space {x : Ax = 0}, rows of the result are the
// basis vectors, in reduced echelon form (deterministic).
std::vector<FpVec> kernel_basis(const FpMat& A);

// Some x with Ax = b (free variables set to 0), or nullopt if inconsistent.
std::optional<FpVec> solve_linear(const FpMat& A, const FpVec& b);

// Kronecker product; index convention (i,j) -> i * rows(B) + j on rows and
// (k,l) -> k * cols(B) + l on columns, so that vec(A X B^T) = (A (x) B) vec(X)
// with row-major vec.
FpMat kronecker(const FpMat& A, const FpMat& B);

// Encoded vectors: v in F_p^m <-> integer sum v[i] * p^i (little-endian).
uint32_t encode_vec(const FpVec& v, int p);
FpVec decode_vec(uint32_t code, int p, int m);
uint64_t pow_u64(uint64_t b, uint32_t e);

// Fixed-size key for hashing group elements; packs entries with
// ceil(log2 p) bits each, capacity 256 bits.
struct ElemKey {
    std::array<uint64_t, 4> w{};
    bool operator==(const ElemKey& o) const { return w == o.w; }
    bool operator<(const ElemKey& o) const { return w < o.w; }
};

struct ElemKeyHash {
    size_t operator()(const ElemKey& k) const {
        uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (uint64_t x : k.w) {
            x ^= x >> 33;
            x *= 0xff51afd7ed558ccdULL;
            h = (h ^ x) * 0xc4ceb9fe1a85ec53ULL;
        }
        return size_t(h);
    }
};

ElemKey mat_key(const FpMat& A);

}  // namespace af3
