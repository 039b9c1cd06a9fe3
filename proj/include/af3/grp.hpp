#pragma once

// Matrix-group engine: order and membership via Schreier-Sims on the
// natural action on encoded vectors, element enumeration, orbits,
// coset stabilizers, p-core, subgroup conjugacy, and the GL3(2)
// subgroup census of GL4(2).

#include "af3/gf.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace af3 {

// Row-reduced canonical basis of a subspace of F_p^n.
struct Subspace {
    int p = 2;
    int ambient = 0;
    std::vector<FpVec> basis;  // reduced echelon rows

    static Subspace from_vectors(int p, int ambient, const std::vector<FpVec>& vecs);
    int dim() const { return int(basis.size()); }
    bool contains(const FpVec& v) const;
    bool contains_subspace(const Subspace& other) const;
    bool operator==(const Subspace& o) const {
        return p == o.p && ambient == o.ambient && basis == o.basis;
    }
    bool operator<(const Subspace& o) const;
};

struct Bsgs {
    std::vector<uint32_t> base;                                  // encoded base points
    std::vector<std::vector<FpMat>> level_gens;                  // gens fixing base[0..i-1]
    std::vector<std::unordered_map<uint32_t, FpMat>> transversal;  // point -> u with u*b = point
    uint64_t order = 1;
};

class MatrixGroup {
public:
    MatrixGroup() = default;
    MatrixGroup(int p, int dim, std::vector<FpMat> gens);

    int p() const { return p_; }
    int dim() const { return dim_; }
    const std::vector<FpMat>& gens() const { return gens_; }

    uint64_t order() const;          // builds BSGS on demand
    bool contains(const FpMat& g) const;
    const Bsgs& bsgs() const;

    uint32_t domain_size() const;    // p^dim

private:
    int p_ = 2;
    int dim_ = 0;
    std::vector<FpMat> gens_;
    mutable std::shared_ptr<Bsgs> bsgs_;  // lazily built, immutable afterwards
};

struct OrbitPartition {
    uint32_t domain = 0;
    std::vector<int32_t> orbit_id;       // per encoded vector
    std::vector<uint64_t> sizes;         // sorted ascending
    std::vector<uint32_t> reps;          // minimal encoded vector per orbit, by orbit id
    int count() const { return int(sizes.size()); }
};

uint64_t bsgs_build(const MatrixGroup& G);

std::vector<FpMat> enumerate_elements(const MatrixGroup& G, uint64_t bound);
std::unordered_set<ElemKey, ElemKeyHash> element_key_set(const std::vector<FpMat>& elems);

OrbitPartition orbits(const MatrixGroup& G);
std::vector<uint64_t> orbit_sizes_sorted(const MatrixGroup& G);

// Smallest invariant subspace containing the seeds, under a generator list.
Subspace spin_vectors(int p, int dim, const std::vector<FpMat>& gens,
                      const std::vector<FpVec>& seeds);

bool is_invariant(const MatrixGroup& G, const Subspace& W);

// Setwise stabilizer of the coset v+W, via orbit-stabilizer on V/W.
MatrixGroup setwise_coset_stabilizer(const MatrixGroup& G, const Subspace& W, const FpVec& v);

// True iff the stabilizer of v+W is transitive on v+W. Requires W invariant, v not in W.
bool rank3_criterion(const MatrixGroup& G, const Subspace& W, const FpVec& v);

// O_p(G) by Sylow growth + conjugate intersection over a full enumeration.
MatrixGroup p_core(const MatrixGroup& G, uint64_t bound);

// g in ambient with H^g = K, or nullopt. Ambient must be enumerable.
std::optional<FpMat> subgroup_conjugator(const MatrixGroup& ambient, const MatrixGroup& H,
                                         const MatrixGroup& K, uint64_t bound = 200000);

// Inclusion-minimal nonzero invariant subspaces.
std::vector<Subspace> minimal_invariant_subspaces(const MatrixGroup& G);

struct SubgroupClass {
    MatrixGroup rep;
    uint64_t class_size = 0;
    // invariant-subspace pattern of the representative
    int invariant_1spaces = 0;
    int invariant_hyperplanes = 0;
};

// All subgroups of `ambient` isomorphic to GL3(2) = L2(7), found completely
// via standard-generator pair search, bucketed into ambient-conjugacy classes.
std::vector<SubgroupClass> l27_subgroup_census(const MatrixGroup& ambient, uint64_t bound = 200000);

// Small generating set for an explicitly listed subgroup.
MatrixGroup group_from_element_set(int p, int dim, const std::vector<FpMat>& elems);

}  // namespace af3
