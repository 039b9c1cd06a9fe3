#pragma once

// F_p[G]-module operations for a group given by an ordered generator list:
// duals, tensors, sub/quotient actions, homomorphism spaces, fixed points,
// and irreducibility testing (meataxe with an exhaustive-spin oracle).

#include "af3/grp.hpp"

namespace af3 {

// A module is the ordered list of generator actions (left action on columns).
// Generator order is significant: two modules are "aligned" when entry i of
// both corresponds to the same abstract generator.
struct FpModule {
    int p = 2;
    int dim = 0;
    std::vector<FpMat> mats;
};

FpModule module_from_group(const MatrixGroup& G);
MatrixGroup group_from_module(const FpModule& M);

FpModule trivial_module(int p, int ngens);
FpModule dual_module(const FpModule& M);                        // g -> (g^-1)^T
FpModule tensor_module(const FpModule& A, const FpModule& B);   // aligned gens

Subspace spin_module(const FpModule& M, const std::vector<FpVec>& seeds);
Subspace fixed_space(const FpModule& M);

// Action restricted to an invariant subspace, in the coordinates of its
// canonical (reduced-echelon) basis. Throws if U is not invariant.
FpModule submodule_action(const FpModule& M, const Subspace& U);
// Action on V/U in the coordinates of the non-pivot standard basis vectors.
FpModule quotient_action(const FpModule& M, const Subspace& U);

// Basis of Hom_G(M, N) = {X : N_i X = X M_i}, as dim(N) x dim(M) matrices.
std::vector<FpMat> hom_space(const FpModule& M, const FpModule& N);

// Module isomorphism between aligned modules (searches the hom space for an
// invertible element).
bool is_isomorphic(const FpModule& M, const FpModule& N);

struct MeataxeResult {
    bool irreducible = false;
    Subspace submodule;  // proper nonzero invariant subspace when reducible
};

MeataxeResult meataxe(const FpModule& M, uint32_t seed = 1);
bool is_irreducible(const FpModule& M, uint32_t seed = 1);

// Oracle: spins every nonzero vector. Only for p^dim <= 2^20.
bool is_irreducible_exhaustive(const FpModule& M);

// Composition factors (with multiplicity), by repeated meataxe splitting.
std::vector<FpModule> composition_factors(const FpModule& M, uint32_t seed = 1);

// ------------------------------------------------------------ polynomials
// Coefficients low-degree first, no trailing zeros; zero = empty vector.
using Poly = std::vector<uint8_t>;

Poly poly_mul(const Poly& a, const Poly& b, int p);
Poly poly_mod(const Poly& a, const Poly& m, int p);
Poly poly_gcd(Poly a, Poly b, int p);  // monic
Poly min_poly(const FpMat& z);         // monic minimal polynomial
FpMat poly_eval_mat(const Poly& f, const FpMat& z);

// Distinct irreducible factors, sorted, multiplicities dropped.
std::vector<Poly> poly_distinct_irreducible_factors(const Poly& f, int p, uint32_t seed = 1);

}  // namespace af3
