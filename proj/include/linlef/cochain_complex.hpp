#pragma once

#include "linlef/representation.hpp"

#include <vector>

namespace linlef {

// Chevalley-Eilenberg complex C^p = Λ^p g* ⊗ V.
//
// The basis of C^p is e^S ⊗ v_k for S running over lexicographic p-subsets
// and k over the module basis, ordered subset-major: index(S, k) = idx(S)·m + k.
// The differential is
//   (dω)(x_1..x_{p+1}) = Σ_i (−1)^{i+1} ρ(x_i) ω(..x̂_i..)
//                      + Σ_{i<j} (−1)^{i+j} ω([x_i,x_j], ..x̂_i..x̂_j..),
// so on Λ¹g* with trivial coefficients (dω)(x,y) = −ω([x,y]).
struct CochainComplex {
    LieAlgebra algebra;
    Representation module;
    std::vector<std::size_t> dims;     // dims[p] = C(n,p)·m, p = 0..n
    std::vector<Matrix> differentials; // d_p : C^p → C^{p+1}, p = 0..n−1

    std::size_t top_degree() const { return algebra.dim(); }
};

// Throws InputError (ModuleAlgebraMismatch) and InternalError when d∘d ≠ 0.
CochainComplex build_complex(const LieAlgebra& algebra, const Representation& module);

struct DegreeCohomology {
    std::vector<Vector> cocycle_basis;
    std::vector<Vector> coboundary_basis;
    std::vector<Vector> representative_basis;
    std::size_t betti = 0;
};

struct CohomologyData {
    std::vector<DegreeCohomology> degrees;
    std::vector<std::size_t> betti() const;
};

// Cocycles come from kernel_basis(d_p); coboundaries are the pivot columns of
// d_{p−1}; representatives are the cocycle-basis columns that become pivots
// when [coboundaries | cocycles] is row reduced.
CohomologyData cohomology(const CochainComplex& complex);

struct ChainMap {
    std::vector<Matrix> maps; // F_p : C^p → C^p, p = 0..n
};

// F_p = Λ^p(fᵀ) ⊗ ξ, the cochain-level ξ∘f*. Validates f and ξ first
// (InputError); a failure of F_{p+1} d_p = d_p F_p afterwards is an
// InternalError ("ChainMapViolation(p)").
ChainMap induced_chain_map(const CochainComplex& complex, const LieMorphism& f, const Intertwiner& xi);

// Per-degree matrix of the induced map on the representative bases.
std::vector<Matrix> induced_cohomology_map(const CochainComplex& complex, const CohomologyData& data,
                                           const ChainMap& chain);
std::vector<Matrix> induced_cohomology_map(const CochainComplex& complex, const LieMorphism& f,
                                           const Intertwiner& xi);

} // namespace linlef
