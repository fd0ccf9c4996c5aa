#pragma once

#include "linlef/cochain_complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace linlef {

// The matrix A whose det(I − A) is compared with the Lefschetz number,
// together with the algebra it is an endomorphism of. The algebra is used to
// compute reference (untwisted) traces when the two sides disagree.
struct LinearizationTarget {
    Matrix a;
    LieAlgebra algebra;
    std::string source; // "map" or "shadow"
};

struct LefschetzReport {
    std::vector<std::size_t> betti;
    std::vector<Matrix> cohomology_maps;
    std::vector<Rational> traces;         // trace of ξ∘f* on H^p
    Rational lefschetz_cohomology;        // Σ (−1)^p traces[p]
    Rational hopf_trace;                  // Σ (−1)^p tr F_p on cochains
    Rational linearization;               // det(I − A)
    std::string linearization_source;
    bool agree = false;                   // lefschetz_cohomology == linearization
    // Disagreement is mathematically possible (twisted coefficients or a
    // non-nilpotent algebra); agree == false is then a legitimate outcome.
    bool disagreement_possible = false;
    // When !agree: first degree whose trace differs from the untwisted trace
    // of A on its own algebra with trivial coefficients.
    std::optional<std::size_t> first_divergent_degree;
};

Rational linearization(const Matrix& a);

// Alternating trace over cohomology, checked against the cochain-level Hopf
// trace (a mismatch throws InternalError), compared to det(I − A).
LefschetzReport twisted_lefschetz(const LieAlgebra& algebra, const Representation& module, const LieMorphism& f,
                                  const Intertwiner& xi, const LinearizationTarget& target);
// A = f.matrix.
LefschetzReport twisted_lefschetz(const LieAlgebra& algebra, const Representation& module, const LieMorphism& f,
                                  const Intertwiner& xi);
// Trivial one-dimensional coefficients, ξ = [1].
LefschetzReport untwisted_lefschetz(const LieAlgebra& algebra, const LieMorphism& f);

struct HopfCheck {
    Rational cochain_value;
    Rational cohomology_value;
    Rational det_value;       // det(I − f)·tr(ξ)
    bool det_matches = false; // det_value == cochain_value
};

// Reports, never throws, on the det comparison; the first two values are
// required to agree (InternalError otherwise).
HopfCheck hopf_trace_identity_check(const LieMorphism& f, const Intertwiner& xi, const CochainComplex& complex);

} // namespace linlef
