#pragma once

#include "linlef/lefschetz_number.hpp"

#include <optional>
#include <vector>

namespace linlef {

// g = complement ⊕ nil_ideal, with the ideal nilpotent and the complement an
// abelian subalgebra. Index lists refer to the algebra's basis.
struct SplitPresentation {
    LieAlgebra algebra;
    std::vector<std::size_t> nil_ideal;
    std::vector<std::size_t> complement;
};

// Checks, in order: the index lists partition the basis, ComplementNotAbelian,
// NotAnIdeal, IdealNotNilpotent, SemisimplePartsDoNotCommute. Throws
// InputError naming the offending indices. An ideal that is stable and a
// complement that is abelian together force [g,g] ⊆ ideal.
void validate_split(const SplitPresentation& split);

struct ShadowResult {
    LieAlgebra shadow;
    // Semisimple part of ad(a)|ideal for each complement generator a, written
    // as an n×n matrix on g that vanishes on the complement.
    std::vector<Matrix> semisimple_parts;
};

// Nilshadow on the same basis: for x = a₁ + n₁, y = a₂ + n₂,
//   [x, y]_shadow = [n₁, n₂] + nil(ad a₁)(n₂) − nil(ad a₂)(n₁).
ShadowResult build_shadow(const SplitPresentation& split);

struct ShadowMapReport {
    Matrix s;                     // S = T under the identity identification
    bool shadow_morphism = false; // S preserves the shadow bracket
    std::optional<MorphismViolation> shadow_violation;
    Rational det_shadow;          // det(I − S)
    Rational det_original;        // det(I − T)
};

// Throws InputError (SplitNotPreserved) when T maps an ideal vector outside
// the ideal, and InternalError if det(I − S) ≠ det(I − T).
ShadowMapReport induced_shadow_map(const SplitPresentation& split, const LieMorphism& t);

struct ShadowLinearization {
    ShadowResult shadow;
    ShadowMapReport map;
    // Present when S is a shadow morphism: Lefschetz number of S on the
    // shadow with trivial coefficients.
    std::optional<LefschetzReport> shadow_lefschetz;
    // shadow Lefschetz number == det(I − T); false when not computed.
    bool verified = false;
};

ShadowLinearization verify_shadow_linearization(const SplitPresentation& split, const LieMorphism& t);

} // namespace linlef
