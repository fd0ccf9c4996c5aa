#pragma once

#include "linlef/lefschetz_number.hpp"

namespace linlef {

// Linear self-map of the n-torus ℝⁿ/ℤⁿ induced by an integer matrix.
class TorusMap {
public:
    // Throws InputError for non-square or non-integral matrices.
    explicit TorusMap(Matrix matrix);

    std::size_t dim() const { return matrix_.rows(); }
    const Matrix& matrix() const { return matrix_; }

private:
    Matrix matrix_;
};

struct FixedPointReport {
    bool nondegenerate = false;
    std::size_t count = 0;             // number of fixed points
    std::size_t count_by_determinant = 0;
    std::size_t count_by_enumeration = 0;
    int index_each = 0;                // sign of det(I − A)
    Rational lefschetz;                // det(I − A)
};

// Counts solutions of (A − I)x ∈ ℤⁿ, x ∈ [0,1)ⁿ by enumerating the integer
// vectors k = (A − I)x inside the box |k_i| ≤ Σ_j |(A − I)_ij|, and asserts
// the count equals |det(A − I)|. Throws InputError ("DegenerateMap") when
// det(A − I) = 0.
FixedPointReport count_fixed_points(const TorusMap& t);

struct TorusCrossCheck {
    FixedPointReport fixed_points;
    LefschetzReport ce;
    bool pass = false; // ce Lefschetz number == fixed-point Lefschetz number
};

// Compares the fixed-point count with the Lefschetz number computed on the
// abelian Lie algebra ℝⁿ with trivial coefficients.
TorusCrossCheck cross_check_with_ce(const TorusMap& t);

} // namespace linlef
