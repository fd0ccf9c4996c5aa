#pragma once

#include "linlef/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace linlef {

using SparseVector = std::map<std::size_t, Rational>;

// Finite-dimensional Lie algebra over ℚ given by structure constants on a
// fixed basis e_0..e_{n-1}. Only brackets [e_i, e_j] with i < j are stored;
// antisymmetry is implied.
class LieAlgebra {
public:
    using BracketTable = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

    // Throws InputError when dim == 0, labels are the wrong length, a pair has
    // left >= right, or an index is out of range. Zero coefficients are dropped.
    LieAlgebra(std::size_t dim, std::vector<std::string> basis_labels, BracketTable brackets);

    // Labels default to e0, e1, ...
    static LieAlgebra with_default_labels(std::size_t dim, BracketTable brackets);
    static LieAlgebra abelian(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const BracketTable& brackets() const { return brackets_; }

    // [e_i, e_j] as a dense vector, for any i, j.
    const Vector& structure(std::size_t i, std::size_t j) const { return dense_[i * dim_ + j]; }

    // Throws InputError (DimensionMismatch) on wrong-length arguments.
    Vector bracket(const Vector& x, const Vector& y) const;

    // Structural equality (labels ignored).
    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b)
    {
        return a.dim_ == b.dim_ && a.brackets_ == b.brackets_;
    }

private:
    std::size_t dim_;
    std::vector<std::string> labels_;
    BracketTable brackets_;
    std::vector<Vector> dense_;
};

struct JacobiViolation {
    std::size_t i, j, k;
    Vector defect;
    std::string describe() const;
};

// First triple i < j < k whose Jacobi sum
// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] is nonzero.
std::optional<JacobiViolation> find_jacobi_violation(const LieAlgebra& algebra);
// Throws InputError carrying the violation text.
void validate(const LieAlgebra& algebra);

Matrix ad(const LieAlgebra& algebra, const Vector& x);

enum class SeriesKind { lower_central, derived };

struct SeriesReport {
    SeriesKind kind;
    // Dimensions of the successive terms, starting at dim(g). The sequence
    // ends at 0 or with the first repeated value (the series has stabilized).
    std::vector<std::size_t> dims;
    bool reaches_zero() const { return !dims.empty() && dims.back() == 0; }
};

SeriesReport series(const LieAlgebra& algebra, SeriesKind kind);
bool is_nilpotent(const LieAlgebra& algebra);
bool is_solvable(const LieAlgebra& algebra);

// Algebra homomorphism source -> target. Column j of `matrix` holds the
// target coordinates of the image of source basis vector e_j.
struct LieMorphism {
    LieAlgebra source;
    LieAlgebra target;
    Matrix matrix;

    static LieMorphism endomorphism(const LieAlgebra& algebra, Matrix matrix);
    bool is_endomorphism() const { return source == target; }
};

struct MorphismViolation {
    std::size_t i, j;
    // matrix·[e_i,e_j] − [matrix·e_i, matrix·e_j]
    Vector defect;
    std::string describe() const;
};

// Throws InputError if the matrix shape does not match the algebras.
std::optional<MorphismViolation> find_morphism_violation(const LieMorphism& f);
void check_morphism(const LieMorphism& f);

LieMorphism compose(const LieMorphism& outer, const LieMorphism& inner);

// The subalgebra spanned by a subset of basis vectors, in the order given.
// Throws InputError if the span is not closed under the bracket.
LieAlgebra restrict_to_subalgebra(const LieAlgebra& algebra, const std::vector<std::size_t>& indices);

std::string format_vector(const Vector& v);

} // namespace linlef
