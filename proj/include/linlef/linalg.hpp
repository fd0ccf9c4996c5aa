#pragma once

#include "linlef/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace linlef {

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank = 0;
};

// Gauss-Jordan elimination. Columns are scanned left to right and the first
// row (from the current one down) with a nonzero entry becomes the pivot row.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Null space basis, one vector per free column in increasing order: the free
// variable is set to 1, the other free variables to 0.
std::vector<Vector> kernel_basis(const Matrix& m);

// Throws InputError (NonSquare) for non-square input.
Rational determinant(const Matrix& m);

// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

// Unique coefficients c with Σ c_i basis[i] = target, or nullopt when the
// basis is dependent or the target lies outside its span.
std::optional<Vector> solve_in_span(const std::vector<Vector>& basis, const Vector& target);

// Basis of span(vectors) given by the rows of the rref of the stacked vectors.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t ambient_dim);

// --- exterior powers ------------------------------------------------------

// The p-subsets of {0..n-1} in lexicographic order, with index lookup.
// This ordering is the basis of Λ^p used by every module.
class SubsetIndex {
public:
    SubsetIndex(std::size_t n, std::size_t p);

    std::size_t n() const { return n_; }
    std::size_t p() const { return p_; }
    std::size_t size() const { return subsets_.size(); }
    const std::vector<std::size_t>& subset(std::size_t index) const { return subsets_[index]; }
    const std::vector<std::vector<std::size_t>>& subsets() const { return subsets_; }

    // Index of a sorted subset; nullopt if the elements do not form one.
    std::optional<std::size_t> index_of(const std::vector<std::size_t>& sorted) const;

    static std::uint64_t mask(const std::vector<std::size_t>& subset);

private:
    std::size_t n_;
    std::size_t p_;
    std::vector<std::vector<std::size_t>> subsets_;
    std::unordered_map<std::uint64_t, std::size_t> by_mask_;
};

std::size_t binomial(std::size_t n, std::size_t k);

// Λ^p m: entry (S, T) is the minor of m with rows S and columns T.
// Throws InputError (DegreeOutOfRange) unless 0 ≤ p ≤ n.
Matrix exterior_power(const Matrix& m, std::size_t p);

// --- polynomials and the Jordan-Chevalley decomposition -------------------

// Dense univariate polynomial over ℚ, coefficients from the constant term up.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rational& leading() const { return coeffs_.back(); }

    Polynomial derivative() const;
    Polynomial monic() const;
    Matrix evaluate(const Matrix& m) const;

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct PolynomialDivision {
    Polynomial quotient;
    Polynomial remainder;
};

PolynomialDivision divide(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

// det(x·I − m), monic of degree n (Faddeev-LeVerrier).
Polynomial characteristic_polynomial(const Matrix& m);

struct JordanParts {
    Matrix semisimple;
    Matrix nilpotent;
};

// Additive Jordan-Chevalley decomposition over ℚ. With q the squarefree part
// of the characteristic polynomial, the Newton iteration
// S ← S − q(S)·q'(S)⁻¹ starting from S = m converges to the semisimple part.
JordanParts jordan_chevalley(const Matrix& m);

} // namespace linlef
