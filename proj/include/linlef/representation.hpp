#pragma once

#include "linlef/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace linlef {

// Finite-dimensional module over a Lie algebra. actions[i] = ρ(e_i) acts on
// column vectors from the left.
struct Representation {
    LieAlgebra algebra;
    std::size_t dim = 0;
    std::vector<Matrix> actions;

    // Throws InputError on dim == 0 or shape mismatches; compatibility with
    // the bracket is checked separately by validate_rep.
    Representation(LieAlgebra algebra, std::size_t dim, std::vector<Matrix> actions);

    static Representation trivial(const LieAlgebra& algebra, std::size_t dim = 1);
    static Representation adjoint(const LieAlgebra& algebra);

    // ρ(x) for an arbitrary algebra element.
    Matrix act(const Vector& x) const;
    bool is_trivial() const;

    friend bool operator==(const Representation&, const Representation&) = default;
};

struct RepresentationViolation {
    std::size_t i, j;
    // ρ([e_i,e_j]) − [ρ(e_i), ρ(e_j)]
    Matrix defect;
    std::string describe() const;
};

std::optional<RepresentationViolation> find_representation_violation(const Representation& v);
void validate_rep(const Representation& v);

Representation direct_sum(const Representation& a, const Representation& b);

// f*V: the module V with e_i acting through f(e_i).
Representation pullback(const LieMorphism& f, const Representation& v);

// ξ: f*V → V for an endomorphism f, i.e. matrix·ρ(f e_i) = ρ(e_i)·matrix.
struct Intertwiner {
    LieMorphism f;
    Representation module;
    Matrix matrix;
};

struct EquivarianceViolation {
    std::size_t i;
    Matrix defect;
    std::string describe() const;
};

// Throws InputError on shape mismatches or when f is not an endomorphism of
// the module's algebra.
std::optional<EquivarianceViolation> find_equivariance_violation(const Intertwiner& xi);
void validate_intertwiner(const Intertwiner& xi);

} // namespace linlef
