#include "linlef/representation.hpp"

#include "linlef/errors.hpp"

namespace linlef {

Representation::Representation(LieAlgebra algebra_, std::size_t dim_, std::vector<Matrix> actions_)
    : algebra(std::move(algebra_)), dim(dim_), actions(std::move(actions_))
{
    if (dim == 0) throw InputError("module dimension must be >= 1");
    if (actions.size() != algebra.dim())
        throw InputError("module has " + std::to_string(actions.size()) + " action matrices, algebra dimension is " +
                         std::to_string(algebra.dim()));
    for (std::size_t i = 0; i < actions.size(); ++i)
        if (actions[i].rows() != dim || actions[i].cols() != dim)
            throw InputError("action matrix " + std::to_string(i) + " must be " + std::to_string(dim) + "x" +
                             std::to_string(dim));
}

Representation Representation::trivial(const LieAlgebra& algebra, std::size_t dim)
{
    return Representation(algebra, dim, std::vector<Matrix>(algebra.dim(), Matrix(dim, dim)));
}

Representation Representation::adjoint(const LieAlgebra& algebra)
{
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < algebra.dim(); ++i) acts.push_back(ad(algebra, unit_vector(algebra.dim(), i)));
    return Representation(algebra, algebra.dim(), std::move(acts));
}

Matrix Representation::act(const Vector& x) const
{
    if (x.size() != algebra.dim()) throw InputError("DimensionMismatch: module action argument");
    Matrix m(dim, dim);
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero()) m += actions[k] * x[k];
    return m;
}

bool Representation::is_trivial() const
{
    for (const auto& a : actions)
        if (!a.is_zero()) return false;
    return true;
}

std::string RepresentationViolation::describe() const
{
    return "NotARepresentation(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::optional<RepresentationViolation> find_representation_violation(const Representation& v)
{
    const std::size_t n = v.algebra.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix defect = v.act(v.algebra.structure(i, j)) - commutator(v.actions[i], v.actions[j]);
            if (!defect.is_zero()) return RepresentationViolation{i, j, std::move(defect)};
        }
    return std::nullopt;
}

void validate_rep(const Representation& v)
{
    if (auto bad = find_representation_violation(v)) throw InputError(bad->describe());
}

Representation direct_sum(const Representation& a, const Representation& b)
{
    if (!(a.algebra == b.algebra)) throw InputError("ModuleAlgebraMismatch: direct sum over different algebras");
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < a.actions.size(); ++i) acts.push_back(block_diagonal(a.actions[i], b.actions[i]));
    return Representation(a.algebra, a.dim + b.dim, std::move(acts));
}

Representation pullback(const LieMorphism& f, const Representation& v)
{
    if (!(f.target == v.algebra)) throw InputError("ModuleAlgebraMismatch: pullback target differs from module algebra");
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < f.source.dim(); ++i) acts.push_back(v.act(f.matrix.column(i)));
    return Representation(f.source, v.dim, std::move(acts));
}

std::string EquivarianceViolation::describe() const
{
    return "NotEquivariant(" + std::to_string(i) + ")";
}

std::optional<EquivarianceViolation> find_equivariance_violation(const Intertwiner& xi)
{
    if (!xi.f.is_endomorphism()) throw InputError("intertwiner requires an endomorphism");
    if (!(xi.f.source == xi.module.algebra))
        throw InputError("ModuleAlgebraMismatch: intertwiner map and module live on different algebras");
    const std::size_t n = xi.f.source.dim();
    if (xi.f.matrix.rows() != n || xi.f.matrix.cols() != n) throw InputError("endomorphism matrix has wrong shape");
    if (xi.matrix.rows() != xi.module.dim || xi.matrix.cols() != xi.module.dim)
        throw InputError("intertwiner matrix must be " + std::to_string(xi.module.dim) + "x" +
                         std::to_string(xi.module.dim));
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix lhs = xi.matrix * xi.module.act(xi.f.matrix.column(i));
        const Matrix rhs = xi.module.actions[i] * xi.matrix;
        Matrix defect = lhs - rhs;
        if (!defect.is_zero()) return EquivarianceViolation{i, std::move(defect)};
    }
    return std::nullopt;
}

void validate_intertwiner(const Intertwiner& xi)
{
    if (auto bad = find_equivariance_violation(xi)) throw InputError(bad->describe());
}

} // namespace linlef
