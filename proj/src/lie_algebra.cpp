#include "linlef/lie_algebra.hpp"

#include "linlef/errors.hpp"
#include "linlef/linalg.hpp"

#include <sstream>

namespace linlef {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> basis_labels, BracketTable brackets)
    : dim_(dim), labels_(std::move(basis_labels))
{
    if (dim_ == 0) throw InputError("Lie algebra must have dimension >= 1");
    if (labels_.size() != dim_)
        throw InputError("basis has " + std::to_string(labels_.size()) + " labels, expected " +
                         std::to_string(dim_));

    for (auto& [pair, value] : brackets) {
        const auto [i, j] = pair;
        if (i >= dim_ || j >= dim_)
            throw InputError("bracket index out of range: (" + std::to_string(i) + "," + std::to_string(j) + ")");
        if (i >= j)
            throw InputError("bracket requires left < right: (" + std::to_string(i) + "," + std::to_string(j) + ")");
        SparseVector cleaned;
        for (const auto& [k, c] : value) {
            if (k >= dim_) throw InputError("bracket result index out of range: " + std::to_string(k));
            if (!c.is_zero()) cleaned.emplace(k, c);
        }
        if (!cleaned.empty()) brackets_.emplace(pair, std::move(cleaned));
    }

    dense_.assign(dim_ * dim_, Vector(dim_));
    for (const auto& [pair, value] : brackets_) {
        const auto [i, j] = pair;
        for (const auto& [k, c] : value) {
            dense_[i * dim_ + j][k] = c;
            dense_[j * dim_ + i][k] = -c;
        }
    }
}

LieAlgebra LieAlgebra::with_default_labels(std::size_t dim, BracketTable brackets)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
    return LieAlgebra(dim, std::move(labels), std::move(brackets));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim)
{
    return with_default_labels(dim, {});
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const
{
    if (x.size() != dim_ || y.size() != dim_)
        throw InputError("DimensionMismatch: bracket arguments must have length " + std::to_string(dim_));
    Vector out(dim_);
    for (const auto& [pair, value] : brackets_) {
        const auto [i, j] = pair;
        // x_i y_j − x_j y_i
        const Rational w = x[i] * y[j] - x[j] * y[i];
        if (w.is_zero()) continue;
        for (const auto& [k, c] : value) out[k] += w * c;
    }
    return out;
}

std::string format_vector(const Vector& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

std::string JacobiViolation::describe() const
{
    return "JacobiViolation(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
           ", defect = " + format_vector(defect) + ")";
}

std::optional<JacobiViolation> find_jacobi_violation(const LieAlgebra& algebra)
{
    const std::size_t n = algebra.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vector ei = unit_vector(n, i);
                const Vector ej = unit_vector(n, j);
                const Vector ek = unit_vector(n, k);
                Vector sum = algebra.bracket(algebra.structure(i, j), ek);
                sum = sum + algebra.bracket(algebra.structure(j, k), ei);
                sum = sum + algebra.bracket(algebra.structure(k, i), ej);
                if (!is_zero(sum)) return JacobiViolation{i, j, k, std::move(sum)};
            }
    return std::nullopt;
}

void validate(const LieAlgebra& algebra)
{
    if (auto v = find_jacobi_violation(algebra)) throw InputError(v->describe());
}

Matrix ad(const LieAlgebra& algebra, const Vector& x)
{
    const std::size_t n = algebra.dim();
    if (x.size() != n) throw InputError("DimensionMismatch: ad argument");
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vector col = algebra.bracket(x, unit_vector(n, j));
        for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
    }
    return m;
}

SeriesReport series(const LieAlgebra& algebra, SeriesKind kind)
{
    const std::size_t n = algebra.dim();
    SeriesReport report{kind, {n}};

    std::vector<Vector> whole;
    for (std::size_t i = 0; i < n; ++i) whole.push_back(unit_vector(n, i));
    std::vector<Vector> current = whole;

    while (!current.empty()) {
        std::vector<Vector> spanning;
        const auto& left = kind == SeriesKind::lower_central ? whole : current;
        for (const auto& x : left)
            for (const auto& y : current) spanning.push_back(algebra.bracket(x, y));
        std::vector<Vector> next = span_basis(spanning, n);
        const bool stalled = next.size() == current.size();
        report.dims.push_back(next.size());
        // Each term is contained in the previous one, so equal dimension means
        // the series has stabilized.
        if (stalled) break;
        current = std::move(next);
    }
    return report;
}

bool is_nilpotent(const LieAlgebra& algebra)
{
    return series(algebra, SeriesKind::lower_central).reaches_zero();
}

bool is_solvable(const LieAlgebra& algebra)
{
    return series(algebra, SeriesKind::derived).reaches_zero();
}

LieMorphism LieMorphism::endomorphism(const LieAlgebra& algebra, Matrix matrix)
{
    return LieMorphism{algebra, algebra, std::move(matrix)};
}

std::string MorphismViolation::describe() const
{
    return "NotAMorphism(" + std::to_string(i) + "," + std::to_string(j) + ", defect = " + format_vector(defect) + ")";
}

std::optional<MorphismViolation> find_morphism_violation(const LieMorphism& f)
{
    const std::size_t n = f.source.dim();
    const std::size_t m = f.target.dim();
    if (f.matrix.rows() != m || f.matrix.cols() != n)
        throw InputError("morphism matrix must be " + std::to_string(m) + "x" + std::to_string(n) + ", got " +
                         std::to_string(f.matrix.rows()) + "x" + std::to_string(f.matrix.cols()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector lhs = f.matrix * f.source.structure(i, j);
            const Vector rhs = f.target.bracket(f.matrix.column(i), f.matrix.column(j));
            Vector defect = lhs - rhs;
            if (!is_zero(defect)) return MorphismViolation{i, j, std::move(defect)};
        }
    return std::nullopt;
}

void check_morphism(const LieMorphism& f)
{
    if (auto v = find_morphism_violation(f)) throw InputError(v->describe());
}

LieMorphism compose(const LieMorphism& outer, const LieMorphism& inner)
{
    if (!(inner.target == outer.source)) throw InputError("compose: algebras do not match");
    return LieMorphism{inner.source, outer.target, outer.matrix * inner.matrix};
}

LieAlgebra restrict_to_subalgebra(const LieAlgebra& algebra, const std::vector<std::size_t>& indices)
{
    std::map<std::size_t, std::size_t> position;
    for (std::size_t p = 0; p < indices.size(); ++p) {
        if (indices[p] >= algebra.dim()) throw InputError("subalgebra index out of range");
        position.emplace(indices[p], p);
    }
    if (position.size() != indices.size()) throw InputError("subalgebra indices repeat");

    LieAlgebra::BracketTable table;
    std::vector<std::string> labels;
    for (auto idx : indices) labels.push_back(algebra.labels()[idx]);
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a + 1; b < indices.size(); ++b) {
            const Vector& v = algebra.structure(indices[a], indices[b]);
            SparseVector restricted;
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (v[k].is_zero()) continue;
                const auto it = position.find(k);
                if (it == position.end())
                    throw InputError("span of the given basis vectors is not a subalgebra");
                restricted.emplace(it->second, v[k]);
            }
            if (!restricted.empty()) table.emplace(std::make_pair(a, b), std::move(restricted));
        }
    return LieAlgebra(indices.size(), std::move(labels), std::move(table));
}

} // namespace linlef
