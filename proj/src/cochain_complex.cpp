#include "linlef/cochain_complex.hpp"

#include "linlef/errors.hpp"
#include "linlef/linalg.hpp"

#include <algorithm>

namespace linlef {

namespace {

Matrix build_differential(const LieAlgebra& g, const Representation& v, std::size_t p)
{
    const std::size_t n = g.dim();
    const std::size_t m = v.dim;
    const SubsetIndex source(n, p);
    const SubsetIndex target(n, p + 1);
    Matrix d(target.size() * m, source.size() * m);

    for (std::size_t row_subset = 0; row_subset < target.size(); ++row_subset) {
        const auto& s = target.subset(row_subset);
        const std::size_t row0 = row_subset * m;

        // Σ_i (−1)^i ρ(e_{s_i}) ω(s without s_i)
        for (std::size_t i = 0; i <= p; ++i) {
            std::vector<std::size_t> rest;
            for (std::size_t a = 0; a <= p; ++a)
                if (a != i) rest.push_back(s[a]);
            const std::size_t col0 = *source.index_of(rest) * m;
            const Matrix& rho = v.actions[s[i]];
            const Rational sign = (i % 2 == 0) ? 1 : -1;
            for (std::size_t l = 0; l < m; ++l)
                for (std::size_t k = 0; k < m; ++k)
                    if (!rho(l, k).is_zero()) d(row0 + l, col0 + k) += sign * rho(l, k);
        }

        // Σ_{i<j} (−1)^{i+j} ω([e_{s_i}, e_{s_j}], s without s_i, s_j)
        for (std::size_t i = 0; i <= p; ++i)
            for (std::size_t j = i + 1; j <= p; ++j) {
                const Vector& br = g.structure(s[i], s[j]);
                std::vector<std::size_t> rest;
                for (std::size_t a = 0; a <= p; ++a)
                    if (a != i && a != j) rest.push_back(s[a]);
                const bool odd_ij = ((i + j) % 2) == 1;
                for (std::size_t c = 0; c < n; ++c) {
                    if (br[c].is_zero()) continue;
                    if (std::find(rest.begin(), rest.end(), c) != rest.end()) continue;
                    // Moving e_c into sorted position costs `pos` transpositions.
                    const auto pos = static_cast<std::size_t>(
                        std::lower_bound(rest.begin(), rest.end(), c) - rest.begin());
                    std::vector<std::size_t> sorted = rest;
                    sorted.insert(sorted.begin() + static_cast<std::ptrdiff_t>(pos), c);
                    const std::size_t col0 = *source.index_of(sorted) * m;
                    Rational coef = br[c];
                    if (odd_ij != (pos % 2 == 1)) coef = -coef;
                    for (std::size_t l = 0; l < m; ++l) d(row0 + l, col0 + l) += coef;
                }
            }
    }
    return d;
}

} // namespace

CochainComplex build_complex(const LieAlgebra& algebra, const Representation& module)
{
    if (!(module.algebra == algebra))
        throw InputError("ModuleAlgebraMismatch: module is defined over a different algebra");
    const std::size_t n = algebra.dim();
    CochainComplex c{algebra, module, {}, {}};
    for (std::size_t p = 0; p <= n; ++p) c.dims.push_back(binomial(n, p) * module.dim);
    for (std::size_t p = 0; p < n; ++p) c.differentials.push_back(build_differential(algebra, module, p));

    for (std::size_t p = 0; p + 1 < n; ++p)
        if (!(c.differentials[p + 1] * c.differentials[p]).is_zero())
            throw InternalError("InternalDSquareNonzero: d_" + std::to_string(p + 1) + " ∘ d_" + std::to_string(p) +
                                " != 0");
    return c;
}

std::vector<std::size_t> CohomologyData::betti() const
{
    std::vector<std::size_t> b;
    for (const auto& d : degrees) b.push_back(d.betti);
    return b;
}

CohomologyData cohomology(const CochainComplex& complex)
{
    const std::size_t n = complex.top_degree();
    CohomologyData data;
    for (std::size_t p = 0; p <= n; ++p) {
        DegreeCohomology deg;
        const std::size_t dim = complex.dims[p];

        if (p < n) {
            deg.cocycle_basis = kernel_basis(complex.differentials[p]);
        } else {
            for (std::size_t i = 0; i < dim; ++i) deg.cocycle_basis.push_back(unit_vector(dim, i));
        }

        if (p > 0) {
            const Matrix& prev = complex.differentials[p - 1];
            for (auto col : rref(prev).pivot_columns) deg.coboundary_basis.push_back(prev.column(col));
        }

        std::vector<Vector> combined = deg.coboundary_basis;
        combined.insert(combined.end(), deg.cocycle_basis.begin(), deg.cocycle_basis.end());
        if (!combined.empty()) {
            const RrefResult r = rref(Matrix::from_columns(dim, combined));
            const std::size_t nb = deg.coboundary_basis.size();
            for (auto col : r.pivot_columns)
                if (col >= nb) deg.representative_basis.push_back(combined[col]);
        }
        deg.betti = deg.representative_basis.size();
        data.degrees.push_back(std::move(deg));
    }
    return data;
}

ChainMap induced_chain_map(const CochainComplex& complex, const LieMorphism& f, const Intertwiner& xi)
{
    if (!f.is_endomorphism() || !(f.source == complex.algebra))
        throw InputError("induced map requires an endomorphism of the complex's algebra");
    if (!(xi.module == complex.module) || !(xi.f.matrix == f.matrix))
        throw InputError("intertwiner does not match the complex's module and map");
    check_morphism(f);
    validate_intertwiner(xi);

    const std::size_t n = complex.top_degree();
    const Matrix ft = f.matrix.transpose();
    ChainMap chain;
    for (std::size_t p = 0; p <= n; ++p) chain.maps.push_back(kronecker(exterior_power(ft, p), xi.matrix));

    for (std::size_t p = 0; p < n; ++p) {
        const Matrix& d = complex.differentials[p];
        if (!(chain.maps[p + 1] * d == d * chain.maps[p]))
            throw InternalError("ChainMapViolation(" + std::to_string(p) + ")");
    }
    return chain;
}

std::vector<Matrix> induced_cohomology_map(const CochainComplex& complex, const CohomologyData& data,
                                           const ChainMap& chain)
{
    std::vector<Matrix> out;
    for (std::size_t p = 0; p <= complex.top_degree(); ++p) {
        const auto& deg = data.degrees[p];
        std::vector<Vector> basis = deg.representative_basis;
        basis.insert(basis.end(), deg.coboundary_basis.begin(), deg.coboundary_basis.end());

        Matrix h(deg.betti, deg.betti);
        for (std::size_t j = 0; j < deg.betti; ++j) {
            const Vector image = chain.maps[p] * deg.representative_basis[j];
            const auto coeffs = solve_in_span(basis, image);
            if (!coeffs)
                throw InternalError("InternalConsistencyFailure: image of a degree-" + std::to_string(p) +
                                    " cocycle is not a cocycle");
            for (std::size_t i = 0; i < deg.betti; ++i) h(i, j) = (*coeffs)[i];
        }
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<Matrix> induced_cohomology_map(const CochainComplex& complex, const LieMorphism& f,
                                           const Intertwiner& xi)
{
    return induced_cohomology_map(complex, cohomology(complex), induced_chain_map(complex, f, xi));
}

} // namespace linlef
