#include "linlef/nilshadow.hpp"

#include "linlef/errors.hpp"
#include "linlef/linalg.hpp"

#include <set>

namespace linlef {

namespace {

std::string pair_text(std::size_t a, std::size_t b)
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// ad(a) restricted to the ideal, in ideal coordinates.
Matrix restricted_ad(const SplitPresentation& split, std::size_t a)
{
    const auto& ideal = split.nil_ideal;
    Matrix m(ideal.size(), ideal.size());
    for (std::size_t c = 0; c < ideal.size(); ++c) {
        const Vector& col = split.algebra.structure(a, ideal[c]);
        for (std::size_t r = 0; r < ideal.size(); ++r) m(r, c) = col[ideal[r]];
    }
    return m;
}

Matrix embed(const SplitPresentation& split, const Matrix& on_ideal)
{
    const std::size_t n = split.algebra.dim();
    const auto& ideal = split.nil_ideal;
    Matrix m(n, n);
    for (std::size_t r = 0; r < ideal.size(); ++r)
        for (std::size_t c = 0; c < ideal.size(); ++c) m(ideal[r], ideal[c]) = on_ideal(r, c);
    return m;
}

std::vector<Matrix> semisimple_parts(const SplitPresentation& split)
{
    std::vector<Matrix> parts;
    for (auto a : split.complement) parts.push_back(embed(split, jordan_chevalley(restricted_ad(split, a)).semisimple));
    return parts;
}

} // namespace

void validate_split(const SplitPresentation& split)
{
    const LieAlgebra& g = split.algebra;
    const std::size_t n = g.dim();

    std::set<std::size_t> in_ideal(split.nil_ideal.begin(), split.nil_ideal.end());
    std::set<std::size_t> seen;
    for (auto i : split.nil_ideal)
        if (i >= n || !seen.insert(i).second) throw InputError("split: bad or repeated ideal index " + std::to_string(i));
    for (auto i : split.complement)
        if (i >= n || !seen.insert(i).second)
            throw InputError("split: bad or repeated complement index " + std::to_string(i));
    if (seen.size() != n) throw InputError("split: ideal and complement must partition the basis");

    for (std::size_t x = 0; x < split.complement.size(); ++x)
        for (std::size_t y = x + 1; y < split.complement.size(); ++y) {
            const auto a = split.complement[x];
            const auto b = split.complement[y];
            if (!is_zero(g.structure(a, b))) throw InputError("ComplementNotAbelian" + pair_text(a, b));
        }

    for (std::size_t i = 0; i < n; ++i)
        for (auto j : split.nil_ideal) {
            const Vector& v = g.structure(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!v[k].is_zero() && !in_ideal.count(k)) throw InputError("NotAnIdeal" + pair_text(i, j));
        }

    if (!split.nil_ideal.empty() && !is_nilpotent(restrict_to_subalgebra(g, split.nil_ideal)))
        throw InputError("IdealNotNilpotent");

    const auto parts = semisimple_parts(split);
    for (std::size_t x = 0; x < parts.size(); ++x)
        for (std::size_t y = x + 1; y < parts.size(); ++y)
            if (!commutator(parts[x], parts[y]).is_zero())
                throw InputError("SemisimplePartsDoNotCommute" + pair_text(split.complement[x], split.complement[y]));
}

ShadowResult build_shadow(const SplitPresentation& split)
{
    validate(split.algebra);
    validate_split(split);

    const LieAlgebra& g = split.algebra;
    const std::size_t n = g.dim();
    ShadowResult result{g, semisimple_parts(split)};

    // s(e_i): the semisimple operator attached to a basis vector (zero on the ideal).
    std::vector<const Matrix*> semisimple_of(n, nullptr);
    for (std::size_t x = 0; x < split.complement.size(); ++x) semisimple_of[split.complement[x]] = &result.semisimple_parts[x];

    LieAlgebra::BracketTable table;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector v = g.structure(i, j);
            if (semisimple_of[i]) v = v - semisimple_of[i]->column(j);
            if (semisimple_of[j]) v = v + semisimple_of[j]->column(i);
            SparseVector sparse;
            for (std::size_t k = 0; k < n; ++k)
                if (!v[k].is_zero()) sparse.emplace(k, v[k]);
            if (!sparse.empty()) table.emplace(std::make_pair(i, j), std::move(sparse));
        }
    result.shadow = LieAlgebra(n, g.labels(), std::move(table));

    if (auto bad = find_jacobi_violation(result.shadow))
        throw InternalError("nilshadow fails the Jacobi identity: " + bad->describe());
    if (!is_nilpotent(result.shadow)) throw InternalError("nilshadow is not nilpotent");
    return result;
}

ShadowMapReport induced_shadow_map(const SplitPresentation& split, const LieMorphism& t)
{
    if (!t.is_endomorphism() || !(t.source == split.algebra))
        throw InputError("shadow map requires an endomorphism of the split algebra");
    check_morphism(t);

    std::set<std::size_t> in_ideal(split.nil_ideal.begin(), split.nil_ideal.end());
    for (auto j : split.nil_ideal)
        for (std::size_t k = 0; k < t.matrix.rows(); ++k)
            if (!t.matrix(k, j).is_zero() && !in_ideal.count(k))
                throw InputError("SplitNotPreserved(" + std::to_string(j) + ")");

    const ShadowResult shadow = build_shadow(split);
    ShadowMapReport r;
    r.s = t.matrix;
    r.shadow_violation = find_morphism_violation(LieMorphism::endomorphism(shadow.shadow, r.s));
    r.shadow_morphism = !r.shadow_violation.has_value();
    r.det_shadow = linearization(r.s);
    r.det_original = linearization(t.matrix);
    if (r.det_shadow != r.det_original)
        throw InternalError("det(I - S) = " + r.det_shadow.str() + " differs from det(I - T) = " + r.det_original.str());
    return r;
}

ShadowLinearization verify_shadow_linearization(const SplitPresentation& split, const LieMorphism& t)
{
    ShadowLinearization out{build_shadow(split), induced_shadow_map(split, t), std::nullopt, false};
    if (out.map.shadow_morphism) {
        const auto s = LieMorphism::endomorphism(out.shadow.shadow, out.map.s);
        out.shadow_lefschetz = untwisted_lefschetz(out.shadow.shadow, s);
        out.verified = out.shadow_lefschetz->lefschetz_cohomology == out.map.det_original;
    }
    return out;
}

} // namespace linlef
