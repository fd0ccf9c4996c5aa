#include "linlef/torus.hpp"

#include "linlef/errors.hpp"
#include "linlef/linalg.hpp"

namespace linlef {

namespace {

constexpr std::size_t kMaxCandidates = 50'000'000;

} // namespace

TorusMap::TorusMap(Matrix matrix) : matrix_(std::move(matrix))
{
    if (!matrix_.is_square() || matrix_.rows() == 0) throw InputError("torus map must be a nonempty square matrix");
    for (const auto& x : matrix_.entries())
        if (!x.is_integer()) throw InputError("torus map entries must be integers, got " + x.str());
}

FixedPointReport count_fixed_points(const TorusMap& t)
{
    const std::size_t n = t.dim();
    const Matrix shifted = t.matrix() - Matrix::identity(n);
    const Rational det = determinant(shifted);
    if (det.is_zero())
        throw InputError("DegenerateMap: det(A - I) = 0, the fixed-point set is positive-dimensional; "
                         "use the lefschetz command for the Lefschetz number");

    FixedPointReport r;
    r.nondegenerate = true;
    r.lefschetz = determinant(Matrix::identity(n) - t.matrix());
    r.index_each = r.lefschetz.sign();
    r.count_by_determinant = det.abs().numerator().get_ui();

    std::vector<long> bound(n);
    std::size_t candidates = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Rational s;
        for (std::size_t j = 0; j < n; ++j) s += shifted(i, j).abs();
        bound[i] = s.numerator().get_si();
        candidates *= static_cast<std::size_t>(2 * bound[i] + 1);
        if (candidates > kMaxCandidates) throw InputError("torus map too large for fixed-point enumeration");
    }

    const Matrix inv = *inverse(shifted);
    std::vector<long> k(n);
    for (std::size_t i = 0; i < n; ++i) k[i] = -bound[i];
    const Rational one(1);
    while (true) {
        Vector kv(n);
        for (std::size_t i = 0; i < n; ++i) kv[i] = Rational(k[i]);
        const Vector x = inv * kv;
        bool inside = true;
        for (const auto& xi : x)
            if (xi.sign() < 0 || xi >= one) {
                inside = false;
                break;
            }
        if (inside) ++r.count_by_enumeration;

        std::size_t i = 0;
        while (i < n && k[i] == bound[i]) {
            k[i] = -bound[i];
            ++i;
        }
        if (i == n) break;
        ++k[i];
    }

    if (r.count_by_enumeration != r.count_by_determinant)
        throw InternalError("fixed-point enumeration found " + std::to_string(r.count_by_enumeration) +
                            " points, |det(A - I)| = " + std::to_string(r.count_by_determinant));
    r.count = r.count_by_enumeration;
    return r;
}

TorusCrossCheck cross_check_with_ce(const TorusMap& t)
{
    TorusCrossCheck out;
    out.fixed_points = count_fixed_points(t);
    const LieAlgebra torus_algebra = LieAlgebra::abelian(t.dim());
    out.ce = untwisted_lefschetz(torus_algebra, LieMorphism::endomorphism(torus_algebra, t.matrix()));
    out.pass = out.ce.lefschetz_cohomology == out.fixed_points.lefschetz &&
               Rational(static_cast<long>(out.fixed_points.count)) * Rational(out.fixed_points.index_each) ==
                   out.fixed_points.lefschetz;
    return out;
}

} // namespace linlef
