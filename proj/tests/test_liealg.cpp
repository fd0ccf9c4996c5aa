#include "support.hpp"

#include "linlef/errors.hpp"
#include "linlef/lie_algebra.hpp"

#include <doctest.h>

using namespace linlef;

namespace {

LieAlgebra heisenberg3()
{
    return LieAlgebra::with_default_labels(3, {{{0, 1}, {{2, Rational(1)}}}});
}

LieAlgebra sol3()
{
    return LieAlgebra::with_default_labels(3, {{{0, 1}, {{1, Rational(1)}}}, {{0, 2}, {{2, Rational(-1)}}}});
}

// Structure tensor c[i][j][k] filled straight from the bracket table.
using Tensor = std::vector<std::vector<std::vector<Rational>>>;

Tensor structure_tensor(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    Tensor c(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
    for (const auto& [pair, vec] : g.brackets())
        for (const auto& [k, v] : vec) {
            c[pair.first][pair.second][k] += v;
            c[pair.second][pair.first][k] -= v;
        }
    return c;
}

// Σ_l c_ij^l c_lk^m + c_jk^l c_li^m + c_ki^l c_lj^m for every (i,j,k,m).
bool tensor_satisfies_jacobi(const Tensor& c)
{
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    Rational s;
                    for (std::size_t l = 0; l < n; ++l)
                        s += c[i][j][l] * c[l][k][m] + c[j][k][l] * c[l][i][m] + c[k][i][l] * c[l][j][m];
                    if (!s.is_zero()) return false;
                }
    return true;
}

} // namespace

TEST_SUITE("lie algebra construction") {

TEST_CASE("bad inputs")
{
    CHECK_THROWS_AS(LieAlgebra::with_default_labels(0, {}), InputError);
    CHECK_THROWS_AS(LieAlgebra(2, {"a"}, {}), InputError);
    CHECK_THROWS_AS(LieAlgebra::with_default_labels(2, {{{1, 0}, {{0, Rational(1)}}}}), InputError);
    CHECK_THROWS_AS(LieAlgebra::with_default_labels(2, {{{0, 0}, {{0, Rational(1)}}}}), InputError);
    CHECK_THROWS_AS(LieAlgebra::with_default_labels(2, {{{0, 2}, {{0, Rational(1)}}}}), InputError);
    CHECK_THROWS_AS(LieAlgebra::with_default_labels(2, {{{0, 1}, {{5, Rational(1)}}}}), InputError);
}

TEST_CASE("zero coefficients are dropped")
{
    const auto g = LieAlgebra::with_default_labels(2, {{{0, 1}, {{0, Rational(0)}}}});
    CHECK(g == LieAlgebra::abelian(2));
}

TEST_CASE("bracket on vectors")
{
    const auto h = heisenberg3();
    CHECK(h.bracket(Vector{1, 0, 0}, Vector{0, 1, 0}) == Vector{0, 0, 1});
    CHECK(h.bracket(Vector{0, 1, 0}, Vector{1, 0, 0}) == Vector{0, 0, -1});
    CHECK(h.bracket(Vector{2, 1, 5}, Vector{3, -1, 7}) == Vector{0, 0, -5});
    CHECK_THROWS_AS(h.bracket(Vector{1, 0}, Vector{0, 1, 0}), InputError);
}

TEST_CASE("antisymmetry on random pairs")
{
    std::mt19937_64 rng(17);
    const auto g = sol3();
    for (int i = 0; i < 100; ++i) {
        Vector x(3), y(3);
        for (auto& v : x) v = testing::small_rational(rng);
        for (auto& v : y) v = testing::small_rational(rng);
        CHECK(g.bracket(x, y) == Rational(-1) * g.bracket(y, x));
        CHECK(is_zero(g.bracket(x, x)));
    }
}

}

TEST_SUITE("jacobi") {

TEST_CASE("valid algebras")
{
    CHECK_FALSE(find_jacobi_violation(heisenberg3()));
    CHECK_FALSE(find_jacobi_violation(sol3()));
    CHECK_FALSE(find_jacobi_violation(LieAlgebra::abelian(4)));
    CHECK_NOTHROW(validate(heisenberg3()));
}

TEST_CASE("bad3 violation is reported with its defect")
{
    // [e0,e1] = e2, [e0,e2] = e0.
    // Jacobi(0,1,2) = [[e0,e1],e2] + [[e1,e2],e0] + [[e2,e0],e1]
    //               = [e2,e2] + 0 + [-e0,e1] = -e2.
    const auto bad =
        LieAlgebra::with_default_labels(3, {{{0, 1}, {{2, Rational(1)}}}, {{0, 2}, {{0, Rational(1)}}}});
    const auto v = find_jacobi_violation(bad);
    REQUIRE(v);
    CHECK(v->i == 0);
    CHECK(v->j == 1);
    CHECK(v->k == 2);
    CHECK(v->defect == Vector{0, 0, -1});
    CHECK(v->describe().find("JacobiViolation(0,1,2") != std::string::npos);
    CHECK_THROWS_AS(validate(bad), InputError);
}

TEST_CASE("perturbations of heisenberg3 agree with the structure-tensor oracle")
{
    std::mt19937_64 rng(23);
    std::size_t violations = 0;
    for (int trial = 0; trial < 200; ++trial) {
        LieAlgebra::BracketTable table{{{0, 1}, {{2, Rational(1)}}}};
        const std::size_t extra = 1 + rng() % 2;
        for (std::size_t e = 0; e < extra; ++e) {
            const std::size_t i = rng() % 3;
            std::size_t j = rng() % 3;
            if (i == j) j = (j + 1) % 3;
            const auto key = std::make_pair(std::min(i, j), std::max(i, j));
            table[key][rng() % 3] += testing::small_rational(rng, 2, 1);
        }
        const auto g = LieAlgebra::with_default_labels(3, table);
        const bool library_ok = !find_jacobi_violation(g).has_value();
        CHECK(library_ok == tensor_satisfies_jacobi(structure_tensor(g)));
        if (!library_ok) ++violations;
    }
    CHECK(violations > 0);
    CHECK(violations < 200);
}

}

TEST_SUITE("series") {

TEST_CASE("heisenberg3 is nilpotent")
{
    CHECK(series(heisenberg3(), SeriesKind::lower_central).dims == std::vector<std::size_t>{3, 1, 0});
    CHECK(series(heisenberg3(), SeriesKind::derived).dims == std::vector<std::size_t>{3, 1, 0});
    CHECK(is_nilpotent(heisenberg3()));
}

TEST_CASE("sol3 is solvable, not nilpotent")
{
    CHECK(series(sol3(), SeriesKind::lower_central).dims == std::vector<std::size_t>{3, 2, 2});
    CHECK(series(sol3(), SeriesKind::derived).dims == std::vector<std::size_t>{3, 2, 0});
    CHECK_FALSE(is_nilpotent(sol3()));
    CHECK(is_solvable(sol3()));
}

TEST_CASE("abelian")
{
    CHECK(series(LieAlgebra::abelian(3), SeriesKind::lower_central).dims == std::vector<std::size_t>{3, 0});
}

TEST_CASE("sl2 is neither")
{
    // [h,e] = 2e, [h,f] = -2f, [e,f] = h with basis (h, e, f).
    const auto sl2 = LieAlgebra::with_default_labels(
        3, {{{0, 1}, {{1, Rational(2)}}}, {{0, 2}, {{2, Rational(-2)}}}, {{1, 2}, {{0, Rational(1)}}}});
    CHECK_FALSE(find_jacobi_violation(sl2));
    CHECK_FALSE(is_solvable(sl2));
    CHECK_FALSE(is_nilpotent(sl2));
    CHECK(series(sl2, SeriesKind::derived).dims == std::vector<std::size_t>{3, 3});
}

}

TEST_SUITE("morphisms") {

TEST_CASE("ad is the bracket")
{
    const auto h = heisenberg3();
    const Matrix a = ad(h, Vector{1, 0, 0});
    CHECK(a * Vector{0, 1, 0} == Vector{0, 0, 1});
    CHECK(a * Vector{1, 0, 0} == Vector{0, 0, 0});
}

TEST_CASE("graded scaling and shear are morphisms, a bad diagonal is not")
{
    const auto h = heisenberg3();
    CHECK_NOTHROW(check_morphism(LieMorphism::endomorphism(h, Matrix::diagonal(Vector{2, 3, 6}))));
    CHECK_NOTHROW(check_morphism(LieMorphism::endomorphism(h, Matrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})));
    const auto bad = LieMorphism::endomorphism(h, Matrix::diagonal(Vector{2, 3, 5}));
    const auto v = find_morphism_violation(bad);
    REQUIRE(v);
    CHECK(v->i == 0);
    CHECK(v->j == 1);
    CHECK(v->defect == Vector{0, 0, -1}); // 5 e2 − 6 e2
    CHECK_THROWS_AS(check_morphism(bad), InputError);
}

TEST_CASE("shape mismatch")
{
    const auto h = heisenberg3();
    CHECK_THROWS_AS(find_morphism_violation(LieMorphism{h, h, Matrix::identity(2)}), InputError);
}

TEST_CASE("composition of morphisms is a morphism")
{
    const auto h = heisenberg3();
    const auto f = LieMorphism::endomorphism(h, Matrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto g = LieMorphism::endomorphism(h, Matrix::diagonal(Vector{2, 3, 6}));
    const auto fg = compose(f, g);
    CHECK(fg.matrix == f.matrix * g.matrix);
    CHECK_FALSE(find_morphism_violation(fg));
}

TEST_CASE("subalgebras")
{
    const auto s = sol3();
    const auto ideal = restrict_to_subalgebra(s, {1, 2});
    CHECK(ideal == LieAlgebra::abelian(2));
    CHECK_THROWS_AS(restrict_to_subalgebra(heisenberg3(), {0, 1}), InputError);
}

}
