#include "support.hpp"

#include "linlef/errors.hpp"
#include "linlef/representation.hpp"

#include <doctest.h>

using namespace linlef;

namespace {

const CatalogEntry& entry(const std::string& name) { return Catalog::builtin().get(name); }

} // namespace

TEST_SUITE("representations") {

TEST_CASE("trivial and adjoint modules are valid")
{
    for (const auto& name : Catalog::builtin().names()) {
        const auto& g = entry(name).algebra;
        CHECK_NOTHROW(validate_rep(Representation::trivial(g, 2)));
        CHECK_NOTHROW(validate_rep(Representation::adjoint(g)));
        CHECK(Representation::trivial(g).is_trivial());
    }
}

TEST_CASE("shape errors")
{
    const auto& g = entry("heisenberg3").algebra;
    CHECK_THROWS_AS(Representation(g, 0, {}), InputError);
    CHECK_THROWS_AS(Representation(g, 2, {Matrix::identity(2)}), InputError);
    CHECK_THROWS_AS(Representation(g, 2, {Matrix::identity(2), Matrix::identity(2), Matrix::identity(3)}),
                    InputError);
}

TEST_CASE("a non-representation is caught")
{
    // On heisenberg3, ρ(e0) and ρ(e1) must commute with each other up to ρ(e2).
    const auto& g = entry("heisenberg3").algebra;
    const Representation bad(g, 2, {Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}, Matrix::zero(2, 2)});
    const auto v = find_representation_violation(bad);
    REQUIRE(v);
    CHECK(v->i == 0);
    CHECK(v->j == 1);
    CHECK(v->describe().find("NotARepresentation(0,1)") != std::string::npos);
    CHECK_THROWS_AS(validate_rep(bad), InputError);
}

TEST_CASE("random modules validate")
{
    std::mt19937_64 rng(31);
    for (const auto& name : Catalog::builtin().names())
        for (int i = 0; i < 10; ++i) CHECK_NOTHROW(validate_rep(testing::random_module(rng, entry(name))));
}

TEST_CASE("direct sum is block diagonal")
{
    const auto& g = entry("heisenberg3").algebra;
    const auto s = direct_sum(Representation::adjoint(g), Representation::trivial(g));
    CHECK(s.dim == 4);
    CHECK(s.actions[0] == block_diagonal(ad(g, unit_vector(3, 0)), Matrix::zero(1, 1)));
    CHECK_NOTHROW(validate_rep(s));
}

TEST_CASE("pullback identities")
{
    std::mt19937_64 rng(37);
    for (const auto& name : testing::nilpotent_catalog_names()) {
        const auto& e = entry(name);
        const auto v = testing::random_module(rng, e);
        const auto id = LieMorphism::endomorphism(e.algebra, Matrix::identity(e.algebra.dim()));
        CHECK(pullback(id, v) == v);
        const auto f = random_graded_endomorphism(e, rng());
        const auto g = random_graded_endomorphism(e, rng());
        // (f∘g)*V = g*(f*V)
        CHECK(pullback(compose(f, g), v) == pullback(g, pullback(f, v)));
        CHECK_NOTHROW(validate_rep(pullback(f, v)));
    }
}

TEST_CASE("pullback along a morphism into another algebra is refused")
{
    const auto& h = entry("heisenberg3").algebra;
    const auto f = LieMorphism::endomorphism(LieAlgebra::abelian(3), Matrix::identity(3));
    CHECK_THROWS_AS(pullback(f, Representation::adjoint(h)), InputError);
}

}

TEST_SUITE("intertwiners") {

TEST_CASE("adjoint module with f inverse is equivariant")
{
    const auto& g = entry("heisenberg3").algebra;
    const Matrix f = Matrix::diagonal(Vector{2, 3, 6});
    const auto fm = LieMorphism::endomorphism(g, f);
    const auto adj = Representation::adjoint(g);
    CHECK_FALSE(find_equivariance_violation({fm, adj, testing::inverse_by_adjugate(f)}));
    CHECK_FALSE(find_equivariance_violation({fm, adj, testing::inverse_by_adjugate(f) * Rational(5)}));
}

TEST_CASE("adjoint module with f itself is not")
{
    const auto& g = entry("heisenberg3").algebra;
    const auto fm = LieMorphism::endomorphism(g, Matrix::diagonal(Vector{2, 3, 6}));
    const auto v = find_equivariance_violation({fm, Representation::adjoint(g), fm.matrix});
    REQUIRE(v);
    CHECK(v->i == 0);
    CHECK(v->describe().find("NotEquivariant(0)") != std::string::npos);
}

TEST_CASE("any scalar intertwines a trivial module")
{
    const auto& g = entry("filiform4").algebra;
    const auto fm = LieMorphism::endomorphism(g, Matrix::diagonal(Vector{2, 3, 6, 12}));
    CHECK_FALSE(find_equivariance_violation({fm, Representation::trivial(g, 2), Matrix{{1, 2}, {3, 4}}}));
}

TEST_CASE("shape mismatch")
{
    const auto& g = entry("heisenberg3").algebra;
    const auto fm = LieMorphism::endomorphism(g, Matrix::identity(3));
    CHECK_THROWS_AS(find_equivariance_violation({fm, Representation::adjoint(g), Matrix::identity(2)}), InputError);
}

}
