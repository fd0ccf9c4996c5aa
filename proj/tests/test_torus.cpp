#include "support.hpp"

#include "linlef/errors.hpp"
#include "linlef/torus.hpp"

#include <doctest.h>

#include <cmath>

using namespace linlef;

namespace {

// Fixed points have coordinates in (1/d)ℤ with d = |det(A − I)|: count the
// y ∈ {0..d−1}ⁿ with (A − I)y ≡ 0 mod d.
std::size_t grid_count(const Matrix& a, long d)
{
    const std::size_t n = a.rows();
    std::vector<std::vector<long>> b(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            b[i][j] = a(i, j).numerator().get_si() - (i == j ? 1 : 0);
    std::vector<long> y(n, 0);
    std::size_t count = 0;
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            long s = 0;
            for (std::size_t j = 0; j < n; ++j) s += b[i][j] * y[j];
            ok = s % d == 0;
        }
        if (ok) ++count;
        std::size_t k = 0;
        while (k < n && ++y[k] == d) y[k++] = 0;
        if (k == n) break;
    }
    return count;
}

} // namespace

TEST_SUITE("torus") {

TEST_CASE("cat map")
{
    // det(I − A) = (1−2)(1−1) − 1 = −1.
    const auto r = count_fixed_points(TorusMap(Matrix{{2, 1}, {1, 1}}));
    CHECK(r.nondegenerate);
    CHECK(r.count == 1);
    CHECK(r.index_each == -1);
    CHECK(r.lefschetz == Rational(-1));
}

TEST_CASE("rotation by a quarter turn")
{
    // Fixed points 0 and (1/2, 1/2).
    const auto r = count_fixed_points(TorusMap(Matrix{{0, -1}, {1, 0}}));
    CHECK(r.count == 2);
    CHECK(r.index_each == 1);
    CHECK(r.lefschetz == Rational(2));
}

TEST_CASE("bad inputs")
{
    CHECK_THROWS_AS(TorusMap(Matrix{{Rational(1, 2), 0}, {0, 1}}), InputError);
    CHECK_THROWS_AS(TorusMap(Matrix(2, 3)), InputError);
    CHECK_THROWS_AS(count_fixed_points(TorusMap(Matrix::identity(2))), InputError);
    CHECK_THROWS_AS(count_fixed_points(TorusMap(Matrix{{1, 5}, {0, 3}})), InputError);
}

TEST_CASE("random maps against the grid oracle and the CE complex")
{
    std::mt19937_64 rng(89);
    int done = 0;
    while (done < 100) {
        const std::size_t n = 2 + rng() % 2;
        const Matrix a = testing::random_integer_matrix(rng, n, -3, 3);
        const Rational d = testing::leibniz_determinant(Matrix::identity(n) - a);
        if (d.is_zero()) continue;
        ++done;
        const long absd = d.abs().numerator().get_si();
        const auto r = count_fixed_points(TorusMap(a));
        CHECK(r.count == static_cast<std::size_t>(absd));
        CHECK(r.count_by_enumeration == r.count_by_determinant);
        CHECK(r.index_each == d.sign());
        CHECK(r.lefschetz == d);
        if (std::pow(static_cast<double>(absd), static_cast<double>(n)) <= 2e6) CHECK(grid_count(a, absd) == r.count);
        const auto x = cross_check_with_ce(TorusMap(a));
        CHECK(x.pass);
        CHECK(x.ce.lefschetz_cohomology == d);
        CHECK(count_fixed_points(TorusMap(a.transpose())).count == r.count);
    }
}

}
