#pragma once

// Random generators and independent oracles shared by the test binaries.
// The determinant and inverse oracles avoid the elimination code under test.

#include "linlef/catalog.hpp"
#include "linlef/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace linlef::testing {

inline Rational small_rational(std::mt19937_64& rng, long max_num = 3, long max_den = 2)
{
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long max_num = 3,
                            long max_den = 2)
{
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = small_rational(rng, max_num, max_den);
    return m;
}

inline Matrix random_integer_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi)
{
    std::uniform_int_distribution<long> d(lo, hi);
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(d(rng));
    return m;
}

// Leibniz formula: Σ_σ sgn(σ) Π m(i, σ(i)).
inline Rational leibniz_determinant(const Matrix& m)
{
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational term(inversions % 2 == 0 ? 1 : -1);
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Unit upper times unit lower triangular: always invertible (det 1).
inline Matrix random_unimodular(std::mt19937_64& rng, std::size_t n, long max_num = 2)
{
    Matrix u = Matrix::identity(n);
    Matrix l = Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) {
            u(r, c) = small_rational(rng, max_num, 1);
            l(c, r) = small_rational(rng, max_num, 1);
        }
    return u * l;
}

// Adjugate formula with Leibniz cofactors.
inline Matrix inverse_by_adjugate(const Matrix& m)
{
    const std::size_t n = m.rows();
    const Rational det = leibniz_determinant(m);
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            const Rational cof = (n == 1 ? Rational(1) : leibniz_determinant(minor));
            inv(i, j) = ((i + j) % 2 == 0 ? cof : -cof) / det;
        }
    return inv;
}

// Minimal polynomial by Krylov search over matrix powers: the first power
// S^k that is a combination of I..S^{k-1}. Uses only matrix products and a
// linear solve on flattened matrices.
inline Polynomial minimal_polynomial(const Matrix& s)
{
    const std::size_t n = s.rows();
    std::vector<Vector> powers;
    Matrix p = Matrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        Vector flat(p.entries().begin(), p.entries().end());
        if (auto c = solve_in_span(powers, flat)) {
            std::vector<Rational> coeffs;
            for (const auto& x : *c) coeffs.push_back(-x);
            coeffs.push_back(1);
            return Polynomial(coeffs);
        }
        powers.push_back(flat);
        p = p * s;
    }
    throw std::logic_error("no minimal polynomial found");
}

inline std::vector<std::string> nilpotent_catalog_names()
{
    return {"abelian_1", "abelian_2", "abelian_3", "abelian_4", "heisenberg3", "heisenberg5", "filiform4"};
}

// A validated module over `g`, drawn from a few families: trivial, adjoint,
// adjoint ⊕ trivial, each optionally conjugated by a random invertible matrix
// and pulled back along a graded scaling; abelian algebras additionally get
// commuting polynomial actions.
inline Representation random_module(std::mt19937_64& rng, const CatalogEntry& entry)
{
    const LieAlgebra& g = entry.algebra;
    std::uniform_int_distribution<int> family(0, g.brackets().empty() ? 4 : 3);
    Representation v = Representation::trivial(g);
    switch (family(rng)) {
    case 0: v = Representation::trivial(g, 2); break;
    case 1: v = Representation::adjoint(g); break;
    case 2: v = direct_sum(Representation::adjoint(g), Representation::trivial(g)); break;
    case 3: v = direct_sum(Representation::trivial(g), Representation::adjoint(g)); break;
    default: {
        // Commuting actions p_i(M) for an abelian algebra.
        const std::size_t m = 2 + rng() % 2;
        const Matrix base = random_matrix(rng, m, m, 2, 1);
        std::vector<Matrix> acts;
        for (std::size_t i = 0; i < g.dim(); ++i) {
            Matrix a = Matrix::identity(m) * small_rational(rng) + base * small_rational(rng) +
                       base * base * small_rational(rng);
            acts.push_back(std::move(a));
        }
        v = Representation(g, m, std::move(acts));
    }
    }
    if (rng() % 2) {
        const Matrix p = random_unimodular(rng, v.dim);
        const Matrix pinv = inverse_by_adjugate(p);
        std::vector<Matrix> acts;
        for (const auto& a : v.actions) acts.push_back(p * a * pinv);
        v = Representation(g, v.dim, std::move(acts));
    }
    if (entry.grading && rng() % 2) v = pullback(random_graded_endomorphism(entry, rng()), v);
    return v;
}

// A module together with an intertwiner for f. Families: trivial modules
// (any ξ), adjoint (c·f⁻¹), adjoint ⊕ trivial. Each is optionally
// conjugated by a unimodular P (ξ becomes PξP⁻¹) and, when f commutes with a
// graded scaling g, pulled back along g (ξ unchanged).
struct TwistedModule {
    Representation module;
    Matrix xi;
};

inline TwistedModule random_twisted_module(std::mt19937_64& rng, const CatalogEntry& entry, const LieMorphism& f)
{
    const LieAlgebra& g = entry.algebra;
    const bool invertible = leibniz_determinant(f.matrix) != Rational(0);
    std::uniform_int_distribution<int> family(0, invertible ? 2 : 0);
    Rational c = small_rational(rng);
    if (c.is_zero()) c = 1;
    TwistedModule t{Representation::trivial(g), Matrix::identity(1)};
    switch (family(rng)) {
    case 0: {
        const std::size_t m = 1 + rng() % 2;
        t = {Representation::trivial(g, m), random_matrix(rng, m, m)};
        break;
    }
    case 1: t = {Representation::adjoint(g), inverse_by_adjugate(f.matrix) * c}; break;
    default:
        t = {direct_sum(Representation::adjoint(g), Representation::trivial(g)),
             block_diagonal(inverse_by_adjugate(f.matrix) * c, Matrix{{small_rational(rng)}})};
    }
    if (rng() % 2) {
        const std::size_t m = t.module.dim;
        const Matrix p = random_unimodular(rng, m);
        const Matrix pinv = inverse_by_adjugate(p);
        std::vector<Matrix> acts;
        for (const auto& a : t.module.actions) acts.push_back(p * a * pinv);
        t = {Representation(g, m, std::move(acts)), p * t.xi * pinv};
    }
    if (entry.grading && rng() % 2) {
        const LieMorphism s = random_graded_endomorphism(entry, rng());
        if (s.matrix * f.matrix == f.matrix * s.matrix) t.module = pullback(s, t.module);
    }
    return t;
}

// Same algebra in the basis given by the columns of p.
inline LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p)
{
    const std::size_t n = g.dim();
    const Matrix pinv = inverse_by_adjugate(p);
    LieAlgebra::BracketTable table;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector b = pinv * g.bracket(p.column(i), p.column(j));
            SparseVector sv;
            for (std::size_t k = 0; k < n; ++k)
                if (!b[k].is_zero()) sv[k] = b[k];
            if (!sv.empty()) table[{i, j}] = sv;
        }
    return LieAlgebra::with_default_labels(n, std::move(table));
}

} // namespace linlef::testing
