#include "linlef/linalg.hpp"

#include "linlef/errors.hpp"

#include <stdexcept>
#include <string>

namespace linlef {

RrefResult rref(const Matrix& m)
{
    RrefResult out{m, {}, 0};
    Matrix& a = out.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t found = pivot_row;
        while (found < a.rows() && a(found, col).is_zero()) ++found;
        if (found == a.rows()) continue;

        if (found != pivot_row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(found, c), a(pivot_row, c));

        const Rational inv = a(pivot_row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) *= inv;

        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a(r, col).is_zero()) continue;
            const Rational factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (!a(pivot_row, c).is_zero()) a(r, c) -= factor * a(pivot_row, c);
        }
        out.pivot_columns.push_back(col);
        ++pivot_row;
    }
    out.rank = out.pivot_columns.size();
    return out;
}

std::size_t rank(const Matrix& m)
{
    return rref(m).rank;
}

std::vector<Vector> kernel_basis(const Matrix& m)
{
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivot_columns) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_columns[i]] = -r.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(const Matrix& m)
{
    if (!m.is_square())
        throw InputError("NonSquare: determinant of a " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            for (std::size_t c = k; c < n; ++c) std::swap(a(p, c), a(k, c));
            det = -det;
        }
        det *= a(k, k);
        const Rational inv = a(k, k).inverse();
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a(r, k).is_zero()) continue;
            const Rational factor = a(r, k) * inv;
            for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= factor * a(k, c);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (!m.is_square()) throw InputError("NonSquare: inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    const RrefResult red = rref(aug);
    if (red.rank < n || red.pivot_columns[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
    return inv;
}

std::optional<Vector> solve_in_span(const std::vector<Vector>& basis, const Vector& target)
{
    const std::size_t dim = target.size();
    const std::size_t k = basis.size();
    Matrix aug(dim, k + 1);
    for (std::size_t j = 0; j < k; ++j) {
        if (basis[j].size() != dim) throw InputError("DimensionMismatch: basis vector length");
        for (std::size_t i = 0; i < dim; ++i) aug(i, j) = basis[j][i];
    }
    for (std::size_t i = 0; i < dim; ++i) aug(i, k) = target[i];

    const RrefResult r = rref(aug);
    // Independent basis means the first k columns are all pivots; membership
    // means the augmented column is not.
    if (r.rank != k) return std::nullopt;
    for (std::size_t i = 0; i < k; ++i)
        if (r.pivot_columns[i] != i) return std::nullopt;
    Vector coeffs(k);
    for (std::size_t i = 0; i < k; ++i) coeffs[i] = r.reduced(i, k);
    return coeffs;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t ambient_dim)
{
    Matrix stacked(vectors.size(), ambient_dim);
    for (std::size_t r = 0; r < vectors.size(); ++r)
        for (std::size_t c = 0; c < ambient_dim; ++c) stacked(r, c) = vectors[r][c];
    const RrefResult red = rref(stacked);
    std::vector<Vector> out;
    out.reserve(red.rank);
    for (std::size_t r = 0; r < red.rank; ++r) out.push_back(red.reduced.row(r));
    return out;
}

// --- exterior powers ------------------------------------------------------

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n) return 0;
    std::size_t b = 1;
    for (std::size_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

SubsetIndex::SubsetIndex(std::size_t n, std::size_t p) : n_(n), p_(p)
{
    if (n > 63) throw InputError("subset index limited to n <= 63");
    if (p > n) return;
    std::vector<std::size_t> current(p);
    for (std::size_t i = 0; i < p; ++i) current[i] = i;
    while (true) {
        by_mask_.emplace(mask(current), subsets_.size());
        subsets_.push_back(current);
        // Advance to the lexicographic successor.
        std::size_t i = p;
        while (i > 0 && current[i - 1] == n - p + (i - 1)) --i;
        if (i == 0) break;
        ++current[i - 1];
        for (std::size_t j = i; j < p; ++j) current[j] = current[j - 1] + 1;
    }
}

std::uint64_t SubsetIndex::mask(const std::vector<std::size_t>& subset)
{
    std::uint64_t m = 0;
    for (auto i : subset) m |= std::uint64_t{1} << i;
    return m;
}

std::optional<std::size_t> SubsetIndex::index_of(const std::vector<std::size_t>& sorted) const
{
    if (sorted.size() != p_) return std::nullopt;
    const auto it = by_mask_.find(mask(sorted));
    if (it == by_mask_.end()) return std::nullopt;
    return it->second;
}

Matrix exterior_power(const Matrix& m, std::size_t p)
{
    if (!m.is_square()) throw InputError("NonSquare: exterior power of a non-square matrix");
    const std::size_t n = m.rows();
    if (p > n)
        throw InputError("DegreeOutOfRange: exterior power degree " + std::to_string(p) +
                         " exceeds dimension " + std::to_string(n));
    const SubsetIndex idx(n, p);
    Matrix out(idx.size(), idx.size());
    Matrix minor(p, p);
    for (std::size_t s = 0; s < idx.size(); ++s) {
        const auto& rows = idx.subset(s);
        for (std::size_t t = 0; t < idx.size(); ++t) {
            const auto& cols = idx.subset(t);
            for (std::size_t i = 0; i < p; ++i)
                for (std::size_t j = 0; j < p; ++j) minor(i, j) = m(rows[i], cols[j]);
            out(s, t) = determinant(minor);
        }
    }
    return out;
}

// --- polynomials ----------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) return {};
    const Rational inv = leading().inverse();
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x *= inv;
    return Polynomial(std::move(c));
}

Matrix Polynomial::evaluate(const Matrix& m) const
{
    const std::size_t n = m.rows();
    Matrix acc(n, n);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

PolynomialDivision divide(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    if (rem.size() < bc.size()) return {Polynomial{}, a};

    std::vector<Rational> quot(rem.size() - db);
    const Rational lead_inv = b.leading().inverse();
    for (std::size_t k = rem.size(); k-- > db;) {
        const Rational factor = rem[k] * lead_inv;
        quot[k - db] = factor;
        if (factor.is_zero()) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= factor * bc[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = divide(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Polynomial squarefree_part(const Polynomial& p)
{
    if (p.degree() <= 0) return p.monic();
    return divide(p, gcd(p, p.derivative())).quotient.monic();
}

Polynomial characteristic_polynomial(const Matrix& m)
{
    if (!m.is_square()) throw InputError("NonSquare: characteristic polynomial");
    const std::size_t n = m.rows();
    // coeff[k] is the coefficient of x^k.
    std::vector<Rational> coeff(n + 1);
    coeff[n] = 1;
    Matrix mk(n, n); // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += coeff[n - k + 1];
        coeff[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
    }
    return Polynomial(std::move(coeff));
}

JordanParts jordan_chevalley(const Matrix& m)
{
    if (!m.is_square()) throw InputError("NonSquare: Jordan-Chevalley decomposition");
    const std::size_t n = m.rows();
    if (n == 0) return {m, m};

    const Polynomial q = squarefree_part(characteristic_polynomial(m));
    const Polynomial dq = q.derivative();

    Matrix s = m;
    // Quadratic convergence: the defect's nilpotency index halves each step.
    for (std::size_t iter = 0; iter <= 2 * n + 2; ++iter) {
        const Matrix qs = q.evaluate(s);
        if (qs.is_zero()) return {s, m - s};
        const auto dq_inv = inverse(dq.evaluate(s));
        if (!dq_inv) throw InternalError("Jordan-Chevalley: q'(S) is singular");
        s = s - qs * *dq_inv;
    }
    throw InternalError("Jordan-Chevalley: Newton iteration did not converge");
}

} // namespace linlef
