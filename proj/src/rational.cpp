#include "linlef/rational.hpp"

#include "linlef/errors.hpp"

#include <cctype>

namespace linlef {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational::Rational(long num, long den)
{
    if (den == 0) throw InputError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        throw InputError("malformed rational '" + std::string(text) + "'");

    mpz_class n(std::string(num), 10);
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        d = mpz_class(std::string(den), 10);
        if (d == 0) throw InputError("zero denominator in rational '" + std::string(text) + "'");
    }
    if (negative) n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const
{
    return q_.get_str(10);
}

Rational Rational::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / q_));
}

bool Rational::is_canonical() const
{
    if (q_.get_den() <= 0) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return g == 1;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational pow(const Rational& base, unsigned exponent)
{
    Rational acc(1);
    for (unsigned i = 0; i < exponent; ++i) acc *= base;
    return acc;
}

} // namespace linlef
