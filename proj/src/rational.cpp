#include "symsemi/rational.hpp"

#include "symsemi/errors.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace symsemi {

namespace {

bool is_integer_literal(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    std::string t(s);
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return mpz_class(t, 10);
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw ParseError("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ParseError("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(text)) throw ParseError("not a rational: '" + std::string(text) + "'");
        return Rational(parse_integer(text));
    }
    const auto p = text.substr(0, slash);
    const auto q = text.substr(slash + 1);
    if (!is_integer_literal(p) || !is_integer_literal(q) || q.front() == '-' || q.front() == '+')
        throw ParseError("not a rational: '" + std::string(text) + "'");
    const mpz_class den = parse_integer(q);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(p), den);
}

Rational Rational::inverse() const {
    if (is_zero()) throw Singular("inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Singular("division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rationalize(double x, std::int64_t max_den) {
    // Convergents p_k/q_k of the continued fraction of x.
    const bool neg = x < 0;
    double r = std::fabs(x);
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        const double a = std::floor(r);
        const mpz_class ai(a);
        const mpz_class p2 = ai * p1 + p0;
        const mpz_class q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double frac = r - a;
        if (frac < 1e-300) break;
        r = 1.0 / frac;
        if (!std::isfinite(r)) break;
    }
    if (q1 == 0) return Rational(0);
    Rational out(p1, q1);
    return neg ? -out : out;
}

bool exact_sqrt(const Rational& x, Rational& root) {
    if (x.sign() < 0) return false;
    const mpz_class n = x.num(), d = x.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Rational(rn, rd);
    return true;
}

} // namespace symsemi
