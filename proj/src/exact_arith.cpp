#include "delpezzo/exact_arith.hpp"

#include <numeric>
#include <ostream>

namespace delpezzo {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0)
        throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    if (sgn(v.get_den()) == 0)
        throw std::domain_error("Rational: zero denominator in '" + text + "'");
    v.canonicalize();
    Rational r;
    r.v_ = v;
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

std::int64_t smallest_residue(std::int64_t x, std::int64_t r) {
    if (r < 1)
        throw std::domain_error("smallest_residue: modulus must be >= 1");
    std::int64_t m = x % r;
    return m < 0 ? m + r : m;
}

std::int64_t canonical_weight(std::int64_t b, std::int64_t r) {
    if (r < 2)
        throw std::domain_error("canonical_weight: index must be >= 2");
    std::int64_t bb = smallest_residue(b, r);
    if (std::gcd(bb, r) != 1)
        throw InvalidWeightError("canonical_weight: gcd(b, r) != 1");
    return std::min(bb, r - bb);
}

}  // namespace delpezzo
