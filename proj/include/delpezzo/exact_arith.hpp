#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace delpezzo {

// Weight not coprime to the index.
struct InvalidWeightError : std::domain_error {
    using std::domain_error::domain_error;
};

/**
 * Exact rational number, backed by GMP.
 *
 * Always stored reduced with denominator >= 1; equality is structural.
 * Renders as "p/q" ("p" for integers, "0" for zero), and parses the same
 * grammar back.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    static Rational parse(const std::string& text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string str() const { return v_.get_str(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0    ? std::strong_ordering::less
               : c == 0 ? std::strong_ordering::equal
                        : std::strong_ordering::greater;
    }

    std::size_t hash() const { return std::hash<std::string>{}(v_.get_str()); }

private:
    mpq_class v_;  // canonical at all times
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Representative of x mod r in [0, r). Throws std::domain_error for r < 1.
std::int64_t smallest_residue(std::int64_t x, std::int64_t r);

/// Weight b folded into [1, r/2] under the b <-> r-b identification.
/// Requires r >= 2 and gcd(b, r) = 1 (InvalidWeightError otherwise).
std::int64_t canonical_weight(std::int64_t b, std::int64_t r);

}  // namespace delpezzo

template <>
struct std::hash<delpezzo::Rational> {
    std::size_t operator()(const delpezzo::Rational& q) const { return q.hash(); }
};
