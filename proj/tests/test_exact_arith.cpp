#include <doctest.h>

#include <limits>
#include <numeric>
#include <random>

#include "delpezzo/exact_arith.hpp"

using namespace delpezzo;

TEST_CASE("smallest_residue basics") {
    CHECK(smallest_residue(7, 9) == 7);
    CHECK(smallest_residue(-1, 6) == 5);
    CHECK(smallest_residue(20, 6) == 2);
    CHECK(smallest_residue(0, 1) == 0);
    CHECK_THROWS_AS(smallest_residue(3, 0), std::domain_error);
    CHECK_THROWS_AS(smallest_residue(3, -2), std::domain_error);
}

TEST_CASE("smallest_residue translation invariance") {
    std::mt19937_64 rng(20240517);
    std::uniform_int_distribution<std::int64_t> xs(-1'000'000'000'000LL,
                                                   1'000'000'000'000LL);
    std::uniform_int_distribution<std::int64_t> rs(1, 1'000'000);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t x = xs(rng), r = rs(rng);
        CHECK(smallest_residue(x + r, r) == smallest_residue(x, r));
        std::int64_t v = smallest_residue(x, r);
        CHECK(v >= 0);
        CHECK(v < r);
        CHECK(smallest_residue(v - x, r) == 0);
    }
}

TEST_CASE("canonical_weight") {
    CHECK(canonical_weight(7, 9) == 2);
    CHECK(canonical_weight(1, 2) == 1);
    CHECK(canonical_weight(5, 8) == 3);
    CHECK(canonical_weight(-1, 7) == 1);
    CHECK_THROWS_AS(canonical_weight(2, 4), InvalidWeightError);
    CHECK_THROWS_AS(canonical_weight(6, 9), InvalidWeightError);
    CHECK_THROWS_AS(canonical_weight(1, 1), std::domain_error);

    for (int r = 2; r <= 40; ++r)
        for (int b = 1; b < r; ++b) {
            if (std::gcd(b, r) != 1)
                continue;
            auto w = canonical_weight(b, r);
            CHECK(w >= 1);
            CHECK(2 * w <= r);
            CHECK(w == canonical_weight(r - b, r));
        }
}

TEST_CASE("Rational is stored reduced with positive denominator") {
    Rational a(6L, -4L);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(a.str() == "-3/2");
    CHECK(Rational(0L, 17L).str() == "0");
    CHECK(Rational(10L, 5L).str() == "2");
    CHECK(Rational(-10L, 11L).str() == "-10/11");
    CHECK_THROWS_AS(Rational(1L, 0L), std::domain_error);
}

TEST_CASE("Rational parse round trip") {
    for (const char* s : {"0", "1", "-1", "-10/11", "3/7", "-123456789/2"}) {
        Rational v = Rational::parse(s);
        CHECK(v.str() == s);
    }
    CHECK(Rational::parse("4/6") == Rational(2L, 3L));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("Rational arithmetic and ordering") {
    CHECK(Rational(1L, 3L) + Rational(1L, 6L) == Rational(1L, 2L));
    CHECK(Rational(1L, 2L) - Rational(1L, 2L) == Rational(0));
    CHECK(Rational(2L, 3L) * Rational(3L, 4L) == Rational(1L, 2L));
    CHECK(Rational(1L, 2L) / Rational(1L, 4L) == Rational(2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(-1L, 8L) < Rational(0));
    CHECK(Rational(1L, 3L) > Rational(1L, 4L));
    CHECK(-Rational(5L, 7L) == Rational(-5L, 7L));
}

// Sum reconstructed through reduction must agree with the unreduced
// cross-multiplied fraction, for 2^64-scale numerators.
TEST_CASE("Rational addition vs cross-multiplied oracle") {
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<long> num(std::numeric_limits<long>::min() + 1,
                                            std::numeric_limits<long>::max());
    std::uniform_int_distribution<long> den(1, std::numeric_limits<long>::max());
    for (int i = 0; i < 2000; ++i) {
        long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        Rational sum = Rational(a, b) + Rational(c, d);
        mpz_class az(a), bz(b), cz(c), dz(d);
        CHECK(sum.num() * (bz * dz) == (az * dz + cz * bz) * sum.den());
        CHECK(sum.den() > 0);
        CHECK(gcd(mpz_class(abs(sum.num())), sum.den()) == 1);
    }
}
