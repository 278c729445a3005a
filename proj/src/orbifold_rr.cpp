#include "delpezzo/orbifold_rr.hpp"

#include <algorithm>
#include <numeric>

namespace delpezzo {

namespace {

using int128 = __int128;

mpz_class mpz_from_int128(int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

Rational rational_from_int128(int128 num, int128 den) {
    return Rational(mpz_from_int128(num), mpz_from_int128(den));
}

// Numerator of c_local over the common denominator 12r, for qbar in [0, r).
int128 c_num_12r(std::int64_t r, std::int64_t b, std::int64_t qbar) {
    if (qbar == 0)
        return 0;
    std::int64_t bmod = smallest_residue(b, r);
    int128 six_sum = 0;  // 6 * sum_j bbar_j (r - bbar_j) / (2r) -> over 12r
    std::int64_t bj = 0;
    for (std::int64_t j = 1; j < qbar; ++j) {
        bj += bmod;
        if (bj >= r)
            bj -= r;
        six_sum += static_cast<int128>(bj) * (r - bj);
    }
    int128 rr = static_cast<int128>(r) * r - 1;
    return -static_cast<int128>(qbar) * rr + 6 * six_sum;
}

void require_valid_weight(std::int64_t r, std::int64_t b) {
    if (std::gcd(smallest_residue(b, r), r) != 1)
        throw InvalidWeightError("weight b must be coprime to the index r");
}

}  // namespace

CycQuotPoint::CycQuotPoint(int r, int b, int q) : r_(r) {
    if (r < 2)
        throw std::domain_error("CycQuotPoint: index must be >= 2");
    b_ = static_cast<int>(canonical_weight(b, r));
    q_ = static_cast<int>(smallest_residue(q, r));
    if (q_ == 0)
        throw std::invalid_argument(
            "CycQuotPoint: q = 0 means the divisor is Cartier; the point does "
            "not belong in a basket");
}

Basket::Basket(std::vector<CycQuotPoint> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
}

Basket Basket::of(std::initializer_list<std::array<int, 3>> triples) {
    std::vector<CycQuotPoint> pts;
    pts.reserve(triples.size());
    for (const auto& t : triples)
        pts.emplace_back(t[0], t[1], t[2]);
    return Basket(std::move(pts));
}

std::vector<int> Basket::indices() const {
    std::vector<int> out;
    out.reserve(points_.size());
    for (const auto& p : points_)
        out.push_back(p.r());
    return out;
}

Rational c_local(std::int64_t r, std::int64_t b, std::int64_t q_raw) {
    if (r < 1)
        throw std::domain_error("c_local: index must be >= 1");
    if (r == 1)
        return Rational(0);
    require_valid_weight(r, b);
    std::int64_t qbar = smallest_residue(q_raw, r);
    if (qbar == 0)
        return Rational(0);
    return rational_from_int128(c_num_12r(r, b, qbar), 12 * static_cast<int128>(r));
}

Rational c_minus_k(std::int64_t r, std::int64_t b) {
    if (r < 2)
        throw std::domain_error("c_minus_k: index must be >= 2");
    require_valid_weight(r, b);
    std::int64_t bb = smallest_residue(b, r);
    int128 num = static_cast<int128>(r) * r - 1 -
                 6 * static_cast<int128>(bb) * (r - bb);
    return rational_from_int128(num, 12 * static_cast<int128>(r));
}

Rational c_k(std::int64_t r) {
    if (r < 2)
        throw std::domain_error("c_k: index must be >= 2");
    int128 num = -(static_cast<int128>(r) * r - 1);
    return rational_from_int128(num, 12 * static_cast<int128>(r));
}

Rational xi_direct(std::int64_t r, std::int64_t b, std::int64_t q, std::int64_t m) {
    if (r < 1)
        throw std::domain_error("xi_direct: index must be >= 1");
    if (m < 1)
        throw std::domain_error("xi_direct: m must be >= 1");
    if (r == 1)
        return Rational(0);
    require_valid_weight(r, b);
    std::int64_t qmod = smallest_residue(q, r);
    int128 total = 0;
    std::int64_t lq = 0;
    for (std::int64_t l = 1; l < m; ++l) {
        lq += qmod;
        if (lq >= r)
            lq -= r;
        total += c_num_12r(r, b, lq);
    }
    return rational_from_int128(total, 12 * static_cast<int128>(r));
}

Rational xi_direct(const CycQuotPoint& p, std::int64_t m) {
    return xi_direct(p.r(), p.b(), p.q(), m);
}

Rational xi_closed(std::int64_t r, std::int64_t q, std::int64_t m) {
    if (r < 2)
        throw std::domain_error("xi_closed: index must be >= 2");
    if (m < 2)
        throw std::domain_error("xi_closed: m must be >= 2");
    std::int64_t s = std::gcd(r, smallest_residue(q, r));
    if (m * s != r)
        throw XiClosedNotApplicable("xi_closed: requires m * gcd(r, q) = r");
    int128 num = -(static_cast<int128>(m) * m - 1) * r;
    return rational_from_int128(num, 24 * static_cast<int128>(m));
}

Rational xi_budget_residual(std::int64_t m, const Basket& basket) {
    if (m < 1)
        throw std::domain_error("xi_budget_residual: m must be >= 1");
    Rational total(0);
    for (const auto& p : basket.points())
        total += xi_direct(p, m);
    return total + Rational(m - 1, 2);
}

Rational delta_a(const Basket& basket, std::int64_t a) {
    if (a < 0)
        throw std::domain_error("delta_a: a must be >= 0");
    Rational total(0);
    for (const auto& p : basket.points()) {
        int128 lo = -1 - static_cast<int128>(a) * p.q();
        int128 hi = lo - p.q();
        auto reduce = [&](int128 x) {
            std::int64_t m = static_cast<std::int64_t>(x % p.r());
            return m < 0 ? m + p.r() : m;
        };
        total += c_local(p.r(), p.b(), reduce(lo));
        total -= c_local(p.r(), p.b(), reduce(hi));
    }
    return total;
}

}  // namespace delpezzo
