#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "delpezzo/exact_arith.hpp"

namespace delpezzo {

// xi_closed called outside its validity range m * gcd(r, q) = r;
// callers fall back to xi_direct.
struct XiClosedNotApplicable : std::domain_error {
    using std::domain_error::domain_error;
};

/**
 * One basket point: a terminal cyclic quotient singularity of type
 * (1/r)(1, -1, b) together with the local class q of the fiber divisor
 * (F ~ qK near the point).
 *
 * The constructor folds b into its canonical representative in [1, r/2]
 * (the local contributions are invariant under b <-> r-b) and reduces q
 * mod r. A point with q = 0 would have the divisor Cartier and never
 * belongs in a basket; constructing one throws.
 */
class CycQuotPoint {
public:
    CycQuotPoint(int r, int b, int q);

    int r() const { return r_; }
    int b() const { return b_; }
    int q() const { return q_; }

    friend auto operator<=>(const CycQuotPoint&, const CycQuotPoint&) = default;

private:
    int r_;
    int b_;
    int q_;
};

/// Canonical multiset of basket points, kept sorted by (r, b, q).
class Basket {
public:
    Basket() = default;
    explicit Basket(std::vector<CycQuotPoint> points);
    static Basket of(std::initializer_list<std::array<int, 3>> triples);

    const std::vector<CycQuotPoint>& points() const { return points_; }
    std::vector<int> indices() const;
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    friend bool operator==(const Basket&, const Basket&) = default;
    friend auto operator<=>(const Basket&, const Basket&) = default;

private:
    std::vector<CycQuotPoint> points_;
};

/**
 * Local orbifold Riemann-Roch contribution of a point of type
 * (1/r)(1,-1,b) to a divisor of local class q_raw:
 *
 *   c = -qbar (r^2-1)/(12r) + sum_{j=1}^{qbar-1} bbar_j (r - bbar_j)/(2r)
 *
 * with qbar = q_raw mod r and bbar_j = (b*j) mod r. The value is
 * r-periodic in q_raw; q_raw is reduced internally. Returns 0 for r = 1
 * or qbar = 0.
 */
Rational c_local(std::int64_t r, std::int64_t b, std::int64_t q_raw);

/// c of the anticanonical class: (r^2-1)/(12r) - b(r-b)/(2r). Equals
/// c_local(r, b, r-1).
Rational c_minus_k(std::int64_t r, std::int64_t b);

/// c of the canonical class: -(r^2-1)/(12r). Equals c_local(r, b, 1) for
/// every valid weight.
Rational c_k(std::int64_t r);

/// Partial sum Xi = sum_{l=1}^{m-1} c_local(r, b, l*q).
Rational xi_direct(std::int64_t r, std::int64_t b, std::int64_t q, std::int64_t m);
Rational xi_direct(const CycQuotPoint& p, std::int64_t m);

/// Closed form Xi = -(m^2-1) r / (24m), valid exactly when
/// m * gcd(r, q) = r; throws XiClosedNotApplicable otherwise.
Rational xi_closed(std::int64_t r, std::int64_t q, std::int64_t m);

/// sum_P Xi_{P,m} + (m-1)/2; zero iff the basket meets the Xi budget.
Rational xi_budget_residual(std::int64_t m, const Basket& basket);

/// Fiber-degree correction term:
/// sum_P [ c_local(r, b, -1-a*q) - c_local(r, b, -1-(a+1)*q) ].
Rational delta_a(const Basket& basket, std::int64_t a);

}  // namespace delpezzo
