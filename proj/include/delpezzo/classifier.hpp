#pragma once

#include <string>
#include <vector>

#include "delpezzo/orbifold_rr.hpp"

namespace delpezzo {

struct SearchBounds {
    int r_max = 12;
    int n_max = 8;
    bool anchor_filter = true;

    void validate() const;
};

/**
 * A basket passing every constraint for multiplicity m_o, together with
 * the data derived from it.
 *
 * k2_allowed comes from integrality at a = 0. k2_higher_a is the further
 * intersection over a = 1..m_o-2; when it is strictly smaller the
 * solution is flagged (reports show it, nothing fails).
 */
struct FiberSolution {
    int m_o = 1;
    Basket basket;
    bool regular = true;
    Rational delta0;
    std::vector<int> k2_allowed;
    std::vector<int> index_multiset;
    bool anchored = true;
    std::vector<int> k2_higher_a;
    bool k2_shrinks_at_higher_a = false;
};

enum class GoldenStatus { match, mismatch, not_applicable };

struct SolutionGroup {
    std::vector<int> indices;
    std::vector<FiberSolution> solutions;
};

struct ClassificationReport {
    int m_o = 1;
    SearchBounds bounds;
    std::vector<SolutionGroup> groups;  // sorted by indices
    GoldenStatus golden_status = GoldenStatus::not_applicable;
    std::vector<std::string> golden_details;
    std::vector<std::string> notes;

    std::size_t solution_count() const;
};

/// True iff m_o * q = 0 (mod r), i.e. m_o F_o is Cartier at the point.
bool divisibility_ok(int m_o, const CycQuotPoint& point);

/**
 * Residuals of the master system for D = F_o: entry l-1 holds
 * m_o * sum_P c_local(r, b, l*q) + l for l = 1..m_o-1. The basket
 * satisfies the system iff every entry is zero.
 */
std::vector<Rational> master_residuals(int m_o, const Basket& basket);

/// Anchor condition: some point has index divisible by m_o
/// (vacuously true for m_o = 1).
bool anchor_ok(int m_o, const Basket& basket);

/// All candidate points with 2 <= r <= r_max, canonical weight, and
/// m_o * q = 0 (mod r), in ascending (r, b, q) order.
std::vector<CycQuotPoint> enumerate_states(int m_o, int r_max);

/**
 * Exhaustive search for baskets of at most n_max candidate points whose
 * master residuals all vanish; applies the anchor filter when enabled.
 * Deterministic canonical output order.
 */
std::vector<Basket> search(int m_o, const SearchBounds& bounds);

/// For prime m: all index multisets with every r_i divisible by m and
/// (m+1) * sum r_i = 12m. Empty when 12m/(m+1) is not an integer.
/// Throws std::domain_error if m is not prime.
std::vector<std::vector<int>> prime_index_multisets(int m);

/// True iff some assignment of (b, q) to the given indices satisfies the
/// full level-m master system; decided by exhaustion.
bool prime_exclusion_check(int m, const std::vector<int>& index_multiset);

/// Basket of alpha * F_o: q maps to alpha*q mod r, points where the
/// residue vanishes drop out.
Basket derived_basket(const Basket& basket, int alpha);

/// Cross-check: for every prime p | m_o the level-p derived basket must
/// appear among prime_index_multisets(p) and pass prime_exclusion_check.
bool subbasket_consistency(int m_o, const Basket& basket);

/// { d in 1..9 : (d+1)/m_o + delta0 is an integer }.
std::vector<int> k2_allowed(int m_o, const Rational& delta0);

/// Full classification for one multiplicity: search, per-solution data,
/// grouping by index multiset, golden diff for m_o <= 6, and structural
/// notes explaining emptiness where a closed-form reason exists.
ClassificationReport classify(int m_o, const SearchBounds& bounds);

}  // namespace delpezzo
