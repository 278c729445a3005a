#pragma once

#include <string>
#include <vector>

#include "delpezzo/classifier.hpp"

namespace delpezzo {

struct SuiteResult {
    std::string name;
    long long passed = 0;
    long long failed = 0;
    std::vector<std::string> counterexamples;  // capped
    std::vector<std::string> info;

    bool ok() const { return failed == 0; }
    long long instances() const { return passed + failed; }
};

// Exhaustive property suites over the local contributions and the
// classifier. Each returns counts of checked instances and the first
// few counterexamples on failure.

/// xi_direct == xi_closed for every (r, b, q) with m = r/gcd(r, q).
SuiteResult verify_lemma_sp(int r_max = 60);

/// Xi periodicity: xi(r,b,q,m1*m2) = m2 * xi(r,b,q,m1) when m1*q = 0 (mod r).
SuiteResult verify_su_div(int r_max = 40);

/// c_local r-periodicity in q, plus invariance under b <-> r-b.
SuiteResult verify_periodicity(int r_max = 60);

/// sum_{j=1}^{r-1} (bj mod r)(r - bj mod r) = r(r^2-1)/6.
SuiteResult verify_full_period(int r_max = 60);

/// c_local(r,b,r-1) == c_minus_k(r,b) and c_local(r,b,1) == c_k(r).
SuiteResult verify_specializations(int r_max = 60);

/// Solvable primes are exactly {2,3,5,11} with 5/3/2/1 index multisets;
/// (10)@5 and (11)@11 are excluded, the classified prime rows survive.
SuiteResult verify_prime_bound();

/// Over all search output for m_o = 1..m_max: the Xi budget holds, the
/// derived prime levels are consistent, prime m_o land in the predicted
/// multisets, and regular solutions get exactly the multiples of m_o
/// as K^2 values.
SuiteResult verify_xi_budget(int m_max = 12);

std::vector<SuiteResult> verify_all(int r_max = 60);

/// Dispatch by suite name: lemma-sp, su-div, periodicity, full-period,
/// specializations, prime-bound, xi-budget. Sets known = false for
/// anything else.
SuiteResult run_suite_by_name(const std::string& name, int r_max, bool& known);

}  // namespace delpezzo
