#include "delpezzo/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace delpezzo {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

void record(SuiteResult& res, bool ok, const std::string& what) {
    if (ok) {
        ++res.passed;
        return;
    }
    ++res.failed;
    if (res.counterexamples.size() < kMaxCounterexamples)
        res.counterexamples.push_back(what);
}

std::vector<int> coprime_weights(int r) {
    std::vector<int> out;
    for (int b = 1; b < r; ++b)
        if (std::gcd(b, r) == 1)
            out.push_back(b);
    return out;
}

std::vector<int> canonical_weights(int r) {
    std::vector<int> out;
    for (int b = 1; 2 * b <= r; ++b)
        if (std::gcd(b, r) == 1)
            out.push_back(b);
    return out;
}

bool is_prime(int m) {
    if (m < 2)
        return false;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0)
            return false;
    return true;
}

std::string fmt(const char* head, std::initializer_list<long long> args) {
    std::ostringstream os;
    os << head;
    for (long long a : args)
        os << " " << a;
    return os.str();
}

}  // namespace

SuiteResult verify_lemma_sp(int r_max) {
    SuiteResult res;
    res.name = "lemma-sp";
    for (int r = 2; r <= r_max; ++r)
        for (int b : canonical_weights(r))
            for (int q = 1; q < r; ++q) {
                int m = r / std::gcd(r, q);
                Rational direct = xi_direct(r, b, q, m);
                Rational closed = xi_closed(r, q, m);
                bool ok = direct == closed;
                record(res, ok,
                       fmt("lemma-sp r b q m:", {r, b, q, m}) + " direct=" +
                           direct.str() + " closed=" + closed.str());
            }
    return res;
}

SuiteResult verify_su_div(int r_max) {
    SuiteResult res;
    res.name = "su-div";
    for (int r = 2; r <= r_max; ++r)
        for (int b : canonical_weights(r))
            for (int q = 1; q < r; ++q) {
                int base = r / std::gcd(r, q);  // smallest m1 with m1*q = 0 (mod r)
                for (int t = 1; t <= 2; ++t)
                    for (int m2 = 1; m2 <= 3; ++m2) {
                        int m1 = t * base;
                        Rational lhs = xi_direct(r, b, q, m1 * m2);
                        Rational rhs = Rational(m2) * xi_direct(r, b, q, m1);
                        record(res, lhs == rhs,
                               fmt("su-div r b q m1 m2:", {r, b, q, m1, m2}) +
                                   " lhs=" + lhs.str() + " rhs=" + rhs.str());
                    }
            }
    return res;
}

SuiteResult verify_periodicity(int r_max) {
    SuiteResult res;
    res.name = "periodicity";
    for (int r = 2; r <= r_max; ++r) {
        for (int b : canonical_weights(r))
            for (int q = 0; q <= 2 * r; ++q)
                record(res, c_local(r, b, q) == c_local(r, b, q + r),
                       fmt("periodicity r b q:", {r, b, q}));
        // weight symmetry b <-> r-b, over non-canonical weights too
        for (int b : coprime_weights(r))
            for (int q = 0; q < r; ++q)
                record(res, c_local(r, b, q) == c_local(r, r - b, q),
                       fmt("weight-symmetry r b q:", {r, b, q}));
    }
    res.info.push_back("includes the weight symmetry c(r,b,q) = c(r,r-b,q)");
    return res;
}

SuiteResult verify_full_period(int r_max) {
    SuiteResult res;
    res.name = "full-period";
    for (int r = 2; r <= r_max; ++r)
        for (int b : coprime_weights(r)) {
            long long sum = 0;
            for (long long j = 1; j < r; ++j) {
                long long bj = (b * j) % r;
                sum += bj * (r - bj);
            }
            long long expected =
                static_cast<long long>(r) * (static_cast<long long>(r) * r - 1) / 6;
            record(res, sum == expected,
                   fmt("full-period r b sum expected:", {r, b, sum, expected}));
        }
    return res;
}

SuiteResult verify_specializations(int r_max) {
    SuiteResult res;
    res.name = "specializations";
    for (int r = 2; r <= r_max; ++r)
        for (int b : coprime_weights(r)) {
            record(res, c_local(r, b, r - 1) == c_minus_k(r, b),
                   fmt("specialization -K r b:", {r, b}));
            record(res, c_local(r, b, 1) == c_k(r),
                   fmt("specialization K r b:", {r, b}));
        }
    return res;
}

SuiteResult verify_prime_bound() {
    SuiteResult res;
    res.name = "prime-bound";
    const std::map<int, std::size_t> expected_counts = {
        {2, 5}, {3, 3}, {5, 2}, {11, 1}};
    std::vector<int> solvable;
    for (int m = 2; m <= 97; ++m) {
        if (!is_prime(m))
            continue;
        auto lists = prime_index_multisets(m);
        auto it = expected_counts.find(m);
        if (it != expected_counts.end()) {
            record(res, lists.size() == it->second,
                   fmt("prime-bound multiset count m:", {m, (long long)lists.size()}));
            if (!lists.empty())
                solvable.push_back(m);
        } else {
            record(res, lists.empty(),
                   fmt("prime-bound expected empty m:", {m, (long long)lists.size()}));
        }
    }
    {
        std::ostringstream os;
        os << "solvable primes:";
        for (int m : solvable)
            os << " " << m;
        res.info.push_back(os.str());
    }

    record(res, !prime_exclusion_check(5, {10}), "exclusion (10) at m=5");
    record(res, !prime_exclusion_check(11, {11}), "exclusion (11) at m=11");
    res.info.push_back("excluded: (10) at m=5, (11) at m=11");

    const std::vector<std::pair<int, std::vector<int>>> kept = {
        {2, {8}},    {2, {2, 6}},       {2, {4, 4}}, {2, {2, 2, 4}},
        {2, {2, 2, 2, 2}}, {3, {9}},    {3, {3, 3, 3}}, {3, {3, 6}},
        {5, {5, 5}},
    };
    for (const auto& [m, indices] : kept) {
        std::ostringstream os;
        os << "kept row (";
        for (std::size_t i = 0; i < indices.size(); ++i)
            os << (i ? "," : "") << indices[i];
        os << ") at m=" << m;
        record(res, prime_exclusion_check(m, indices), os.str());
    }
    return res;
}

SuiteResult verify_xi_budget(int m_max) {
    SuiteResult res;
    res.name = "xi-budget";
    SearchBounds bounds;
    for (int m = 1; m <= m_max; ++m) {
        auto baskets = search(m, bounds);
        auto allowed =
            is_prime(m) ? prime_index_multisets(m) : std::vector<std::vector<int>>{};
        for (const auto& basket : baskets) {
            record(res, xi_budget_residual(m, basket).is_zero(),
                   fmt("xi-budget residual m size:", {m, (long long)basket.size()}));
            if (m >= 2)
                record(res, subbasket_consistency(m, basket),
                       fmt("subbasket consistency m size:", {m, (long long)basket.size()}));
            if (is_prime(m)) {
                auto idx = basket.indices();
                record(res,
                       std::find(allowed.begin(), allowed.end(), idx) != allowed.end(),
                       fmt("prime multiset membership m:", {m}));
            }
            bool regular = std::all_of(
                basket.points().begin(), basket.points().end(),
                [](const CycQuotPoint& p) { return p.q() == p.r() - 1; });
            if (regular) {
                std::vector<int> expect;
                for (int d = 1; d <= 9; ++d)
                    if (d % m == 0)
                        expect.push_back(d);
                record(res, k2_allowed(m, delta_a(basket, 0)) == expect,
                       fmt("regular K^2 multiples m:", {m}));
            }
        }
    }
    return res;
}

std::vector<SuiteResult> verify_all(int r_max) {
    return {verify_lemma_sp(r_max),
            verify_su_div(std::min(r_max, 40)),
            verify_periodicity(r_max),
            verify_full_period(r_max),
            verify_specializations(r_max),
            verify_prime_bound(),
            verify_xi_budget()};
}

SuiteResult run_suite_by_name(const std::string& name, int r_max, bool& known) {
    known = true;
    if (name == "lemma-sp")
        return verify_lemma_sp(r_max);
    if (name == "su-div")
        return verify_su_div(std::min(r_max, 40));
    if (name == "periodicity")
        return verify_periodicity(r_max);
    if (name == "full-period")
        return verify_full_period(r_max);
    if (name == "specializations")
        return verify_specializations(r_max);
    if (name == "prime-bound")
        return verify_prime_bound();
    if (name == "xi-budget")
        return verify_xi_budget();
    known = false;
    return {};
}

}  // namespace delpezzo
