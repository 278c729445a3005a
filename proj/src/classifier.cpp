#include "delpezzo/classifier.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "delpezzo/goldens.hpp"

namespace delpezzo {

namespace {

bool is_prime(int m) {
    if (m < 2)
        return false;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0)
            return false;
    return true;
}

std::vector<int> prime_factors(int m) {
    std::vector<int> out;
    for (int p = 2; p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0)
                m /= p;
        }
    }
    return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << sep;
        os << v[i];
    }
    return os.str();
}

// Structural reasons for an empty result, where a closed-form argument
// exists independently of the search bounds.
std::vector<std::string> emptiness_notes(int m) {
    std::vector<std::string> notes;
    if (m <= 6) {
        notes.push_back("no solutions within the given bounds");
        return notes;
    }
    bool factors_235 = true;
    for (int p : prime_factors(m)) {
        if ((12 * p) % (p + 1) != 0) {
            std::ostringstream os;
            os << "no solutions: at the derived prime level p = " << p
               << " the budget equation (p+1)*sum(r_i) = 12p has no integer "
                  "solution, so no candidate index multiset exists";
            notes.push_back(os.str());
            factors_235 = false;
        } else if (p == 11) {
            notes.push_back(
                "no solutions: the only level-11 candidate (11) is eliminated "
                "by exhaustion; the required local values force b(11-b) = 22, "
                "which has no solution with gcd(b, 11) = 1");
            factors_235 = false;
        }
    }
    if (m == 8) {
        notes.push_back(
            "no solutions: the multiplicity-4 subsystem for 2F_o forces "
            "basket type (2,4,4), which has no point of index divisible by "
            "8, so the anchor condition cannot hold");
    } else if (m == 9) {
        notes.push_back(
            "no solutions: an index-9 anchor point contributes Xi = -10/3 "
            "and every other point -r_i/3 with 3 | r_i; the budget sum Xi = "
            "-(m-1)/2 = -4 would force sum r_i = 2, which is impossible");
    } else if (factors_235 && m > 9) {
        std::ostringstream os;
        os << "no solutions: prime-level baskets have indices at most 9, so "
              "no point can have index divisible by m = "
           << m << " and the anchor condition cannot hold";
        notes.push_back(os.str());
    }
    return notes;
}

}  // namespace

void SearchBounds::validate() const {
    if (r_max < 2)
        throw std::domain_error("SearchBounds: r_max must be >= 2");
    if (n_max < 1)
        throw std::domain_error("SearchBounds: n_max must be >= 1");
}

std::size_t ClassificationReport::solution_count() const {
    std::size_t n = 0;
    for (const auto& g : groups)
        n += g.solutions.size();
    return n;
}

bool divisibility_ok(int m_o, const CycQuotPoint& point) {
    if (m_o < 1)
        throw std::domain_error("divisibility_ok: m_o must be >= 1");
    return (static_cast<std::int64_t>(m_o) * point.q()) % point.r() == 0;
}

std::vector<Rational> master_residuals(int m_o, const Basket& basket) {
    if (m_o < 1)
        throw std::domain_error("master_residuals: m_o must be >= 1");
    std::vector<Rational> out;
    out.reserve(m_o - 1);
    for (int l = 1; l < m_o; ++l) {
        Rational sum(0);
        for (const auto& p : basket.points())
            sum += c_local(p.r(), p.b(),
                           smallest_residue(static_cast<std::int64_t>(l) * p.q(), p.r()));
        out.push_back(Rational(m_o) * sum + Rational(l));
    }
    return out;
}

bool anchor_ok(int m_o, const Basket& basket) {
    if (m_o < 1)
        throw std::domain_error("anchor_ok: m_o must be >= 1");
    if (m_o == 1)
        return true;
    for (const auto& p : basket.points())
        if (p.r() % m_o == 0)
            return true;
    return false;
}

std::vector<CycQuotPoint> enumerate_states(int m_o, int r_max) {
    if (m_o < 1)
        throw std::domain_error("enumerate_states: m_o must be >= 1");
    if (r_max < 2)
        throw std::domain_error("enumerate_states: r_max must be >= 2");
    std::vector<CycQuotPoint> out;
    for (int r = 2; r <= r_max; ++r)
        for (int b = 1; 2 * b <= r; ++b) {
            if (std::gcd(b, r) != 1)
                continue;
            for (int q = 1; q < r; ++q)
                if ((static_cast<std::int64_t>(m_o) * q) % r == 0)
                    out.emplace_back(r, b, q);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Basket> search(int m_o, const SearchBounds& bounds) {
    if (m_o < 1)
        throw std::domain_error("search: m_o must be >= 1");
    bounds.validate();

    const auto states = enumerate_states(m_o, bounds.r_max);
    const int n_states = static_cast<int>(states.size());
    const int n_eq = m_o - 1;
    const int n_max = bounds.n_max;

    // Per-state residual contributions: cvec[i][l] = c_local(r, b, (l+1) q).
    std::vector<std::vector<Rational>> cvec(n_states, std::vector<Rational>(n_eq));
    for (int i = 0; i < n_states; ++i)
        for (int l = 0; l < n_eq; ++l)
            cvec[i][l] = c_local(
                states[i].r(), states[i].b(),
                smallest_residue(static_cast<std::int64_t>(l + 1) * states[i].q(),
                                 states[i].r()));

    std::vector<Rational> target(n_eq);
    for (int l = 0; l < n_eq; ++l)
        target[l] = Rational(-(l + 1), m_o);

    // Interval pruning data: with the DFS choosing states in non-increasing
    // order, every later pick comes from states[0..i]; jmin/jmax bound the
    // total contribution of exactly j further picks.
    std::vector<std::vector<Rational>> premin(n_states, std::vector<Rational>(n_eq));
    std::vector<std::vector<Rational>> premax(n_states, std::vector<Rational>(n_eq));
    for (int i = 0; i < n_states; ++i)
        for (int l = 0; l < n_eq; ++l) {
            premin[i][l] = i ? std::min(premin[i - 1][l], cvec[i][l]) : cvec[i][l];
            premax[i][l] = i ? std::max(premax[i - 1][l], cvec[i][l]) : cvec[i][l];
        }
    auto scaled = [&](const std::vector<std::vector<Rational>>& pre) {
        std::vector<std::vector<std::vector<Rational>>> out(
            n_max + 1, std::vector<std::vector<Rational>>(
                           std::max(n_states, 1), std::vector<Rational>(n_eq)));
        for (int j = 0; j <= n_max; ++j)
            for (int i = 0; i < n_states; ++i)
                for (int l = 0; l < n_eq; ++l)
                    out[j][i][l] = Rational(j) * pre[i][l];
        return out;
    };
    const auto jmin = scaled(premin);
    const auto jmax = scaled(premax);

    // Some completion of <= k more picks from states[0..i] can still reach
    // the target iff one pick count j fits every equation's interval.
    auto reachable = [&](const std::vector<Rational>& sums, int i, int k) {
        std::vector<Rational> diff(n_eq);
        for (int l = 0; l < n_eq; ++l)
            diff[l] = target[l] - sums[l];
        for (int j = 0; j <= k; ++j) {
            bool ok = true;
            for (int l = 0; l < n_eq; ++l)
                if (diff[l] < jmin[j][i][l] || diff[l] > jmax[j][i][l]) {
                    ok = false;
                    break;
                }
            if (ok)
                return true;
        }
        return false;
    };

    std::vector<Basket> found;
    std::vector<CycQuotPoint> stack;
    std::function<void(int, int, const std::vector<Rational>&)> rec =
        [&](int i_max, int slots, const std::vector<Rational>& sums) {
            if (sums == target)
                found.emplace_back(stack);
            if (slots == 0)
                return;
            for (int i = i_max; i >= 0; --i) {
                std::vector<Rational> child(n_eq);
                for (int l = 0; l < n_eq; ++l)
                    child[l] = sums[l] + cvec[i][l];
                if (!reachable(child, i, slots - 1))
                    continue;
                stack.push_back(states[i]);
                rec(i, slots - 1, child);
                stack.pop_back();
            }
        };
    rec(n_states - 1, n_max, std::vector<Rational>(n_eq, Rational(0)));

    if (bounds.anchor_filter) {
        std::erase_if(found,
                      [&](const Basket& b) { return !anchor_ok(m_o, b); });
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<std::vector<int>> prime_index_multisets(int m) {
    if (!is_prime(m))
        throw std::domain_error("prime_index_multisets: m must be prime");
    std::vector<std::vector<int>> out;
    if ((12 * m) % (m + 1) != 0)
        return out;
    const int total = 12 * m / (m + 1);
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int min_part) {
        if (remaining == 0) {
            out.push_back(parts);
            return;
        }
        for (int part = min_part; part <= remaining; part += m) {
            parts.push_back(part);
            rec(remaining - part, part);
            parts.pop_back();
        }
    };
    rec(total, m);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool prime_exclusion_check(int m, const std::vector<int>& index_multiset) {
    if (!is_prime(m))
        throw std::domain_error("prime_exclusion_check: m must be prime");
    std::vector<std::vector<CycQuotPoint>> choices;
    for (int r : index_multiset) {
        std::vector<CycQuotPoint> c;
        for (int b = 1; 2 * b <= r; ++b) {
            if (std::gcd(b, r) != 1)
                continue;
            for (int q = 1; q < r; ++q)
                if ((static_cast<std::int64_t>(m) * q) % r == 0)
                    c.emplace_back(r, b, q);
        }
        if (c.empty())
            return false;
        choices.push_back(std::move(c));
    }
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
        std::vector<CycQuotPoint> pts;
        pts.reserve(pick.size());
        for (std::size_t i = 0; i < pick.size(); ++i)
            pts.push_back(choices[i][pick[i]]);
        auto res = master_residuals(m, Basket(std::move(pts)));
        if (std::all_of(res.begin(), res.end(),
                        [](const Rational& x) { return x.is_zero(); }))
            return true;
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < choices[i].size())
                break;
            pick[i] = 0;
        }
        if (i == pick.size())
            return false;
    }
}

Basket derived_basket(const Basket& basket, int alpha) {
    if (alpha < 1)
        throw std::domain_error("derived_basket: alpha must be >= 1");
    std::vector<CycQuotPoint> pts;
    for (const auto& p : basket.points()) {
        std::int64_t nq =
            smallest_residue(static_cast<std::int64_t>(alpha) * p.q(), p.r());
        if (nq == 0)
            continue;
        pts.emplace_back(p.r(), p.b(), static_cast<int>(nq));
    }
    return Basket(std::move(pts));
}

bool subbasket_consistency(int m_o, const Basket& basket) {
    if (m_o < 2)
        throw std::domain_error("subbasket_consistency: m_o must be >= 2");
    for (int p : prime_factors(m_o)) {
        Basket derived = derived_basket(basket, m_o / p);
        auto indices = derived.indices();
        auto allowed = prime_index_multisets(p);
        if (std::find(allowed.begin(), allowed.end(), indices) == allowed.end())
            return false;
        if (!prime_exclusion_check(p, indices))
            return false;
    }
    return true;
}

std::vector<int> k2_allowed(int m_o, const Rational& delta0) {
    if (m_o < 1)
        throw std::domain_error("k2_allowed: m_o must be >= 1");
    std::vector<int> out;
    for (int d = 1; d <= 9; ++d)
        if ((Rational(d + 1, m_o) + delta0).is_integer())
            out.push_back(d);
    return out;
}

ClassificationReport classify(int m_o, const SearchBounds& bounds) {
    if (m_o < 1)
        throw std::domain_error("classify: m_o must be >= 1");
    bounds.validate();

    ClassificationReport report;
    report.m_o = m_o;
    report.bounds = bounds;

    std::vector<Basket> baskets = search(m_o, bounds);

    std::vector<FiberSolution> sols;
    for (auto& basket : baskets) {
        FiberSolution s;
        s.m_o = m_o;
        s.regular = std::all_of(
            basket.points().begin(), basket.points().end(),
            [](const CycQuotPoint& p) { return p.q() == p.r() - 1; });
        s.delta0 = delta_a(basket, 0);
        s.k2_allowed = k2_allowed(m_o, s.delta0);
        s.index_multiset = basket.indices();
        s.anchored = anchor_ok(m_o, basket);

        s.k2_higher_a = s.k2_allowed;
        for (int a = 1; a <= m_o - 2; ++a) {
            auto ka = k2_allowed(m_o, delta_a(basket, a));
            std::vector<int> inter;
            std::set_intersection(s.k2_higher_a.begin(), s.k2_higher_a.end(),
                                  ka.begin(), ka.end(),
                                  std::back_inserter(inter));
            s.k2_higher_a = std::move(inter);
        }
        s.k2_shrinks_at_higher_a = (s.k2_higher_a != s.k2_allowed);
        s.basket = std::move(basket);
        sols.push_back(std::move(s));
    }

    std::sort(sols.begin(), sols.end(),
              [](const FiberSolution& a, const FiberSolution& b) {
                  if (a.index_multiset != b.index_multiset)
                      return a.index_multiset < b.index_multiset;
                  return a.basket < b.basket;
              });
    for (auto& s : sols) {
        if (report.groups.empty() ||
            report.groups.back().indices != s.index_multiset) {
            report.groups.push_back({s.index_multiset, {}});
        }
        report.groups.back().solutions.push_back(std::move(s));
    }

    if (report.groups.empty())
        report.notes = emptiness_notes(m_o);
    for (const auto& g : report.groups)
        for (const auto& s : g.solutions)
            if (s.k2_shrinks_at_higher_a) {
                std::ostringstream os;
                os << "type (" << join_ints(g.indices)
                   << "): integrality at a >= 1 shrinks the K^2 set to {"
                   << join_ints(s.k2_higher_a) << "}";
                report.notes.push_back(os.str());
            }

    if (m_o <= 6) {
        auto diff = diff_report(report);
        report.golden_status = diff.status;
        report.golden_details = std::move(diff.details);
    } else {
        report.golden_status = GoldenStatus::not_applicable;
    }
    return report;
}

}  // namespace delpezzo
