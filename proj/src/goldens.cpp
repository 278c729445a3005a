#include "delpezzo/goldens.hpp"

#include <algorithm>
#include <sstream>

namespace delpezzo {

namespace {

GoldenSolution sol(std::initializer_list<std::array<int, 3>> pts,
                   const Rational& d0, std::vector<int> k2) {
    GoldenSolution s;
    for (const auto& t : pts)
        s.points.emplace_back(t[0], t[1], t[2]);
    std::sort(s.points.begin(), s.points.end());
    s.delta0 = d0;
    s.k2 = std::move(k2);
    return s;
}

std::vector<GoldenRow> build_table1() {
    const std::vector<int> odd = {1, 3, 5, 7, 9};
    const std::vector<int> even = {2, 4, 6, 8};
    std::vector<GoldenRow> rows;
    rows.push_back({{2, 3, 6},
                    6,
                    "(1, ±1, ±1)",
                    "q_i ≡ -1",
                    "6",
                    true,
                    {sol({{2, 1, 1}, {3, 1, 2}, {6, 1, 5}}, Rational(-1, 6), {6})}});
    rows.push_back({{5, 5},
                    5,
                    "b_1^2 + b_2^2 ≡ 0",
                    "q_i ≡ -1",
                    "5",
                    true,
                    {sol({{5, 1, 4}, {5, 2, 4}}, Rational(-1, 5), {5})}});
    rows.push_back({{2, 4, 4},
                    4,
                    "(1, ±1, ±1)",
                    "q_i ≡ -1",
                    "4, 8",
                    true,
                    {sol({{2, 1, 1}, {4, 1, 3}, {4, 1, 3}}, Rational(-1, 4), {4, 8})}});
    rows.push_back({{3, 3, 3},
                    3,
                    "(±1, ±1, ±1)",
                    "q_i ≡ -1",
                    "3, 6, 9",
                    true,
                    {sol({{3, 1, 2}, {3, 1, 2}, {3, 1, 2}}, Rational(-1, 3), {3, 6, 9})}});
    rows.push_back({{2, 2, 2, 2},
                    2,
                    "(1, 1, 1, 1)",
                    "q_i ≡ 1",
                    "even",
                    true,
                    {sol({{2, 1, 1}, {2, 1, 1}, {2, 1, 1}, {2, 1, 1}},
                         Rational(-1, 2), even)}});
    rows.push_back({{3, 6},
                    3,
                    "(±1, ±1)",
                    "q_i ≡ 4",
                    "3, 6, 9",
                    false,
                    {sol({{3, 1, 1}, {6, 1, 4}}, Rational(2, 3), {3, 6, 9})}});
    rows.push_back({{9},
                    3,
                    "b_1 = ±2 q_1/3",
                    "q_1 = 3 or 6",
                    "≡ q_1/3 (mod 3)",
                    false,
                    {sol({{9, 2, 3}}, Rational(1, 3), {1, 4, 7}),
                     sol({{9, 4, 6}}, Rational(0), {2, 5, 8})}});
    rows.push_back({{2, 2, 4},
                    2,
                    "(1, 1, ±1)",
                    "q_i ≡ r_i/2",
                    "odd",
                    false,
                    {sol({{2, 1, 1}, {2, 1, 1}, {4, 1, 2}}, Rational(0), odd)}});
    rows.push_back({{4, 4},
                    2,
                    "(±1, ±1)",
                    "q_i ≡ r_i/2",
                    "even",
                    false,
                    {sol({{4, 1, 2}, {4, 1, 2}}, Rational(1, 2), even)}});
    rows.push_back({{2, 6},
                    2,
                    "(1, ±1)",
                    "q_i ≡ r_i/2",
                    "even",
                    false,
                    {sol({{2, 1, 1}, {6, 1, 3}}, Rational(1, 2), even)}});
    rows.push_back({{8},
                    2,
                    "(±1) or (±3)",
                    "q_i ≡ r_i/2",
                    "odd",
                    false,
                    {sol({{8, 1, 4}}, Rational(1), odd),
                     sol({{8, 3, 4}}, Rational(0), odd)}});
    return rows;
}

std::string label(const std::vector<int>& indices) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i)
            os << ",";
        os << indices[i];
    }
    os << ")";
    return os.str();
}

std::string points_str(const std::vector<CycQuotPoint>& pts) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i)
            os << ", ";
        os << "(" << pts[i].r() << "," << pts[i].b() << "," << pts[i].q() << ")";
    }
    os << "]";
    return os.str();
}

std::string ints_str(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ",";
        os << v[i];
    }
    os << "}";
    return os.str();
}

// Field-by-field comparison; any difference is reported with the row
// label and the offending column.
void diff_solution(const std::string& row, std::size_t pos,
                   const GoldenSolution& want, const FiberSolution& got,
                   bool want_regular, std::vector<std::string>& details) {
    const auto& gp = got.basket.points();
    std::ostringstream where;
    where << "row " << row << ", solution " << (pos + 1);

    if (gp.size() != want.points.size()) {
        details.push_back(where.str() + ", column basket: expected " +
                          points_str(want.points) + ", got " + points_str(gp));
        return;
    }
    for (std::size_t i = 0; i < gp.size(); ++i) {
        if (gp[i].r() != want.points[i].r()) {
            details.push_back(where.str() + ", column basket: expected " +
                              points_str(want.points) + ", got " + points_str(gp));
            return;
        }
    }
    for (std::size_t i = 0; i < gp.size(); ++i)
        if (gp[i].b() != want.points[i].b()) {
            std::ostringstream os;
            os << where.str() << ", column b: expected " << want.points[i].b()
               << " at index " << want.points[i].r() << ", got " << gp[i].b();
            details.push_back(os.str());
        }
    for (std::size_t i = 0; i < gp.size(); ++i)
        if (gp[i].q() != want.points[i].q()) {
            std::ostringstream os;
            os << where.str() << ", column q: expected " << want.points[i].q()
               << " at index " << want.points[i].r() << ", got " << gp[i].q();
            details.push_back(os.str());
        }
    if (got.delta0 != want.delta0)
        details.push_back(where.str() + ", column delta0: expected " +
                          want.delta0.str() + ", got " + got.delta0.str());
    if (got.k2_allowed != want.k2)
        details.push_back(where.str() + ", column K^2: expected " +
                          ints_str(want.k2) + ", got " + ints_str(got.k2_allowed));
    if (got.regular != want_regular)
        details.push_back(where.str() + ", column regular: expected " +
                          (want_regular ? "true" : "false") + ", got " +
                          (got.regular ? "true" : "false"));
}

}  // namespace

const std::vector<GoldenRow>& expected_table1() {
    static const std::vector<GoldenRow> rows = build_table1();
    return rows;
}

const std::map<int, Rational>& delta0_type9_by_q1() {
    static const std::map<int, Rational> m = {{3, Rational(1, 3)},
                                              {6, Rational(0)}};
    return m;
}

const std::map<int, Rational>& delta0_type8_by_b1() {
    static const std::map<int, Rational> m = {{1, Rational(1)},
                                              {3, Rational(0)}};
    return m;
}

std::vector<std::pair<std::string, std::string>> table2_columns() {
    return {{"regular", "-1/m_o"}, {"3,6", "2/3"},  {"9", "(6-q_1)/9"},
            {"2,2,4", "0"},        {"4,4", "1/2"},  {"2,6", "1/2"},
            {"8", "(3-|b_1|)/2"}};
}

GoldenDiff diff_report(const ClassificationReport& report) {
    GoldenDiff diff;
    if (report.m_o > 6) {
        diff.status = GoldenStatus::not_applicable;
        return diff;
    }

    if (report.m_o == 1) {
        // Trivial multiplicity: exactly one solution, the empty basket.
        bool ok = report.groups.size() == 1 &&
                  report.groups[0].solutions.size() == 1 &&
                  report.groups[0].solutions[0].basket.empty() &&
                  report.groups[0].solutions[0].k2_allowed ==
                      std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9};
        diff.status = ok ? GoldenStatus::match : GoldenStatus::mismatch;
        if (!ok)
            diff.details.push_back(
                "m_o = 1: expected the single trivial solution with an empty "
                "basket and K^2 = {1..9}");
        return diff;
    }

    std::vector<const GoldenRow*> rows;
    for (const auto& r : expected_table1())
        if (r.m_o == report.m_o)
            rows.push_back(&r);

    for (const GoldenRow* row : rows) {
        auto it = std::find_if(report.groups.begin(), report.groups.end(),
                               [&](const SolutionGroup& g) {
                                   return g.indices == row->type_label;
                               });
        if (it == report.groups.end()) {
            diff.details.push_back("missing row " + label(row->type_label));
            continue;
        }
        if (it->solutions.size() != row->solutions.size()) {
            std::ostringstream os;
            os << "row " << label(row->type_label) << ": expected "
               << row->solutions.size() << " solution(s), got "
               << it->solutions.size();
            diff.details.push_back(os.str());
            continue;
        }
        for (std::size_t i = 0; i < row->solutions.size(); ++i)
            diff_solution(label(row->type_label), i, row->solutions[i],
                          it->solutions[i], row->regular, diff.details);
    }
    for (const auto& g : report.groups) {
        bool known = std::any_of(
            rows.begin(), rows.end(),
            [&](const GoldenRow* r) { return r->type_label == g.indices; });
        if (!known)
            diff.details.push_back("unexpected index multiset " + label(g.indices));
    }

    diff.status =
        diff.details.empty() ? GoldenStatus::match : GoldenStatus::mismatch;
    return diff;
}

}  // namespace delpezzo
