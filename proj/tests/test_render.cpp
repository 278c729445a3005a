#include <doctest.h>

#include "delpezzo/render.hpp"

using namespace delpezzo;

TEST_CASE("format parsing") {
    CHECK(parse_format("text") == OutputFormat::text);
    CHECK(parse_format("md") == OutputFormat::md);
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("golden status strings") {
    CHECK(golden_status_str(GoldenStatus::match) == "match");
    CHECK(golden_status_str(GoldenStatus::mismatch) == "mismatch");
    CHECK(golden_status_str(GoldenStatus::not_applicable) == "n/a");
}

// Solutions that satisfy the master system but fail the anchor condition
// go under their own heading when the filter is off.
TEST_CASE("arithmetic-only solutions render under a separate heading") {
    ClassificationReport r;
    r.m_o = 4;
    r.bounds.anchor_filter = false;
    FiberSolution s;
    s.m_o = 4;
    s.basket = Basket::of({{2, 1, 1}, {2, 1, 1}});
    s.index_multiset = {2, 2};
    s.delta0 = Rational(0);
    s.k2_allowed = {3, 7};
    s.anchored = false;
    s.regular = false;
    r.groups.push_back({{2, 2}, {s}});
    r.golden_status = GoldenStatus::not_applicable;

    auto text = render_report(r, OutputFormat::text);
    CHECK(text.find("arithmetic-only solutions (anchor condition fails)") !=
          std::string::npos);
    CHECK(text.find("[anchor condition fails]") != std::string::npos);
}

TEST_CASE("scan rendering") {
    auto md = render_scan({{2, 6}, {7, 0}}, {2}, OutputFormat::md);
    CHECK(md.find("| 2 | 6 |") != std::string::npos);
    CHECK(md.find("feasible: {2}") != std::string::npos);
}

TEST_CASE("weight rendering keeps the sign ambiguity off index 2") {
    ClassificationReport r;
    r.m_o = 6;
    FiberSolution s;
    s.basket = Basket::of({{2, 1, 1}, {3, 1, 2}, {6, 1, 5}});
    s.index_multiset = {2, 3, 6};
    s.k2_allowed = {6};
    s.delta0 = Rational(-1, 6);
    r.groups.push_back({{2, 3, 6}, {s}});
    auto text = render_report(r, OutputFormat::text);
    CHECK(text.find("b=(1, ±1, ±1)") != std::string::npos);
    CHECK(text.find("basket [(2,1,1), (3,1,2), (6,1,5)]") != std::string::npos);
}
