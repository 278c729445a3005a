// Acceptance suite: drives the CLI end to end and checks each criterion,
// printing one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "delpezzo/classifier.hpp"
#include "delpezzo/goldens.hpp"
#include "delpezzo/verify.hpp"
#include "subprocess.hpp"

using nlohmann::ordered_json;
using namespace delpezzo;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
};

void report(int id, const std::string& name, bool ok, const std::string& why = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id,
                name.c_str(), why.empty() ? "" : " -- ", why.c_str());
    if (!ok)
        ++g_failures;
}

ordered_json classify_json(int m, bool& exit_ok) {
    std::ostringstream cmd;
    cmd << "classify --m " << m << " --format json";
    auto res = run_tool(cmd.str(), /*merge_stderr=*/false);
    exit_ok = res.status == 0;
    if (!exit_ok)
        return ordered_json::object();
    return ordered_json::parse(res.out, nullptr, /*allow_exceptions=*/false);
}

bool group_has(const ordered_json& j, const std::vector<int>& indices,
               const ordered_json** out) {
    for (const auto& g : j["groups"])
        if (g["indices"] == ordered_json(indices)) {
            *out = &g;
            return true;
        }
    return false;
}

bool q_equals_half_r(const ordered_json& group) {
    for (const auto& s : group["solutions"])
        for (const auto& p : s["points"])
            if (p["q"].get<int>() * 2 != p["r"].get<int>())
                return false;
    return true;
}

bool q_is_minus_one(const ordered_json& group) {
    for (const auto& s : group["solutions"])
        for (const auto& p : s["points"])
            if (p["q"].get<int>() != p["r"].get<int>() - 1)
                return false;
    return true;
}

bool k2_is(const ordered_json& group, const std::vector<int>& want) {
    for (const auto& s : group["solutions"])
        if (s["k2"] != ordered_json(want))
            return false;
    return true;
}

const std::vector<int> kOdd = {1, 3, 5, 7, 9};
const std::vector<int> kEven = {2, 4, 6, 8};

bool criterion1() {
    Timer t;
    bool exit_ok = false;
    auto j = classify_json(2, exit_ok);
    if (!exit_ok || j.is_discarded())
        return false;
    bool ok = j["golden_status"] == "match" && j["groups"].size() == 5;

    const ordered_json* g = nullptr;
    ok = ok && group_has(j, {2, 2, 2, 2}, &g) && q_equals_half_r(*g) &&
         g->at("solutions").size() == 1 &&
         g->at("solutions")[0]["delta0"] == "-1/2" && k2_is(*g, kEven);
    ok = ok && group_has(j, {2, 2, 4}, &g) && q_equals_half_r(*g) &&
         g->at("solutions")[0]["delta0"] == "0" && k2_is(*g, kOdd);
    ok = ok && group_has(j, {4, 4}, &g) && q_equals_half_r(*g) &&
         g->at("solutions")[0]["delta0"] == "1/2" && k2_is(*g, kEven);
    ok = ok && group_has(j, {2, 6}, &g) && q_equals_half_r(*g) &&
         g->at("solutions")[0]["delta0"] == "1/2" && k2_is(*g, kEven);
    ok = ok && group_has(j, {8}, &g) && q_equals_half_r(*g) &&
         g->at("solutions").size() == 2 &&
         g->at("solutions")[0]["points"][0]["b"] == 1 &&
         g->at("solutions")[0]["delta0"] == "1" &&
         g->at("solutions")[1]["points"][0]["b"] == 3 &&
         g->at("solutions")[1]["delta0"] == "0" && k2_is(*g, kOdd);

    // every weight is 1 except the two canonical choices at index 8
    if (ok)
        for (const auto& grp : j["groups"])
            for (const auto& s : grp["solutions"])
                for (const auto& p : s["points"])
                    if (p["r"] != 8 && p["b"] != 1)
                        ok = false;
    return ok && t.seconds() < 5.0;
}

bool criterion2() {
    Timer t;
    bool exit_ok = false;
    auto j = classify_json(3, exit_ok);
    if (!exit_ok || j.is_discarded())
        return false;
    bool ok = j["golden_status"] == "match" && j["groups"].size() == 3;

    const ordered_json* g = nullptr;
    ok = ok && group_has(j, {3, 3, 3}, &g) && q_is_minus_one(*g) &&
         g->at("solutions")[0]["delta0"] == "-1/3" && k2_is(*g, {3, 6, 9});
    ok = ok && group_has(j, {3, 6}, &g) &&
         g->at("solutions").size() == 1 &&
         g->at("solutions")[0]["points"][0]["q"] == 1 &&
         g->at("solutions")[0]["points"][1]["q"] == 4 &&
         g->at("solutions")[0]["delta0"] == "2/3" && k2_is(*g, {3, 6, 9});
    // type (9): q = 3 with b = +-2 gives delta0 = 1/3 and K^2 = q_1/3 mod 3;
    // q = 6 with b = +-4 gives delta0 = 0
    ok = ok && group_has(j, {9}, &g) && g->at("solutions").size() == 2;
    if (ok) {
        const auto& s0 = g->at("solutions")[0];
        const auto& s1 = g->at("solutions")[1];
        ok = s0["points"][0]["q"] == 3 && s0["points"][0]["b"] == 2 &&
             s0["delta0"] == "1/3" && s0["k2"] == ordered_json({1, 4, 7}) &&
             s1["points"][0]["q"] == 6 && s1["points"][0]["b"] == 4 &&
             s1["delta0"] == "0" && s1["k2"] == ordered_json({2, 5, 8});
    }
    return ok && t.seconds() < 5.0;
}

bool criterion3() {
    struct Want {
        int m;
        std::vector<int> indices;
        std::vector<int> k2;
    };
    const std::vector<Want> wants = {
        {4, {2, 4, 4}, {4, 8}}, {5, {5, 5}, {5}}, {6, {2, 3, 6}, {6}}};
    for (const auto& w : wants) {
        Timer t;
        bool exit_ok = false;
        auto j = classify_json(w.m, exit_ok);
        if (!exit_ok || j.is_discarded())
            return false;
        if (j["golden_status"] != "match" || j["groups"].size() != 1)
            return false;
        const ordered_json* g = nullptr;
        if (!group_has(j, w.indices, &g) || !q_is_minus_one(*g) ||
            !k2_is(*g, w.k2))
            return false;
        if (w.m == 5) {
            // surviving canonical weights are exactly {1, 2}: 1^2 + 2^2 = 0 mod 5
            if (g->at("solutions").size() != 1)
                return false;
            const auto& pts = g->at("solutions")[0]["points"];
            if (!(pts[0]["b"] == 1 && pts[1]["b"] == 2))
                return false;
        }
        if (t.seconds() >= 10.0)
            return false;
    }
    return true;
}

bool criterion4() {
    Timer t;
    auto scan = run_tool("scan --from 7 --to 12 --format json", false);
    if (scan.status != 0)
        return false;
    auto j = ordered_json::parse(scan.out, nullptr, false);
    if (j.is_discarded() || !j["feasible"].empty())
        return false;
    for (const auto& row : j["rows"])
        if (row["solutions"] != 0)
            return false;

    auto m8 = run_tool("classify --m 8");
    if (m8.status != 0 ||
        m8.out.find("anchor condition cannot hold") == std::string::npos)
        return false;
    auto m9 = run_tool("classify --m 9");
    if (m9.status != 0 || m9.out.find("sum r_i = 2") == std::string::npos)
        return false;
    return t.seconds() < 120.0;
}

bool criterion5(std::string& why) {
    Timer t;
    auto res = run_tool("verify --suite lemma-sp --rmax 60 --format json", false);
    if (res.status != 0) {
        why = "suite failed";
        return false;
    }
    auto j = ordered_json::parse(res.out, nullptr, false);
    if (j.is_discarded() || j[0]["failed"] != 0)
        return false;
    long long instances = j[0]["passed"].get<long long>();
    std::ostringstream os;
    os << "instances=" << instances << " time=" << t.seconds() << "s";
    why = os.str();
    return instances >= 10000 && t.seconds() < 30.0;
}

bool criterion6(std::string& why) {
    Timer t;
    for (const char* suite :
         {"periodicity", "full-period", "specializations", "su-div"}) {
        std::ostringstream cmd;
        cmd << "verify --suite " << suite << " --rmax 60";
        auto res = run_tool(cmd.str());
        if (res.status != 0) {
            why = std::string("suite ") + suite + " failed";
            return false;
        }
    }
    std::ostringstream os;
    os << "time=" << t.seconds() << "s";
    why = os.str();
    return t.seconds() < 60.0;
}

bool criterion7() {
    Timer t;
    auto res = run_tool("verify --suite prime-bound");
    if (res.status != 0)
        return false;
    if (res.out.find("solvable primes: 2 3 5 11") == std::string::npos)
        return false;
    // exact multiset counts, checked against the library directly
    if (prime_index_multisets(2).size() != 5 ||
        prime_index_multisets(3).size() != 3 ||
        prime_index_multisets(5).size() != 2 ||
        prime_index_multisets(11).size() != 1)
        return false;
    if (prime_exclusion_check(5, {10}) || prime_exclusion_check(11, {11}))
        return false;
    for (const auto& row : expected_table1()) {
        if (row.m_o != 2 && row.m_o != 3 && row.m_o != 5)
            continue;
        if (!prime_exclusion_check(row.m_o, row.type_label))
            return false;
    }
    return t.seconds() < 5.0;
}

bool criterion8() {
    for (int m = 2; m <= 6; ++m) {
        std::ostringstream cmd;
        cmd << "classify --m " << m;
        auto res = run_tool(cmd.str());
        if (res.status != 0 ||
            res.out.find("golden: match") == std::string::npos)
            return false;
    }
    auto bad = run_tool("classify --m 6 --selftest-corrupt q");
    return bad.status == 1 &&
           bad.out.find("row (2,3,6)") != std::string::npos &&
           bad.out.find("column q") != std::string::npos;
}

bool criterion9(std::string& why) {
    Timer t;
    SearchBounds defaults;
    SearchBounds wide;
    wide.n_max = 10;
    for (int m = 2; m <= 6; ++m)
        if (search(m, defaults) != search(m, wide)) {
            why = "solution set changed at m=" + std::to_string(m);
            return false;
        }
    std::ostringstream os;
    os << "time=" << t.seconds() << "s";
    why = os.str();
    return t.seconds() < 120.0;
}

}  // namespace

int main() {
    std::string why;

    report(1, "classify --m 2 reproduces the five multiplicity-2 rows",
           criterion1());
    report(2, "classify --m 3 reproduces (9), (3,3,3), (3,6)", criterion2());
    report(3, "classify --m 4/5/6 give (2,4,4), (5,5), (2,3,6)", criterion3());
    report(4, "scan 7..12 empty; m=8/9 print closed-form contradictions",
           criterion4());
    why.clear();
    report(5, "lemma-sp suite exact over r <= 60", criterion5(why), why);
    why.clear();
    report(6, "periodicity/full-period/specializations/su-div suites",
           criterion6(why), why);
    report(7, "prime-bound suite: {2,3,5,11} with 5/3/2/1 multisets",
           criterion7());
    report(8, "golden diff exits 0 on match, 1 naming row/column on corruption",
           criterion8());
    why.clear();
    report(9, "search saturated at default bounds (n_max = 10 identical)",
           criterion9(why), why);

    if (g_failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
