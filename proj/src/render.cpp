#include "delpezzo/render.hpp"

#include <json.hpp>

#include <sstream>

#include "delpezzo/goldens.hpp"

namespace delpezzo {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string type_label(const std::vector<int>& indices) {
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

std::string set_str(const std::vector<int>& v) {
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

std::string points_str(const Basket& basket) {
    std::ostringstream os;
    os << "[";
    const auto& pts = basket.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i)
            os << ", ";
        os << "(" << pts[i].r() << "," << pts[i].b() << "," << pts[i].q() << ")";
    }
    os << "]";
    return os.str();
}

// Table-style weight rendering: b and r-b are the same point, so every
// weight with r >= 3 prints with a sign ambiguity.
std::string b_pattern_str(const Basket& basket) {
    std::ostringstream os;
    os << "(";
    const auto& pts = basket.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i)
            os << ", ";
        if (pts[i].r() == 2)
            os << pts[i].b();
        else
            os << "±" << pts[i].b();
    }
    os << ")";
    return os.str();
}

std::string q_tuple_str(const Basket& basket) {
    std::ostringstream os;
    os << "(";
    const auto& pts = basket.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i)
            os << ", ";
        os << pts[i].q();
    }
    os << ")";
    return os.str();
}

ordered_json report_to_json(const ClassificationReport& report) {
    ordered_json j;
    j["m_o"] = report.m_o;
    j["bounds"] = {{"r_max", report.bounds.r_max},
                   {"n_max", report.bounds.n_max},
                   {"anchor_filter", report.bounds.anchor_filter}};
    j["groups"] = ordered_json::array();
    for (const auto& g : report.groups) {
        ordered_json jg;
        jg["indices"] = g.indices;
        jg["solutions"] = ordered_json::array();
        for (const auto& s : g.solutions) {
            ordered_json js;
            js["points"] = ordered_json::array();
            for (const auto& p : s.basket.points())
                js["points"].push_back(
                    {{"r", p.r()}, {"b", p.b()}, {"q", p.q()}});
            js["regular"] = s.regular;
            js["delta0"] = s.delta0.str();
            js["k2"] = s.k2_allowed;
            jg["solutions"].push_back(std::move(js));
        }
        j["groups"].push_back(std::move(jg));
    }
    j["golden_status"] = golden_status_str(report.golden_status);
    return j;
}

void render_solution_text(std::ostream& os, const FiberSolution& s) {
    os << "  basket " << points_str(s.basket) << "  b=" << b_pattern_str(s.basket)
       << "  q=" << q_tuple_str(s.basket);
    if (s.regular)
        os << "  regular";
    if (!s.anchored)
        os << "  [anchor condition fails]";
    os << "\n";
    os << "  delta0=" << s.delta0.str() << "  K^2=" << set_str(s.k2_allowed)
       << "\n";
}

std::string render_report_text(const ClassificationReport& r) {
    std::ostringstream os;
    os << "classification m_o=" << r.m_o << " (r_max=" << r.bounds.r_max
       << ", n_max=" << r.bounds.n_max << ", anchor_filter="
       << (r.bounds.anchor_filter ? "on" : "off") << ")\n";
    os << "solutions: " << r.solution_count() << " in " << r.groups.size()
       << " group(s)\n";
    bool any_unanchored = false;
    for (const auto& g : r.groups) {
        bool group_anchored = true;
        for (const auto& s : g.solutions)
            group_anchored = group_anchored && s.anchored;
        if (!group_anchored) {
            any_unanchored = true;
            continue;
        }
        os << "\ntype " << type_label(g.indices) << "\n";
        for (const auto& s : g.solutions)
            render_solution_text(os, s);
    }
    if (any_unanchored) {
        os << "\narithmetic-only solutions (anchor condition fails):\n";
        for (const auto& g : r.groups)
            for (const auto& s : g.solutions)
                if (!s.anchored) {
                    os << "\ntype " << type_label(g.indices) << "\n";
                    render_solution_text(os, s);
                }
    }
    for (const auto& n : r.notes)
        os << "\nnote: " << n << "\n";
    os << "\ngolden: " << golden_status_str(r.golden_status) << "\n";
    for (const auto& d : r.golden_details)
        os << "  " << d << "\n";
    return os.str();
}

std::string render_report_md(const ClassificationReport& r) {
    std::ostringstream os;
    os << "## classification m_o=" << r.m_o << "\n\n";
    os << "bounds: r_max=" << r.bounds.r_max << ", n_max=" << r.bounds.n_max
       << ", anchor_filter=" << (r.bounds.anchor_filter ? "on" : "off")
       << "\n\n";
    os << "| type | m_o | basket | b | q | K^2 |\n";
    os << "|------|-----|--------|---|---|-----|\n";
    for (const auto& g : r.groups)
        for (const auto& s : g.solutions) {
            os << "| " << type_label(g.indices) << " | " << r.m_o << " | "
               << points_str(s.basket) << " | " << b_pattern_str(s.basket)
               << " | " << q_tuple_str(s.basket) << " | "
               << set_str(s.k2_allowed) << " |\n";
        }
    for (const auto& n : r.notes)
        os << "\n*note: " << n << "*\n";
    os << "\ngolden: " << golden_status_str(r.golden_status) << "\n";
    for (const auto& d : r.golden_details)
        os << "- " << d << "\n";
    return os.str();
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "text")
        return OutputFormat::text;
    if (name == "md")
        return OutputFormat::md;
    if (name == "json")
        return OutputFormat::json;
    throw std::invalid_argument("unknown format '" + name +
                                "' (expected text, md, or json)");
}

std::string golden_status_str(GoldenStatus s) {
    switch (s) {
        case GoldenStatus::match:
            return "match";
        case GoldenStatus::mismatch:
            return "mismatch";
        case GoldenStatus::not_applicable:
            return "n/a";
    }
    return "n/a";
}

std::string render_report(const ClassificationReport& report, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json:
            return report_to_json(report).dump(2) + "\n";
        case OutputFormat::md:
            return render_report_md(report);
        case OutputFormat::text:
            break;
    }
    return render_report_text(report);
}

std::string render_scan(const std::vector<ScanRow>& rows,
                        const std::vector<int>& feasible, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["rows"] = ordered_json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"m_o", r.m_o}, {"solutions", r.solutions}});
        j["feasible"] = feasible;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == OutputFormat::md) {
        os << "| m_o | solutions |\n|-----|-----------|\n";
        for (const auto& r : rows)
            os << "| " << r.m_o << " | " << r.solutions << " |\n";
    } else {
        for (const auto& r : rows)
            os << "m_o=" << r.m_o << ": " << r.solutions << " solution(s)\n";
    }
    os << "feasible: " << set_str(feasible) << "\n";
    return os.str();
}

std::string render_table1(OutputFormat fmt) {
    const auto& rows = expected_table1();
    if (fmt == OutputFormat::json) {
        ordered_json j = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json jr;
            jr["type"] = row.type_label;
            jr["m_o"] = row.m_o;
            jr["b"] = row.b_pattern;
            jr["q"] = row.q_pattern;
            jr["k2"] = row.k2_pattern;
            jr["regular"] = row.regular;
            jr["solutions"] = ordered_json::array();
            for (const auto& s : row.solutions) {
                ordered_json js;
                js["points"] = ordered_json::array();
                for (const auto& p : s.points)
                    js["points"].push_back(
                        {{"r", p.r()}, {"b", p.b()}, {"q", p.q()}});
                js["delta0"] = s.delta0.str();
                js["k2"] = s.k2;
                jr["solutions"].push_back(std::move(js));
            }
            j.push_back(std::move(jr));
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == OutputFormat::md) {
        os << "| type | m_o | basket | b | q | K^2 |\n";
        os << "|------|-----|--------|---|---|-----|\n";
        for (const auto& row : rows) {
            os << "| " << type_label(row.type_label) << " | " << row.m_o
               << " | " << type_label(row.type_label) << " | " << row.b_pattern
               << " | " << row.q_pattern << " | " << row.k2_pattern << " |\n";
        }
    } else {
        for (const auto& row : rows) {
            os << "type " << type_label(row.type_label) << "  m_o=" << row.m_o
               << "  b=" << row.b_pattern << "  q=" << row.q_pattern
               << "  K^2: " << row.k2_pattern
               << (row.regular ? "  regular" : "") << "\n";
        }
    }
    return os.str();
}

std::string render_table2(OutputFormat fmt) {
    const auto cols = table2_columns();
    if (fmt == OutputFormat::json) {
        ordered_json j = ordered_json::array();
        for (const auto& [type, d0] : cols)
            j.push_back({{"type", type}, {"delta0", d0}});
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == OutputFormat::md) {
        auto esc = [](std::string s) {
            for (std::size_t i = 0; i < s.size(); ++i)
                if (s[i] == '|')
                    s.insert(i++, 1, '\\');
            return s;
        };
        os << "|  |";
        for (const auto& [type, d0] : cols)
            os << " " << esc(type) << " |";
        os << "\n|--|";
        for (std::size_t i = 0; i < cols.size(); ++i)
            os << "---|";
        os << "\n| delta0 |";
        for (const auto& [type, d0] : cols)
            os << " " << esc(d0) << " |";
        os << "\n";
    } else {
        for (const auto& [type, d0] : cols)
            os << type << ": delta0 = " << d0 << "\n";
    }
    return os.str();
}

std::string render_suites(const std::vector<SuiteResult>& suites,
                          OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json j = ordered_json::array();
        for (const auto& s : suites) {
            ordered_json js;
            js["suite"] = s.name;
            js["passed"] = s.passed;
            js["failed"] = s.failed;
            js["counterexamples"] = s.counterexamples;
            js["info"] = s.info;
            j.push_back(std::move(js));
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& s : suites) {
        os << "suite " << s.name << ": " << (s.ok() ? "PASS" : "FAIL")
           << " (instances=" << s.instances() << ", failed=" << s.failed
           << ")\n";
        for (const auto& i : s.info)
            os << "  " << i << "\n";
        for (const auto& c : s.counterexamples)
            os << "  counterexample: " << c << "\n";
    }
    return os.str();
}

}  // namespace delpezzo
