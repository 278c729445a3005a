#pragma once

#include <string>
#include <vector>

#include "delpezzo/classifier.hpp"
#include "delpezzo/verify.hpp"

namespace delpezzo {

enum class OutputFormat { text, md, json };

/// Throws std::invalid_argument for anything but "text", "md", "json".
OutputFormat parse_format(const std::string& name);

std::string golden_status_str(GoldenStatus s);

/// Classification report in the requested format. The JSON layout is
/// fixed: {"m_o", "bounds"{"r_max","n_max","anchor_filter"}, "groups"
/// [{"indices","solutions"[{"points"[{"r","b","q"}],"regular","delta0",
/// "k2"}]}], "golden_status"}; it parses and re-renders byte-identically.
std::string render_report(const ClassificationReport& report, OutputFormat fmt);

struct ScanRow {
    int m_o;
    std::size_t solutions;
};
std::string render_scan(const std::vector<ScanRow>& rows,
                        const std::vector<int>& feasible, OutputFormat fmt);

std::string render_table1(OutputFormat fmt);
std::string render_table2(OutputFormat fmt);

std::string render_suites(const std::vector<SuiteResult>& suites,
                          OutputFormat fmt);

}  // namespace delpezzo
