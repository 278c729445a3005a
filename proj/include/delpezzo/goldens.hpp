#pragma once

#include <map>
#include <string>
#include <vector>

#include "delpezzo/classifier.hpp"

namespace delpezzo {

struct GoldenSolution {
    std::vector<CycQuotPoint> points;  // canonical order
    Rational delta0;
    std::vector<int> k2;
};

/**
 * One row of the embedded classification table: the type label, the
 * column texts as printed, and the concrete solutions the classifier
 * must reproduce. Pure data, never recomputed.
 */
struct GoldenRow {
    std::vector<int> type_label;
    int m_o;
    std::string b_pattern;
    std::string q_pattern;
    std::string k2_pattern;
    bool regular;
    std::vector<GoldenSolution> solutions;
};

/// The eleven rows of the classification table, in table order.
const std::vector<GoldenRow>& expected_table1();

/// delta0 of type (9) keyed by q_1, and of type (8) keyed by b_1.
const std::map<int, Rational>& delta0_type9_by_q1();
const std::map<int, Rational>& delta0_type8_by_b1();

/// delta0 column of the fiber-degree table, keyed by type column name.
std::vector<std::pair<std::string, std::string>> table2_columns();

struct GoldenDiff {
    GoldenStatus status = GoldenStatus::not_applicable;
    std::vector<std::string> details;
};

/**
 * Structural comparison of a classification report against the golden
 * rows for its multiplicity. Only defined for m_o <= 6; larger m_o gets
 * not_applicable. Mismatch details name the row and column.
 */
GoldenDiff diff_report(const ClassificationReport& report);

}  // namespace delpezzo
