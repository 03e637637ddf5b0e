#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trustrec/evaluation.hpp"

namespace trustrec {

inline constexpr const char* kReportHeader =
    "algorithm,similarity,segment,attempted,predicted,coverage,mae,rmse,maue,rmsue";

/// One parsed row of an evaluation CSV. Absent metrics are empty fields.
struct ReportRow {
    std::string algorithm;
    std::string similarity;
    std::string segment;
    std::size_t attempted = 0;
    std::size_t predicted = 0;
    std::optional<double> coverage;
    std::optional<double> mae;
    std::optional<double> rmse;
    std::optional<double> maue;
    std::optional<double> rmsue;

    friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// Rows for the overall report ("all") followed by no, few and regular.
std::vector<ReportRow> report_rows(const std::string& algorithm, const std::string& similarity,
                                   const EvalReport& report);

void write_report_header(std::ostream& out);
/// Fixed column order, six decimal places.
void write_report_row(std::ostream& out, const ReportRow& row);

/// Parses a CSV produced by the writer. Throws std::runtime_error on a
/// header or field mismatch. Stops at the first non-report line.
std::vector<ReportRow> parse_report_csv(std::istream& in);

/// "%.6f", or an empty string when absent.
std::string format_fixed(std::optional<double> v);

}  // namespace trustrec
