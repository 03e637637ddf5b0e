#include "trustrec/report_csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace trustrec {
namespace {

ReportRow make_row(const std::string& algorithm, const std::string& similarity,
                   const std::string& segment, const EvalSummary& s) {
    return {algorithm,          similarity,        segment,           s.attempted,
            s.predicted,        s.coverage,        s.metrics.mae,     s.metrics.rmse,
            s.metrics.maue,     s.metrics.rmsue};
}

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::size_t parse_count(const std::string& s) {
    std::size_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
        throw std::runtime_error("bad count field '" + s + "'");
    }
    return v;
}

std::optional<double> parse_metric(const std::string& s) {
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
        throw std::runtime_error("bad metric field '" + s + "'");
    }
    return v;
}

}  // namespace

std::string format_fixed(std::optional<double> v) {
    if (!v) return {};
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", *v);
    return buf;
}

std::vector<ReportRow> report_rows(const std::string& algorithm, const std::string& similarity,
                                   const EvalReport& report) {
    std::vector<ReportRow> rows;
    rows.push_back(make_row(algorithm, similarity, "all", report));
    for (const auto& [cls, s] : report.segments) {
        rows.push_back(make_row(algorithm, similarity, std::string(to_string(cls)), s));
    }
    return rows;
}

void write_report_header(std::ostream& out) { out << kReportHeader << '\n'; }

void write_report_row(std::ostream& out, const ReportRow& r) {
    out << r.algorithm << ',' << r.similarity << ',' << r.segment << ',' << r.attempted << ','
        << r.predicted << ',' << format_fixed(r.coverage) << ',' << format_fixed(r.mae) << ','
        << format_fixed(r.rmse) << ',' << format_fixed(r.maue) << ',' << format_fixed(r.rmsue)
        << '\n';
}

std::vector<ReportRow> parse_report_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kReportHeader) {
        throw std::runtime_error("missing evaluation report header");
    }
    std::vector<ReportRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_commas(line);
        if (f.size() != 10) break;
        ReportRow r;
        r.algorithm = f[0];
        r.similarity = f[1];
        r.segment = f[2];
        r.attempted = parse_count(f[3]);
        r.predicted = parse_count(f[4]);
        r.coverage = parse_metric(f[5]);
        r.mae = parse_metric(f[6]);
        r.rmse = parse_metric(f[7]);
        r.maue = parse_metric(f[8]);
        r.rmsue = parse_metric(f[9]);
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace trustrec
