#include "trustrec/ingestion.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <vector>

namespace trustrec {
namespace {

std::vector<std::string_view> split(std::string_view line, char delim) {
    std::vector<std::string_view> out;
    if (delim == ' ') {
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i == line.size()) break;
            const std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
            out.push_back(line.substr(start, i - start));
        }
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delim, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::optional<std::uint32_t> parse_id(std::string_view s) {
    s = trim(s);
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) return std::nullopt;
    if (v > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
    return static_cast<std::uint32_t>(v);
}

std::optional<double> parse_value(std::string_view s) {
    s = trim(s);
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

bool skippable(std::string_view line) {
    line = trim(line);
    return line.empty() || line.front() == '#' || line.front() == '%';
}

// Visits every data line; returns (data rows, malformed rows).
template <typename RowFn>
std::pair<std::size_t, std::size_t> scan(std::istream& in, bool has_header, RowFn&& row) {
    std::string line;
    bool header_pending = has_header;
    std::size_t rows = 0;
    std::size_t malformed = 0;
    while (std::getline(in, line)) {
        if (skippable(line)) continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }
        ++rows;
        if (!row(std::string_view(line))) ++malformed;
    }
    return {rows, malformed};
}

void check_malformed(std::size_t rows, std::size_t malformed) {
    // More than 10% unparseable rows means the layout is wrong, not the data.
    if (malformed * 10 > rows) {
        throw FormatError("format mismatch: " + std::to_string(malformed) + " of " +
                          std::to_string(rows) + " rows could not be parsed");
    }
}

std::string shortest(double v) {
    char buf[32];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

}  // namespace

void RatingsFileFormat::validate() const {
    if (user_column < 0 || item_column < 0 || rating_column < 0 || user_column == item_column ||
        user_column == rating_column || item_column == rating_column) {
        throw std::invalid_argument("ratings format needs three distinct non-negative columns");
    }
}

FormatPreset format_preset(std::string_view name) {
    if (name == "movielens") {
        return {"movielens", {'\t', 0, 1, 2, false}, {'\t', false, false}, RatingScale(1, 5)};
    }
    if (name == "epinions") {
        return {"epinions", {' ', 0, 1, 2, false}, {' ', false, false}, RatingScale(1, 5)};
    }
    if (name == "flixster") {
        return {"flixster", {'\t', 0, 1, 2, false}, {'\t', false, false}, RatingScale(1, 10)};
    }
    if (name == "csv") {
        return {"csv", {',', 0, 1, 2, true}, {',', true, false}, RatingScale(1, 5)};
    }
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

LoadedRatings load_ratings(std::istream& in, const RatingsFileFormat& format,
                           const RatingScale& scale) {
    format.validate();
    const auto needed = static_cast<std::size_t>(
        std::max({format.user_column, format.item_column, format.rating_column}) + 1);

    RatingMatrix::Builder builder(scale);
    IngestWarnings warnings;
    const auto [rows, malformed] = scan(in, format.has_header, [&](std::string_view line) {
        const auto fields = split(line, format.delimiter);
        if (fields.size() < needed) return false;
        const auto user = parse_id(fields[format.user_column]);
        const auto item = parse_id(fields[format.item_column]);
        const auto value = parse_value(fields[format.rating_column]);
        if (!user || !item || !value) return false;
        if (!scale.contains(*value)) {
            ++warnings.out_of_scale;
            return true;
        }
        builder.add(UserId{*user}, ItemId{*item}, *value);
        return true;
    });
    check_malformed(rows, malformed);
    warnings.malformed = malformed;
    warnings.duplicates = builder.duplicates();
    return {std::move(builder).build(), warnings};
}

LoadedTrust load_trust(std::istream& in, const TrustFileFormat& format) {
    TrustNetwork::Builder builder;
    const auto [rows, malformed] = scan(in, format.has_header, [&](std::string_view line) {
        const auto fields = split(line, format.delimiter);
        if (fields.size() < 2) return false;
        const auto from = parse_id(fields[0]);
        const auto to = parse_id(fields[1]);
        if (!from || !to) return false;
        builder.add(UserId{*from}, UserId{*to});
        if (format.symmetric && *from != *to) builder.add(UserId{*to}, UserId{*from});
        return true;
    });
    check_malformed(rows, malformed);
    IngestWarnings warnings;
    warnings.malformed = malformed;
    warnings.self_loops = builder.self_loops();
    const std::size_t accepted = builder.accepted();
    TrustNetwork net = std::move(builder).build();
    warnings.duplicates = accepted - net.statement_count();
    return {std::move(net), warnings};
}

void write_ratings_csv(std::ostream& out, const RatingMatrix& matrix) {
    out << "user,item,rating\n";
    for (UserId u : matrix.users()) {
        for (const Rating& r : matrix.profile(u)) {
            out << raw(u) << ',' << raw(r.item) << ',' << shortest(r.value) << '\n';
        }
    }
}

void write_trust_csv(std::ostream& out, const TrustNetwork& trust) {
    out << "truster,trustee\n";
    for (UserId u : trust.trusters()) {
        for (UserId v : trust.trustees(u)) out << raw(u) << ',' << raw(v) << '\n';
    }
}

}  // namespace trustrec
