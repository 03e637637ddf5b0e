#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "trustrec/dataset.hpp"
#include "trustrec/rating_matrix.hpp"
#include "trustrec/trust_network.hpp"

namespace trustrec {

/// Raised when too many rows of a file fail to parse.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Layout of a delimited ratings file. A space delimiter matches any run of
/// blanks or tabs. Fields beyond the three roles are ignored.
struct RatingsFileFormat {
    char delimiter = '\t';
    int user_column = 0;
    int item_column = 1;
    int rating_column = 2;
    bool has_header = false;

    void validate() const;
};

/// Layout of a trust file: truster and trustee in the first two fields; a
/// trailing statement value, if any, is ignored.
struct TrustFileFormat {
    char delimiter = '\t';
    bool has_header = false;
    /// Read each row as two directed edges (friendship lists).
    bool symmetric = false;
};

/// Named layout for one of the public datasets, or the canonical CSV.
struct FormatPreset {
    std::string name;
    RatingsFileFormat ratings;
    TrustFileFormat trust;
    RatingScale scale;
};

/// "movielens", "epinions", "flixster" or "csv". Throws std::invalid_argument.
FormatPreset format_preset(std::string_view name);

struct IngestWarnings {
    std::size_t malformed = 0;
    std::size_t out_of_scale = 0;
    std::size_t duplicates = 0;
    std::size_t self_loops = 0;

    std::size_t total() const noexcept { return malformed + out_of_scale + duplicates + self_loops; }
};

struct LoadedRatings {
    RatingMatrix matrix;
    IngestWarnings warnings;
};

struct LoadedTrust {
    TrustNetwork network;
    IngestWarnings warnings;
};

/// Blank lines and lines starting with '#' or '%' are skipped. Out-of-scale
/// rows are dropped and counted; duplicate (user, item) rows keep the last
/// value. Throws FormatError("format mismatch") when more than 10% of data
/// rows are malformed.
LoadedRatings load_ratings(std::istream& in, const RatingsFileFormat& format,
                           const RatingScale& scale);

/// Self-loops are dropped and counted; parallel edges collapse to one.
LoadedTrust load_trust(std::istream& in, const TrustFileFormat& format);

/// "user,item,rating" with a header line; shortest round-trip decimals.
void write_ratings_csv(std::ostream& out, const RatingMatrix& matrix);
/// "truster,trustee" with a header line.
void write_trust_csv(std::ostream& out, const TrustNetwork& trust);

}  // namespace trustrec
