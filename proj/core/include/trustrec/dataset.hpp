#pragma once

#include <cstddef>
#include <optional>

#include "trustrec/rating_matrix.hpp"
#include "trustrec/trust_network.hpp"

namespace trustrec {

/// A rating matrix paired with its trust graph. The matrix's user universe
/// covers every trust endpoint.
struct Dataset {
    RatingMatrix ratings;
    TrustNetwork trust;
};

/// Extends the matrix's user universe with every trust endpoint, so users that
/// only appear in the trust graph count as zero-rating users.
Dataset make_dataset(RatingMatrix ratings, TrustNetwork trust);

struct DatasetStats {
    std::size_t users = 0;
    std::size_t items = 0;
    std::size_t ratings = 0;
    /// 1 - ratings / (users * items); absent when users or items is zero.
    std::optional<double> sparsity;
    double avg_ratings_per_user = 0.0;
    std::size_t trust_statements = 0;
    double avg_trustees_per_user = 0.0;

    std::size_t no_rating_users = 0;
    std::size_t few_rating_users = 0;
    std::size_t regular_users = 0;
};

/// Statistics from raw counts, for tabulating datasets that are not loaded.
DatasetStats make_stats(std::size_t users, std::size_t items, std::size_t ratings,
                        std::size_t trust_statements = 0);

DatasetStats dataset_stats(const RatingMatrix& matrix, const TrustNetwork& trust);

}  // namespace trustrec
