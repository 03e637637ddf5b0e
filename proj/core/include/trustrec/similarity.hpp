#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "trustrec/rating_matrix.hpp"

namespace trustrec {

/// User-user weight in [-1, 1].
using Weight = double;

enum class SimilarityMeasure { Correlation, VectorSimilarity, InverseUserFrequency };

std::string_view to_string(SimilarityMeasure m);
SimilarityMeasure parse_similarity_measure(std::string_view name);

inline constexpr double kDefaultAmplificationRho = 2.5;

struct SimilarityConfig {
    SimilarityMeasure measure = SimilarityMeasure::Correlation;
    /// Case amplification exponent applied on top of the base measure.
    std::optional<double> amplification_rho;
    int min_overlap = 2;

    /// Throws std::invalid_argument on min_overlap < 2 or rho <= 1.
    void validate() const;
    /// Short label such as "pearson" or "pearson+rho2.5".
    std::string label() const;
};

/// Pearson correlation over co-rated items, with means taken over the
/// co-rated set. Absent when fewer than `min_overlap` items are shared or
/// either side is constant on them.
std::optional<Weight> pearson(RatingView view, UserId a, UserId u, int min_overlap = 2);

/// Cosine of the co-rated rating vectors.
std::optional<Weight> cosine(RatingView view, UserId a, UserId u, int min_overlap = 2);

/// ln(m / m_j), m = users with at least one rating, m_j = raters of `item`.
/// Throws std::domain_error("undefined factor") for an unrated item.
double iuf_factor(RatingView view, ItemId item);

/// Weighted Pearson with per-item weights iuf_factor(j): weighted means,
/// weighted covariance and variances. Absent under the pearson conditions or
/// when every co-rated weight is zero.
std::optional<Weight> iuf_pearson(RatingView view, UserId a, UserId u, int min_overlap = 2);

/// sign(w) * |w|^rho.
Weight case_amplify(Weight w, double rho);

/// Dispatches on config.measure, then amplifies when a rho is configured.
std::optional<Weight> similarity(RatingView view, UserId a, UserId u,
                                 const SimilarityConfig& config);

}  // namespace trustrec
