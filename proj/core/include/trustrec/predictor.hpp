#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "trustrec/neighborhood.hpp"
#include "trustrec/rating_matrix.hpp"
#include "trustrec/similarity.hpp"
#include "trustrec/trust_network.hpp"

namespace trustrec {

struct PredictorConfig {
    Strategy strategy = Traditional{};
    SimilarityConfig similarity{};
    /// Weight given to a trusted contributor whose similarity is undefined
    /// (TrustAware and Hybrid only). Must lie in (0, 1].
    double trust_fallback_weight = 1.0;
    bool clamp_to_scale = true;
    /// Use the global mean when the active user has no remaining ratings.
    bool global_mean_fallback = true;

    void validate() const;
};

enum class PredictionFailure { NoNeighbours, NoContributors, ZeroWeightMass, NoActiveMean };

std::string_view to_string(PredictionFailure f);

struct PredictionOutcome {
    std::optional<double> value;
    /// Contributors with a defined weight.
    std::size_t contributor_count = 0;
    /// True when the raw value fell outside the scale and was clamped.
    bool clamped = false;
    std::optional<PredictionFailure> failure;

    bool ok() const noexcept { return value.has_value(); }
};

/// Budget for the elastic predictor, in trust edges scanned beyond the first
/// hop.
struct ElasticConfig {
    std::size_t budget = 0;
    std::size_t min_contributors = 5;
};

struct ElasticOutcome {
    PredictionOutcome outcome;
    /// Propagation depth the outcome was computed at.
    int depth = 1;
    std::size_t edges_visited = 0;
};

/// Similarity when defined; otherwise the trust fallback weight when the
/// strategy is TrustAware or Hybrid and `a` trusts `u`; otherwise absent.
std::optional<Weight> weight_for(RatingView view, const TrustNetwork& trust, UserId a, UserId u,
                                 const PredictorConfig& config);

/// Mean-centred weighted sum over the strategy's contributors:
///   P = mean(a) + sum (r_uj - mean(u)) w_au / sum |w_au|
/// Both means are taken over items other than j, so a neighbour whose only
/// rating is r_uj cannot contribute. The rating r_aj, if present, is hidden
/// from every term, so the call is leave-one-out safe. PropagatedTrust strategies route to
/// predict_propagated.
PredictionOutcome predict(RatingView view, const TrustNetwork& trust, UserId a, ItemId j,
                          const PredictorConfig& config);

/// Same combination over raters within `d_max` trust hops, weighted by
/// linear distance decay (d_max - d + 1) / d_max.
PredictionOutcome predict_propagated(RatingView view, const TrustNetwork& trust, UserId a,
                                     ItemId j, int d_max, const PredictorConfig& config);

/// Starts at one hop and deepens while fewer than min_contributors raters
/// are reachable and the next level still fits in the budget. Never scans
/// more than budget + out_degree(a) edges.
ElasticOutcome predict_elastic(RatingView view, const TrustNetwork& trust, UserId a, ItemId j,
                               const ElasticConfig& elastic, const PredictorConfig& config);

}  // namespace trustrec
