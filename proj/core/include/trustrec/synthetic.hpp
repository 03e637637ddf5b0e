#pragma once

#include <cstddef>
#include <cstdint>

#include "trustrec/dataset.hpp"

namespace trustrec {

/// Knobs for the trust-correlated dataset generator.
///
/// Users belong to communities. A user's latent taste interpolates between
/// the community centroid and a private vector with weight `coupling`, and
/// each trust edge stays inside the community with probability `coupling`.
/// Coupling 0 therefore makes trust independent of taste; coupling 1 gives
/// every trusted pair the same latent vector.
struct SyntheticParams {
    std::size_t users = 1000;
    std::size_t items = 500;
    /// Mean rating count of non-cold-start users (at least 6 each).
    double ratings_per_user = 25.0;
    /// Mean trust out-degree over all users.
    double trust_out_degree = 10.0;
    int latent_dim = 8;
    double coupling = 0.5;
    /// Fraction of users given 0 to 5 ratings.
    double coldstart_fraction = 0.0;
    RatingScale scale{1.0, 5.0};

    /// Share of cold-start users that get no ratings at all; the rest get 1-5.
    double norating_share = 0.5;
    /// Out-degree multiplier for cold-start users relative to the others.
    double coldstart_trust_factor = 1.0;
    /// Rating noise, in units of a quarter of the scale width.
    double noise = 0.5;
    /// Users per community; communities = max(1, users / community_size).
    std::size_t community_size = 40;

    /// Throws std::invalid_argument for infeasible settings, including
    /// ratings_per_user > items.
    void validate() const;
};

/// Deterministic for a given (params, seed). User ids are 0..users-1 and
/// item ids 0..items-1; every user and item is in the universe even when
/// unrated.
Dataset generate_synthetic(const SyntheticParams& params, std::uint64_t seed);

}  // namespace trustrec
