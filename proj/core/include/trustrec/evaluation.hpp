#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "trustrec/predictor.hpp"
#include "trustrec/rating_matrix.hpp"
#include "trustrec/trust_network.hpp"

namespace trustrec {

/// User filter applied before sampling. ColdStart selects NoRating and
/// FewRating users together.
enum class Segment { NoRating, FewRating, Regular, ColdStart };

Segment parse_segment(std::string_view name);
bool segment_contains(Segment s, ColdStartClass c);

struct EvalConfig {
    PredictorConfig predictor{};
    /// Evaluate a seeded uniform sample of this many rated users.
    std::optional<std::size_t> user_sample_size;
    std::uint64_t rng_seed = 42;
    std::optional<Segment> segment;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// One held-out rating and what the predictor made of it.
struct Attempt {
    UserId user;
    ItemId item;
    double actual = 0.0;
    std::optional<double> predicted;
    std::size_t contributors = 0;
    std::optional<PredictionFailure> failure;

    std::optional<double> error() const {
        if (!predicted) return std::nullopt;
        return *predicted - actual;
    }
};

struct Residual {
    UserId user;
    double error;
};

struct Metrics {
    std::optional<double> mae;
    std::optional<double> rmse;
    /// Per-user MAE averaged over users.
    std::optional<double> maue;
    /// Per-user RMSE averaged over users.
    std::optional<double> rmsue;
};

struct UserError {
    double mae = 0.0;
    double rmse = 0.0;
    std::size_t count = 0;
};

struct EvalSummary {
    std::size_t attempted = 0;
    std::size_t predicted = 0;
    std::optional<double> coverage;
    Metrics metrics;
    /// Users with at least one defined prediction.
    std::map<UserId, UserError> per_user;
};

struct EvalReport : EvalSummary {
    /// Always holds all three classes, keyed by full-profile class.
    std::map<ColdStartClass, EvalSummary> segments;
    /// Every held-out rating, ordered by (user, item).
    std::vector<Attempt> attempts;
};

/// MAE, RMSE and their per-user averages. All absent for an empty input.
Metrics compute_metrics(std::span<const Residual> residuals);

/// predicted / attempted; absent when nothing was attempted.
std::optional<double> coverage(const EvalSummary& report);

/// Summary over an arbitrary set of attempts.
EvalSummary summarize(std::span<const Attempt> attempts);

/// Re-partitions a report's attempts by the cold-start class of each user's
/// full profile.
std::map<ColdStartClass, EvalSummary> segment_by_coldstart(const RatingMatrix& matrix,
                                                           const EvalReport& report);

/// Predicts every rating of every selected user with that rating withheld.
/// Deterministic for a given seed regardless of the thread count.
/// Throws std::invalid_argument for an empty matrix or a sample larger than
/// the user universe.
EvalReport leave_one_out(const RatingMatrix& matrix, const TrustNetwork& trust,
                         const EvalConfig& config);

/// Users eligible under `config`, after sampling, in ascending order.
std::vector<UserId> evaluation_users(const RatingMatrix& matrix, const EvalConfig& config);

}  // namespace trustrec
