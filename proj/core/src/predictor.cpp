#include "trustrec/predictor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace trustrec {
namespace {

struct Contribution {
    double deviation;  // r_uj - mean(u)
    double weight;
};

// The weighted deviation sum over the contributions; `view` already hides r_aj.
PredictionOutcome combine(RatingView view, UserId a, const std::vector<Contribution>& parts,
                          const PredictorConfig& config) {
    PredictionOutcome out;
    out.contributor_count = parts.size();
    if (parts.empty()) {
        out.failure = PredictionFailure::NoContributors;
        return out;
    }
    double num = 0.0;
    double mass = 0.0;
    for (const Contribution& c : parts) {
        num += c.deviation * c.weight;
        mass += std::abs(c.weight);
    }
    if (mass == 0.0) {
        out.failure = PredictionFailure::ZeroWeightMass;
        return out;
    }
    std::optional<double> base = mean_rating(view, a);
    if (!base && config.global_mean_fallback) base = view.global_mean();
    if (!base) {
        out.failure = PredictionFailure::NoActiveMean;
        return out;
    }
    double p = *base + num / mass;
    if (config.clamp_to_scale) {
        const auto& s = view.scale();
        const double c = std::clamp(p, s.min, s.max);
        out.clamped = c != p;
        p = c;
    }
    out.value = p;
    return out;
}

PredictionOutcome propagated_outcome(RatingView view, UserId a, ItemId j,
                                     const TrustFrontier& walk, int d_max,
                                     const PredictorConfig& config) {
    if (walk.reached().empty()) {
        PredictionOutcome out;
        out.failure = PredictionFailure::NoNeighbours;
        return out;
    }
    std::vector<Neighbour> members;
    for (const Neighbour& n : walk.reached()) {
        if (view.rating(n.user, j)) members.push_back(n);
    }
    std::sort(members.begin(), members.end(),
              [](const Neighbour& x, const Neighbour& y) { return x.user < y.user; });

    std::vector<Contribution> parts;
    parts.reserve(members.size());
    for (const Neighbour& n : members) {
        const auto mean_u = view.mean_excluding(n.user, j);
        if (!mean_u) continue;
        const double r = *view.rating(n.user, j);
        const double w = static_cast<double>(d_max - *n.distance + 1) / static_cast<double>(d_max);
        parts.push_back({r - *mean_u, w});
    }
    return combine(view, a, parts, config);
}

}  // namespace

void PredictorConfig::validate() const {
    similarity.validate();
    if (!(trust_fallback_weight > 0.0 && trust_fallback_weight <= 1.0)) {
        throw std::invalid_argument("trust fallback weight must lie in (0, 1]");
    }
    if (const auto* p = std::get_if<PropagatedTrust>(&strategy); p && p->d_max < 1) {
        throw std::invalid_argument("d_max must be at least 1");
    }
}

std::string_view to_string(PredictionFailure f) {
    switch (f) {
        case PredictionFailure::NoNeighbours: return "no_neighbours";
        case PredictionFailure::NoContributors: return "no_contributors";
        case PredictionFailure::ZeroWeightMass: return "zero_weight_mass";
        case PredictionFailure::NoActiveMean: return "no_active_mean";
    }
    return "?";
}

std::optional<Weight> weight_for(RatingView view, const TrustNetwork& trust, UserId a, UserId u,
                                 const PredictorConfig& config) {
    if (auto w = similarity(view, a, u, config.similarity)) return w;
    const bool trust_based = std::holds_alternative<TrustAware>(config.strategy) ||
                             std::holds_alternative<Hybrid>(config.strategy);
    if (trust_based && trust.trusts(a, u)) return config.trust_fallback_weight;
    return std::nullopt;
}

PredictionOutcome predict(RatingView view, const TrustNetwork& trust, UserId a, ItemId j,
                          const PredictorConfig& config) {
    if (const auto* p = std::get_if<PropagatedTrust>(&config.strategy)) {
        return predict_propagated(view, trust, a, j, p->d_max, config);
    }
    const RatingView held = view.withholding(a, j);
    const Neighbourhood hood = neighbors(held, trust, a, j, config.strategy);
    if (hood.empty()) {
        PredictionOutcome out;
        out.failure = PredictionFailure::NoNeighbours;
        return out;
    }
    std::vector<Contribution> parts;
    for (const Neighbour& n : hood.members) {
        const auto r = held.rating(n.user, j);
        if (!r) continue;
        const auto mean_u = held.mean_excluding(n.user, j);
        if (!mean_u) continue;
        const auto w = weight_for(held, trust, a, n.user, config);
        if (!w) continue;
        parts.push_back({*r - *mean_u, *w});
    }
    return combine(held, a, parts, config);
}

PredictionOutcome predict_propagated(RatingView view, const TrustNetwork& trust, UserId a,
                                     ItemId j, int d_max, const PredictorConfig& config) {
    if (d_max < 1) throw std::invalid_argument("d_max must be at least 1");
    const RatingView held = view.withholding(a, j);
    TrustFrontier walk(trust, a);
    for (int d = 0; d < d_max && walk.expand(); ++d) {
    }
    return propagated_outcome(held, a, j, walk, d_max, config);
}

ElasticOutcome predict_elastic(RatingView view, const TrustNetwork& trust, UserId a, ItemId j,
                               const ElasticConfig& elastic, const PredictorConfig& config) {
    const RatingView held = view.withholding(a, j);
    TrustFrontier walk(trust, a);
    walk.expand();
    const std::size_t first_hop = walk.edges_visited();

    auto reachable_raters = [&] {
        return static_cast<std::size_t>(
            std::count_if(walk.reached().begin(), walk.reached().end(),
                          [&](const Neighbour& n) { return held.rating(n.user, j).has_value(); }));
    };

    while (reachable_raters() < elastic.min_contributors) {
        const std::size_t cost = walk.next_level_cost();
        if (cost == 0) break;
        if (walk.edges_visited() - first_hop + cost > elastic.budget) break;
        walk.expand();
    }

    ElasticOutcome out;
    out.depth = std::max(walk.depth(), 1);
    out.edges_visited = walk.edges_visited();
    out.outcome = propagated_outcome(held, a, j, walk, out.depth, config);
    return out;
}

}  // namespace trustrec
