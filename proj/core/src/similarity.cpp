#include "trustrec/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace trustrec {
namespace {

// Calls fn(item, r_a, r_u) for every item both users rated, in item order.
template <typename Fn>
void for_each_corated(RatingView view, UserId a, UserId u, Fn&& fn) {
    const auto pa = view.profile(a);
    const auto pu = view.profile(u);
    auto ia = pa.begin();
    auto iu = pu.begin();
    while (ia != pa.end() && iu != pu.end()) {
        if (ia->item < iu->item) {
            ++ia;
        } else if (iu->item < ia->item) {
            ++iu;
        } else {
            fn(ia->item, ia->value, iu->value);
            ++ia;
            ++iu;
        }
    }
}

Weight clamp_unit(double w) { return std::clamp(w, -1.0, 1.0); }

}  // namespace

std::string_view to_string(SimilarityMeasure m) {
    switch (m) {
        case SimilarityMeasure::Correlation: return "pearson";
        case SimilarityMeasure::VectorSimilarity: return "cosine";
        case SimilarityMeasure::InverseUserFrequency: return "iuf";
    }
    return "?";
}

SimilarityMeasure parse_similarity_measure(std::string_view name) {
    if (name == "pearson") return SimilarityMeasure::Correlation;
    if (name == "cosine") return SimilarityMeasure::VectorSimilarity;
    if (name == "iuf") return SimilarityMeasure::InverseUserFrequency;
    throw std::invalid_argument("unknown similarity '" + std::string(name) + "'");
}

void SimilarityConfig::validate() const {
    if (min_overlap < 2) throw std::invalid_argument("min_overlap must be at least 2");
    if (amplification_rho && !(*amplification_rho > 1.0)) {
        throw std::invalid_argument("amplification rho must be greater than 1");
    }
}

std::string SimilarityConfig::label() const {
    std::ostringstream out;
    out << to_string(measure);
    if (amplification_rho) out << "+rho" << *amplification_rho;
    return out.str();
}

std::optional<Weight> pearson(RatingView view, UserId a, UserId u, int min_overlap) {
    std::size_t n = 0;
    double sum_a = 0.0;
    double sum_u = 0.0;
    double lo_a = INFINITY, hi_a = -INFINITY, lo_u = INFINITY, hi_u = -INFINITY;
    for_each_corated(view, a, u, [&](ItemId, double ra, double ru) {
        ++n;
        sum_a += ra;
        sum_u += ru;
        lo_a = std::min(lo_a, ra);
        hi_a = std::max(hi_a, ra);
        lo_u = std::min(lo_u, ru);
        hi_u = std::max(hi_u, ru);
    });
    if (n < static_cast<std::size_t>(min_overlap)) return std::nullopt;
    // Constant vectors are caught here rather than by testing the variance,
    // which rounding can leave a hair above zero.
    if (lo_a == hi_a || lo_u == hi_u) return std::nullopt;

    const double mean_a = sum_a / static_cast<double>(n);
    const double mean_u = sum_u / static_cast<double>(n);
    double cov = 0.0, var_a = 0.0, var_u = 0.0;
    for_each_corated(view, a, u, [&](ItemId, double ra, double ru) {
        const double da = ra - mean_a;
        const double du = ru - mean_u;
        cov += da * du;
        var_a += da * da;
        var_u += du * du;
    });
    return clamp_unit(cov / std::sqrt(var_a * var_u));
}

std::optional<Weight> cosine(RatingView view, UserId a, UserId u, int min_overlap) {
    std::size_t n = 0;
    double dot = 0.0, norm_a = 0.0, norm_u = 0.0;
    for_each_corated(view, a, u, [&](ItemId, double ra, double ru) {
        ++n;
        dot += ra * ru;
        norm_a += ra * ra;
        norm_u += ru * ru;
    });
    if (n < static_cast<std::size_t>(min_overlap)) return std::nullopt;
    if (norm_a == 0.0 || norm_u == 0.0) return std::nullopt;
    return clamp_unit(dot / std::sqrt(norm_a * norm_u));
}

double iuf_factor(RatingView view, ItemId item) {
    const std::size_t mj = view.rater_count(item);
    if (mj == 0) throw std::domain_error("undefined factor");
    const std::size_t m = view.rated_user_count();
    return std::log(static_cast<double>(m) / static_cast<double>(mj));
}

std::optional<Weight> iuf_pearson(RatingView view, UserId a, UserId u, int min_overlap) {
    std::size_t n = 0;
    double sum_f = 0.0, sum_a = 0.0, sum_u = 0.0;
    double lo_a = INFINITY, hi_a = -INFINITY, lo_u = INFINITY, hi_u = -INFINITY;
    for_each_corated(view, a, u, [&](ItemId j, double ra, double ru) {
        ++n;
        const double f = iuf_factor(view, j);
        if (f <= 0.0) return;
        sum_f += f;
        sum_a += f * ra;
        sum_u += f * ru;
        lo_a = std::min(lo_a, ra);
        hi_a = std::max(hi_a, ra);
        lo_u = std::min(lo_u, ru);
        hi_u = std::max(hi_u, ru);
    });
    if (n < static_cast<std::size_t>(min_overlap)) return std::nullopt;
    if (sum_f == 0.0) return std::nullopt;
    if (lo_a == hi_a || lo_u == hi_u) return std::nullopt;

    const double mean_a = sum_a / sum_f;
    const double mean_u = sum_u / sum_f;
    double cov = 0.0, var_a = 0.0, var_u = 0.0;
    for_each_corated(view, a, u, [&](ItemId j, double ra, double ru) {
        const double f = iuf_factor(view, j);
        if (f <= 0.0) return;
        const double da = ra - mean_a;
        const double du = ru - mean_u;
        cov += f * da * du;
        var_a += f * da * da;
        var_u += f * du * du;
    });
    return clamp_unit(cov / std::sqrt(var_a * var_u));
}

Weight case_amplify(Weight w, double rho) {
    return std::copysign(std::pow(std::abs(w), rho), w);
}

std::optional<Weight> similarity(RatingView view, UserId a, UserId u,
                                 const SimilarityConfig& config) {
    std::optional<Weight> w;
    switch (config.measure) {
        case SimilarityMeasure::Correlation: w = pearson(view, a, u, config.min_overlap); break;
        case SimilarityMeasure::VectorSimilarity: w = cosine(view, a, u, config.min_overlap); break;
        case SimilarityMeasure::InverseUserFrequency:
            w = iuf_pearson(view, a, u, config.min_overlap);
            break;
    }
    if (w && config.amplification_rho) w = case_amplify(*w, *config.amplification_rho);
    return w;
}

}  // namespace trustrec
