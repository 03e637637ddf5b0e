#include "trustrec/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace trustrec {
namespace {

using Rng = std::mt19937_64;

std::vector<double> gaussian_vector(Rng& rng, int dim, double sd) {
    std::normal_distribution<double> n(0.0, sd);
    std::vector<double> v(static_cast<std::size_t>(dim));
    for (double& x : v) x = n(rng);
    return v;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double snap(double v, const RatingScale& s) {
    return std::clamp(s.min + std::round(v - s.min), s.min, s.max);
}

}  // namespace

void SyntheticParams::validate() const {
    auto fraction = [](double f) { return f >= 0.0 && f <= 1.0; };
    if (users == 0 || items == 0) throw std::invalid_argument("users and items must be positive");
    if (!(ratings_per_user > 0.0)) throw std::invalid_argument("ratings_per_user must be positive");
    if (ratings_per_user > static_cast<double>(items)) {
        throw std::invalid_argument("ratings_per_user exceeds the number of items");
    }
    if (!(trust_out_degree >= 0.0)) throw std::invalid_argument("trust_out_degree must be >= 0");
    if (latent_dim < 1) throw std::invalid_argument("latent_dim must be positive");
    if (!fraction(coupling) || !fraction(coldstart_fraction) || !fraction(norating_share)) {
        throw std::invalid_argument("fractions must lie in [0, 1]");
    }
    if (!(coldstart_trust_factor >= 0.0)) {
        throw std::invalid_argument("coldstart_trust_factor must be >= 0");
    }
    if (!(noise >= 0.0)) throw std::invalid_argument("noise must be >= 0");
    if (community_size == 0) throw std::invalid_argument("community_size must be positive");
}

Dataset generate_synthetic(const SyntheticParams& p, std::uint64_t seed) {
    p.validate();
    Rng rng(seed);
    const std::size_t m = p.users;
    const std::size_t n = p.items;
    const int k = p.latent_dim;
    const double width = p.scale.max - p.scale.min;
    const double quarter = width / 4.0;
    const double center = p.scale.min + width / 2.0;

    // Communities and tastes.
    const std::size_t groups = std::max<std::size_t>(1, m / p.community_size);
    std::uniform_int_distribution<std::size_t> pick_group(0, groups - 1);
    std::vector<std::size_t> community(m);
    std::vector<std::vector<std::uint32_t>> members(groups);
    for (std::size_t u = 0; u < m; ++u) {
        community[u] = pick_group(rng);
        members[community[u]].push_back(static_cast<std::uint32_t>(u));
    }
    std::vector<std::vector<double>> centroid(groups);
    for (auto& c : centroid) c = gaussian_vector(rng, k, 1.0);

    const double c = p.coupling;
    const double norm = std::sqrt(c * c + (1.0 - c) * (1.0 - c));
    std::vector<std::vector<double>> taste(m);
    for (std::size_t u = 0; u < m; ++u) {
        const auto own = gaussian_vector(rng, k, 1.0);
        taste[u].resize(static_cast<std::size_t>(k));
        for (int d = 0; d < k; ++d) {
            const auto dd = static_cast<std::size_t>(d);
            taste[u][dd] = (c * centroid[community[u]][dd] + (1.0 - c) * own[dd]) / norm;
        }
    }

    std::vector<std::vector<double>> item_vec(n);
    std::vector<double> popularity(n);
    std::vector<double> item_bias(n);
    std::lognormal_distribution<double> pop(0.0, 0.5);
    std::normal_distribution<double> ibias(0.0, 0.4 * quarter);
    for (std::size_t i = 0; i < n; ++i) {
        item_vec[i] = gaussian_vector(rng, k, 1.0 / std::sqrt(static_cast<double>(k)));
        popularity[i] = pop(rng);
        item_bias[i] = ibias(rng);
    }

    // Cold-start assignment over a shuffled order.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto cold = static_cast<std::size_t>(std::llround(p.coldstart_fraction * m));
    const auto no_rating = static_cast<std::size_t>(std::llround(p.norating_share * cold));
    enum class Kind { NoRating, FewRating, Regular };
    std::vector<Kind> kind(m, Kind::Regular);
    for (std::size_t r = 0; r < m; ++r) {
        Kind& kd = kind[order[r]];
        if (r < no_rating) kd = Kind::NoRating;
        else if (r < cold) kd = Kind::FewRating;
    }

    // Ratings: items are drawn without replacement with probability
    // proportional to popularity * exp(taste . item), via exponential keys.
    RatingMatrix::Builder ratings(p.scale);
    for (std::size_t u = 0; u < m; ++u) ratings.add_user(UserId{static_cast<std::uint32_t>(u)});
    for (std::size_t i = 0; i < n; ++i) ratings.add_item(ItemId{static_cast<std::uint32_t>(i)});

    std::normal_distribution<double> ubias(0.0, 0.6 * quarter);
    std::normal_distribution<double> noise(0.0, p.noise * quarter);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::poisson_distribution<int> regular_count(p.ratings_per_user);
    std::uniform_int_distribution<std::size_t> few_count(1, std::min<std::size_t>(5, n));
    std::vector<std::pair<double, std::uint32_t>> keys(n);
    for (std::size_t u = 0; u < m; ++u) {
        const double bias = ubias(rng);
        std::size_t count = 0;
        switch (kind[u]) {
            case Kind::NoRating: count = 0; break;
            case Kind::FewRating: count = few_count(rng); break;
            case Kind::Regular:
                count = std::min<std::size_t>(
                    n, std::max<std::size_t>(6, static_cast<std::size_t>(regular_count(rng))));
                break;
        }
        if (count == 0) continue;

        for (std::size_t i = 0; i < n; ++i) {
            const double w = popularity[i] * std::exp(dot(taste[u], item_vec[i]));
            double draw = unit(rng);
            while (draw == 0.0) draw = unit(rng);
            keys[i] = {std::log(draw) / w, static_cast<std::uint32_t>(i)};
        }
        std::partial_sort(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(count),
                          keys.end(), [](const auto& a, const auto& b) {
                              return a.first > b.first || (a.first == b.first && a.second < b.second);
                          });
        for (std::size_t r = 0; r < count; ++r) {
            const std::uint32_t i = keys[r].second;
            const double v = snap(center + bias + item_bias[i] +
                                      quarter * dot(taste[u], item_vec[i]) + noise(rng),
                                  p.scale);
            ratings.add(UserId{static_cast<std::uint32_t>(u)}, ItemId{i}, v);
        }
    }

    // Trust edges.
    const double cold_share = static_cast<double>(cold) / static_cast<double>(m);
    const double denom = (1.0 - cold_share) + p.coldstart_trust_factor * cold_share;
    const double base_degree = denom > 0.0 ? p.trust_out_degree / denom : 0.0;
    std::uniform_int_distribution<std::size_t> any_user(0, m - 1);
    TrustNetwork::Builder trust;
    for (std::size_t u = 0; u < m; ++u) {
        const bool is_cold = kind[u] == Kind::NoRating || kind[u] == Kind::FewRating;
        const double lambda = base_degree * (is_cold ? p.coldstart_trust_factor : 1.0);
        if (lambda <= 0.0 || m < 2) continue;
        std::poisson_distribution<int> degree_dist(lambda);
        const auto degree = std::min<std::size_t>(static_cast<std::size_t>(degree_dist(rng)), m - 1);
        const auto& mates = members[community[u]];
        std::vector<std::uint32_t> chosen;
        for (std::size_t e = 0; e < degree; ++e) {
            for (int attempt = 0; attempt < 16; ++attempt) {
                std::size_t v = 0;
                if (mates.size() > 1 && unit(rng) < c) {
                    std::uniform_int_distribution<std::size_t> pick(0, mates.size() - 1);
                    v = mates[pick(rng)];
                } else {
                    v = any_user(rng);
                }
                if (v == u) continue;
                const auto vid = static_cast<std::uint32_t>(v);
                if (std::find(chosen.begin(), chosen.end(), vid) != chosen.end()) continue;
                chosen.push_back(vid);
                trust.add(UserId{static_cast<std::uint32_t>(u)}, UserId{vid});
                break;
            }
        }
    }
    return {std::move(ratings).build(), std::move(trust).build()};
}

}  // namespace trustrec
