#include "trustrec/neighborhood.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace trustrec {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Neighbourhood from_sorted_users(const std::vector<UserId>& users) {
    Neighbourhood n;
    n.members.reserve(users.size());
    for (UserId u : users) n.members.push_back({u, std::nullopt});
    return n;
}

}  // namespace

std::string strategy_name(const Strategy& s) {
    return std::visit(overloaded{
                          [](const Traditional&) { return std::string("traditional"); },
                          [](const TrustAware&) { return std::string("trust"); },
                          [](const Hybrid&) { return std::string("hybrid"); },
                          [](const PropagatedTrust&) { return std::string("propagated"); },
                      },
                      s);
}

std::string strategy_label(const Strategy& s) {
    if (const auto* p = std::get_if<PropagatedTrust>(&s)) {
        return "propagated(d=" + std::to_string(p->d_max) + ")";
    }
    return strategy_name(s);
}

Strategy parse_strategy(std::string_view name, int d_max) {
    if (name == "traditional") return Traditional{};
    if (name == "trust") return TrustAware{};
    if (name == "hybrid") return Hybrid{};
    if (name == "propagated") {
        if (d_max < 1) throw std::invalid_argument("propagated strategy needs d_max >= 1");
        return PropagatedTrust{d_max};
    }
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

bool Neighbourhood::contains(UserId u) const {
    return std::binary_search(members.begin(), members.end(), Neighbour{u, std::nullopt},
                              [](const Neighbour& x, const Neighbour& y) { return x.user < y.user; });
}

std::vector<UserId> Neighbourhood::users() const {
    std::vector<UserId> out;
    out.reserve(members.size());
    for (const auto& m : members) out.push_back(m.user);
    return out;
}

// TrustFrontier ----------------------------------------------------------------

TrustFrontier::TrustFrontier(const TrustNetwork& trust, UserId source)
    : trust_(&trust), source_(source), frontier_{source} {
    distance_.emplace(source, 0);
}

std::size_t TrustFrontier::next_level_cost() const {
    std::size_t cost = 0;
    for (UserId u : frontier_) cost += trust_->out_degree(u);
    return cost;
}

bool TrustFrontier::expand() {
    if (frontier_.empty()) return false;
    ++depth_;
    std::vector<UserId> next;
    for (UserId u : frontier_) {
        for (UserId v : trust_->trustees(u)) {
            ++edges_visited_;
            if (distance_.emplace(v, depth_).second) {
                next.push_back(v);
                reached_.push_back({v, depth_});
            }
        }
    }
    frontier_ = std::move(next);
    return true;
}

// Strategies -------------------------------------------------------------------

Neighbourhood traditional_neighbors(RatingView view, UserId a, ItemId j) {
    Neighbourhood n;
    const auto raters = view.raters(j);
    n.members.reserve(raters.size());
    for (UserId u : raters) {
        if (u != a) n.members.push_back({u, std::nullopt});
    }
    return n;
}

Neighbourhood trust_aware_neighbors(const TrustNetwork& trust, UserId a) {
    Neighbourhood n;
    for (UserId u : trust.trustees(a)) {
        if (u != a) n.members.push_back({u, std::nullopt});
    }
    return n;
}

Neighbourhood hybrid_neighbors(RatingView view, const TrustNetwork& trust, UserId a, ItemId j) {
    const auto raters = view.raters(j);
    const auto trusted = trust.trustees(a);
    std::vector<UserId> merged;
    merged.reserve(raters.size() + trusted.size());
    std::set_union(raters.begin(), raters.end(), trusted.begin(), trusted.end(),
                   std::back_inserter(merged));
    std::erase(merged, a);
    return from_sorted_users(merged);
}

Neighbourhood propagated_neighbors(RatingView view, const TrustNetwork& trust, UserId a,
                                   ItemId j, int d_max) {
    if (d_max < 1) throw std::invalid_argument("d_max must be at least 1");
    TrustFrontier walk(trust, a);
    for (int d = 0; d < d_max && walk.expand(); ++d) {
    }
    Neighbourhood n;
    for (const Neighbour& r : walk.reached()) {
        if (view.rating(r.user, j)) n.members.push_back(r);
    }
    std::sort(n.members.begin(), n.members.end(),
              [](const Neighbour& x, const Neighbour& y) { return x.user < y.user; });
    return n;
}

Neighbourhood neighbors(RatingView view, const TrustNetwork& trust, UserId a, ItemId j,
                        const Strategy& strategy) {
    return std::visit(
        overloaded{
            [&](const Traditional&) { return traditional_neighbors(view, a, j); },
            [&](const TrustAware&) { return trust_aware_neighbors(trust, a); },
            [&](const Hybrid&) { return hybrid_neighbors(view, trust, a, j); },
            [&](const PropagatedTrust& p) {
                return propagated_neighbors(view, trust, a, j, p.d_max);
            },
        },
        strategy);
}

std::vector<UserId> contributors(RatingView view, const Neighbourhood& hood, ItemId j) {
    std::vector<UserId> out;
    for (const Neighbour& n : hood.members) {
        if (view.rating(n.user, j)) out.push_back(n.user);
    }
    return out;
}

}  // namespace trustrec
