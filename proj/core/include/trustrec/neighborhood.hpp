#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "trustrec/rating_matrix.hpp"
#include "trustrec/trust_network.hpp"

namespace trustrec {

/// Every rater of the target item.
struct Traditional {};
/// Only the active user's direct trustees.
struct TrustAware {};
/// Raters of the target item united with direct trustees.
struct Hybrid {};
/// Raters of the target item reachable within `d_max` trust hops.
struct PropagatedTrust {
    int d_max = 2;
};

using Strategy = std::variant<Traditional, TrustAware, Hybrid, PropagatedTrust>;

/// "traditional", "trust", "hybrid" or "propagated".
std::string strategy_name(const Strategy& s);
/// Short label used in reports, e.g. "propagated(d=3)".
std::string strategy_label(const Strategy& s);
Strategy parse_strategy(std::string_view name, int d_max = 2);

struct Neighbour {
    UserId user;
    /// Trust distance; set only by the propagated strategy.
    std::optional<int> distance;

    friend bool operator==(const Neighbour&, const Neighbour&) = default;
};

/// Neighbour set sorted by user id. Never contains the active user.
struct Neighbourhood {
    std::vector<Neighbour> members;

    std::size_t size() const noexcept { return members.size(); }
    bool empty() const noexcept { return members.empty(); }
    bool contains(UserId u) const;
    std::vector<UserId> users() const;
};

/// Breadth-first walk along truster -> trustee edges, one level at a time.
/// Counts every outgoing edge scanned so callers can budget the walk.
class TrustFrontier {
public:
    TrustFrontier(const TrustNetwork& trust, UserId source);

    /// Number of levels expanded so far.
    int depth() const noexcept { return depth_; }
    std::size_t edges_visited() const noexcept { return edges_visited_; }
    /// Edges the next expand() will scan.
    std::size_t next_level_cost() const;
    /// Expands one level. Returns false, without changing depth, when the
    /// frontier is already exhausted.
    bool expand();
    bool exhausted() const noexcept { return frontier_.empty(); }

    /// Reached users (source excluded) with their minimum distance, in
    /// discovery order.
    const std::vector<Neighbour>& reached() const noexcept { return reached_; }

private:
    const TrustNetwork* trust_;
    UserId source_;
    int depth_ = 0;
    std::size_t edges_visited_ = 0;
    std::vector<UserId> frontier_;
    std::unordered_map<UserId, int> distance_;
    std::vector<Neighbour> reached_;
};

Neighbourhood traditional_neighbors(RatingView view, UserId a, ItemId j);
Neighbourhood trust_aware_neighbors(const TrustNetwork& trust, UserId a);
Neighbourhood hybrid_neighbors(RatingView view, const TrustNetwork& trust, UserId a, ItemId j);
/// Raters of `j` within `d_max` hops of `a`, each with its minimum distance.
/// Throws std::invalid_argument when d_max < 1.
Neighbourhood propagated_neighbors(RatingView view, const TrustNetwork& trust, UserId a,
                                   ItemId j, int d_max);

/// Neighbourhood for the given strategy.
Neighbourhood neighbors(RatingView view, const TrustNetwork& trust, UserId a, ItemId j,
                        const Strategy& strategy);

/// Members holding a visible rating for `j`, sorted.
std::vector<UserId> contributors(RatingView view, const Neighbourhood& hood, ItemId j);

}  // namespace trustrec
