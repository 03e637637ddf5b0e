#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "trustrec/ids.hpp"

namespace trustrec {

/// Directed trust graph, truster -> trustees. Binary trust: statement
/// values are not stored. No self-loops, no parallel edges.
class TrustNetwork {
public:
    class Builder;

    TrustNetwork() = default;

    /// Trustees of `u`, sorted. Empty for users that trust nobody.
    std::span<const UserId> trustees(UserId u) const;
    bool trusts(UserId truster, UserId trustee) const;
    std::size_t out_degree(UserId u) const { return trustees(u).size(); }

    /// Total number of trust statements (edges), `t`.
    std::size_t statement_count() const noexcept { return edge_count_; }
    /// Users with at least one outgoing edge, sorted.
    std::span<const UserId> trusters() const noexcept { return trusters_; }
    /// Every user appearing as either endpoint, sorted.
    std::vector<UserId> endpoints() const;

    friend bool operator==(const TrustNetwork& a, const TrustNetwork& b) {
        return a.edge_count_ == b.edge_count_ && a.adjacency_ == b.adjacency_;
    }

private:
    std::unordered_map<UserId, std::vector<UserId>> adjacency_;
    std::vector<UserId> trusters_;
    std::size_t edge_count_ = 0;
};

class TrustNetwork::Builder {
public:
    /// Returns false (and counts it) when the edge is a self-loop.
    /// Parallel edges are accepted here and collapsed by build().
    bool add(UserId truster, UserId trustee);

    std::size_t accepted() const noexcept { return accepted_; }
    std::size_t self_loops() const noexcept { return self_loops_; }

    TrustNetwork build() &&;

private:
    std::unordered_map<UserId, std::vector<UserId>> adjacency_;
    std::size_t accepted_ = 0;
    std::size_t self_loops_ = 0;
};

}  // namespace trustrec
