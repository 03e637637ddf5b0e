#include "trustrec/trust_network.hpp"

#include <algorithm>

namespace trustrec {

std::span<const UserId> TrustNetwork::trustees(UserId u) const {
    const auto it = adjacency_.find(u);
    if (it == adjacency_.end()) return {};
    return it->second;
}

bool TrustNetwork::trusts(UserId truster, UserId trustee) const {
    const auto t = trustees(truster);
    return std::binary_search(t.begin(), t.end(), trustee);
}

std::vector<UserId> TrustNetwork::endpoints() const {
    std::vector<UserId> out;
    for (const auto& [u, ts] : adjacency_) {
        out.push_back(u);
        out.insert(out.end(), ts.begin(), ts.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool TrustNetwork::Builder::add(UserId truster, UserId trustee) {
    if (truster == trustee) {
        ++self_loops_;
        return false;
    }
    adjacency_[truster].push_back(trustee);
    ++accepted_;
    return true;
}

TrustNetwork TrustNetwork::Builder::build() && {
    TrustNetwork net;
    for (auto& [u, ts] : adjacency_) {
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        net.edge_count_ += ts.size();
        net.trusters_.push_back(u);
    }
    std::sort(net.trusters_.begin(), net.trusters_.end());
    net.adjacency_ = std::move(adjacency_);
    return net;
}

}  // namespace trustrec
