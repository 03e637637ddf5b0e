#include "trustrec/rating_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace trustrec {

RatingScale parse_scale(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("scale must look like MIN:MAX, got '" + text + "'");
    }
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo = text.substr(0, colon);
    const std::string hi = text.substr(colon + 1);
    double min = 0.0;
    double max = 0.0;
    try {
        min = std::stod(lo, &used_lo);
        max = std::stod(hi, &used_hi);
    } catch (const std::exception&) {
        throw std::invalid_argument("scale must look like MIN:MAX, got '" + text + "'");
    }
    if (used_lo != lo.size() || used_hi != hi.size()) {
        throw std::invalid_argument("scale must look like MIN:MAX, got '" + text + "'");
    }
    return RatingScale(min, max);
}

// RatingMatrix ---------------------------------------------------------------

std::span<const Rating> RatingMatrix::profile(UserId u) const {
    const auto it = user_index_.find(u);
    if (it == user_index_.end()) return {};
    return profiles_[it->second];
}

std::span<const UserId> RatingMatrix::raters(ItemId i) const {
    const auto it = item_index_.find(i);
    if (it == item_index_.end()) return {};
    return raters_[it->second];
}

std::optional<double> RatingMatrix::rating(UserId u, ItemId i) const {
    const auto p = profile(u);
    const auto it = std::lower_bound(p.begin(), p.end(), i,
                                     [](const Rating& r, ItemId key) { return r.item < key; });
    if (it == p.end() || it->item != i) return std::nullopt;
    return it->value;
}

double RatingMatrix::profile_sum(UserId u) const {
    const auto it = user_index_.find(u);
    return it == user_index_.end() ? 0.0 : profile_sums_[it->second];
}

// Builder --------------------------------------------------------------------

RatingMatrix::Builder::Builder(const RatingMatrix& m) : scale_(m.scale()) {
    for (UserId u : m.users()) {
        add_user(u);
        for (const Rating& r : m.profile(u)) entries_[u][r.item] = r.value;
    }
    for (ItemId i : m.items()) add_item(i);
}

RatingMatrix::Builder& RatingMatrix::Builder::add(UserId u, ItemId i, double value) {
    if (!scale_.contains(value)) {
        throw std::out_of_range("rating " + std::to_string(value) + " outside scale [" +
                                std::to_string(scale_.min) + ", " + std::to_string(scale_.max) +
                                "]");
    }
    auto [it, inserted] = entries_[u].insert_or_assign(i, value);
    if (!inserted) ++duplicates_;
    return *this;
}

RatingMatrix::Builder& RatingMatrix::Builder::add_user(UserId u) {
    extra_users_.push_back(u);
    return *this;
}

RatingMatrix::Builder& RatingMatrix::Builder::add_item(ItemId i) {
    extra_items_.push_back(i);
    return *this;
}

RatingMatrix RatingMatrix::Builder::build() && {
    RatingMatrix m;
    m.scale_ = scale_;

    std::vector<UserId> users = std::move(extra_users_);
    std::vector<ItemId> items = std::move(extra_items_);
    for (const auto& [u, row] : entries_) {
        users.push_back(u);
        for (const auto& [i, v] : row) items.push_back(i);
    }
    std::sort(users.begin(), users.end());
    users.erase(std::unique(users.begin(), users.end()), users.end());
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());

    m.users_ = std::move(users);
    m.items_ = std::move(items);
    m.user_index_.reserve(m.users_.size());
    for (std::uint32_t k = 0; k < m.users_.size(); ++k) m.user_index_.emplace(m.users_[k], k);
    m.item_index_.reserve(m.items_.size());
    for (std::uint32_t k = 0; k < m.items_.size(); ++k) m.item_index_.emplace(m.items_[k], k);

    m.profiles_.resize(m.users_.size());
    m.profile_sums_.assign(m.users_.size(), 0.0);
    m.raters_.resize(m.items_.size());

    for (std::uint32_t k = 0; k < m.users_.size(); ++k) {
        const UserId u = m.users_[k];
        const auto row = entries_.find(u);
        if (row == entries_.end()) continue;
        auto& prof = m.profiles_[k];
        prof.reserve(row->second.size());
        for (const auto& [i, v] : row->second) prof.push_back({i, v});
        std::sort(prof.begin(), prof.end(),
                  [](const Rating& a, const Rating& b) { return a.item < b.item; });
        double sum = 0.0;
        for (const Rating& r : prof) {
            sum += r.value;
            m.raters_[m.item_index_.at(r.item)].push_back(u);
        }
        m.profile_sums_[k] = sum;
        m.rating_count_ += prof.size();
        if (!prof.empty()) ++m.rated_users_;
    }
    // Users were visited in ascending order, so every rater list is sorted.

    // Summed in user order so the global mean does not depend on hash order.
    for (double s : m.profile_sums_) m.total_sum_ += s;
    return m;
}

// RatingView -----------------------------------------------------------------

RatingView RatingView::withholding(UserId u, ItemId i) const {
    RatingView v(*m_);
    if (const auto r = m_->rating(u, i)) {
        v.held_user_ = u;
        v.held_item_ = i;
        v.held_value_ = *r;
    }
    return v;
}

SkipRange<Rating> RatingView::profile(UserId u) const {
    const auto p = m_->profile(u);
    const Rating* skip = nullptr;
    if (held_user_ == u) {
        const auto it = std::lower_bound(
            p.begin(), p.end(), *held_item_,
            [](const Rating& r, ItemId key) { return r.item < key; });
        skip = &*it;
    }
    return {p, skip};
}

SkipRange<UserId> RatingView::raters(ItemId i) const {
    const auto r = m_->raters(i);
    const UserId* skip = nullptr;
    if (held_item_ == i) {
        const auto it = std::lower_bound(r.begin(), r.end(), *held_user_);
        skip = &*it;
    }
    return {r, skip};
}

std::optional<double> RatingView::rating(UserId u, ItemId i) const {
    if (hides(u, i)) return std::nullopt;
    return m_->rating(u, i);
}

std::size_t RatingView::rating_count(UserId u) const {
    return m_->profile(u).size() - (held_user_ == u ? 1 : 0);
}

std::size_t RatingView::rater_count(ItemId i) const {
    return m_->raters(i).size() - (held_item_ == i ? 1 : 0);
}

std::size_t RatingView::rated_user_count() const {
    std::size_t n = m_->rated_user_count();
    if (held_user_ && m_->profile(*held_user_).size() == 1) --n;
    return n;
}

std::optional<double> RatingView::mean(UserId u) const {
    const std::size_t n = rating_count(u);
    if (n == 0) return std::nullopt;
    double sum = m_->profile_sum(u);
    if (held_user_ == u) sum -= held_value_;
    return sum / static_cast<double>(n);
}

std::optional<double> RatingView::mean_excluding(UserId u, ItemId i) const {
    std::size_t n = rating_count(u);
    double sum = m_->profile_sum(u);
    if (held_user_ == u) sum -= held_value_;
    if (const auto r = rating(u, i)) {
        --n;
        sum -= *r;
    }
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
}

std::optional<double> RatingView::global_mean() const {
    std::size_t count = m_->rating_count();
    double sum = m_->total_sum();
    if (held_user_) {
        --count;
        sum -= held_value_;
    }
    if (count == 0) return std::nullopt;
    return sum / static_cast<double>(count);
}

// Free operations --------------------------------------------------------------

std::string_view to_string(ColdStartClass c) {
    switch (c) {
        case ColdStartClass::NoRating: return "no";
        case ColdStartClass::FewRating: return "few";
        case ColdStartClass::Regular: return "regular";
    }
    return "?";
}

std::optional<double> mean_rating(RatingView view, UserId user, std::optional<ItemId> exclude) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const Rating& r : view.profile(user)) {
        if (exclude && r.item == *exclude) continue;
        sum += r.value;
        ++n;
    }
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
}

ColdStartClass classify_count(std::size_t ratings) {
    if (ratings == 0) return ColdStartClass::NoRating;
    if (ratings <= 5) return ColdStartClass::FewRating;
    return ColdStartClass::Regular;
}

ColdStartClass classify_user(const RatingMatrix& matrix, UserId user) {
    return classify_count(matrix.profile(user).size());
}

std::vector<UserId> raters_of(RatingView view, ItemId item) {
    const auto r = view.raters(item);
    return {r.begin(), r.end()};
}

std::vector<ItemId> common_items(RatingView view, UserId a, UserId u) {
    std::vector<ItemId> out;
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
            out.push_back(ia->item);
            ++ia;
            ++iu;
        }
    }
    return out;
}

}  // namespace trustrec
