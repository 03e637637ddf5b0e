#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "trustrec/ids.hpp"

namespace trustrec {

struct Rating {
    ItemId item;
    double value;

    friend bool operator==(const Rating&, const Rating&) = default;
};

// A contiguous range with at most one element hidden. Used to present a
// profile or rater list with the withheld leave-one-out entry removed
// without copying.
template <typename T>
class SkipRange {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = T;
        using difference_type = std::ptrdiff_t;
        using pointer = const T*;
        using reference = const T&;

        iterator() = default;
        iterator(const T* pos, const T* skip) : pos_(pos), skip_(skip) {
            if (pos_ == skip_) ++pos_;
        }
        reference operator*() const { return *pos_; }
        pointer operator->() const { return pos_; }
        iterator& operator++() {
            ++pos_;
            if (pos_ == skip_) ++pos_;
            return *this;
        }
        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

    private:
        const T* pos_ = nullptr;
        const T* skip_ = nullptr;
    };

    SkipRange() = default;
    SkipRange(std::span<const T> all, const T* skip) : all_(all), skip_(skip) {}

    iterator begin() const { return {all_.data(), skip_}; }
    iterator end() const { return {all_.data() + all_.size(), nullptr}; }
    std::size_t size() const { return all_.size() - (skip_ != nullptr ? 1 : 0); }
    bool empty() const { return size() == 0; }

private:
    std::span<const T> all_;
    const T* skip_ = nullptr;
};

/// Sparse user -> (item -> rating) store. Immutable once built; safe for
/// concurrent readers. The user universe may include users with no ratings
/// (for example users that only appear in the trust graph).
class RatingMatrix {
public:
    class Builder;

    RatingMatrix() = default;

    const RatingScale& scale() const noexcept { return scale_; }
    std::size_t user_count() const noexcept { return users_.size(); }
    std::size_t item_count() const noexcept { return items_.size(); }
    std::size_t rating_count() const noexcept { return rating_count_; }
    /// Users holding at least one rating.
    std::size_t rated_user_count() const noexcept { return rated_users_; }

    /// Sorted user universe.
    std::span<const UserId> users() const noexcept { return users_; }
    /// Sorted item universe.
    std::span<const ItemId> items() const noexcept { return items_; }

    bool has_user(UserId u) const { return user_index_.contains(u); }
    bool has_item(ItemId i) const { return item_index_.contains(i); }

    /// Ratings of `u` sorted by item. Empty for unknown users.
    std::span<const Rating> profile(UserId u) const;
    /// Users that rated `i`, sorted. Empty for unknown items.
    std::span<const UserId> raters(ItemId i) const;
    std::optional<double> rating(UserId u, ItemId i) const;

    double profile_sum(UserId u) const;
    double total_sum() const noexcept { return total_sum_; }

    friend bool operator==(const RatingMatrix& a, const RatingMatrix& b) {
        return a.scale_ == b.scale_ && a.users_ == b.users_ && a.items_ == b.items_ &&
               a.profiles_ == b.profiles_;
    }

private:
    RatingScale scale_;
    std::vector<UserId> users_;
    std::vector<ItemId> items_;
    std::unordered_map<UserId, std::uint32_t> user_index_;
    std::unordered_map<ItemId, std::uint32_t> item_index_;
    std::vector<std::vector<Rating>> profiles_;
    std::vector<std::vector<UserId>> raters_;
    std::vector<double> profile_sums_;
    std::size_t rating_count_ = 0;
    std::size_t rated_users_ = 0;
    double total_sum_ = 0.0;
};

/// Single-writer construction. Duplicate (user, item) pairs keep the last
/// value and are counted.
class RatingMatrix::Builder {
public:
    explicit Builder(RatingScale scale = {}) : scale_(scale) {}
    /// Seeds the builder with every user, item and rating of `m`.
    explicit Builder(const RatingMatrix& m);

    /// Throws std::out_of_range when `value` falls outside the scale.
    Builder& add(UserId u, ItemId i, double value);
    Builder& add_user(UserId u);
    Builder& add_item(ItemId i);

    std::size_t duplicates() const noexcept { return duplicates_; }

    RatingMatrix build() &&;

private:
    RatingScale scale_;
    std::unordered_map<UserId, std::unordered_map<ItemId, double>> entries_;
    std::vector<UserId> extra_users_;
    std::vector<ItemId> extra_items_;
    std::size_t duplicates_ = 0;
};

/// Read-only window over a matrix that may hide one (user, item) rating.
/// Everything downstream of the matrix reads through a view so that a
/// leave-one-out prediction never sees the rating it is predicting.
class RatingView {
public:
    RatingView(const RatingMatrix& m) : m_(&m) {}  // NOLINT: implicit by intent

    /// Returns a view hiding `r_{u,i}`; a no-op when that rating does not exist.
    RatingView withholding(UserId u, ItemId i) const;

    const RatingMatrix& matrix() const noexcept { return *m_; }
    const RatingScale& scale() const noexcept { return m_->scale(); }

    std::optional<UserId> withheld_user() const noexcept { return held_user_; }
    std::optional<ItemId> withheld_item() const noexcept { return held_item_; }

    SkipRange<Rating> profile(UserId u) const;
    SkipRange<UserId> raters(ItemId i) const;
    std::optional<double> rating(UserId u, ItemId i) const;
    std::size_t rating_count(UserId u) const;
    std::size_t rater_count(ItemId i) const;
    std::size_t rated_user_count() const;
    /// Mean of the user's visible ratings from precomputed sums.
    std::optional<double> mean(UserId u) const;
    /// Mean of the user's visible ratings other than `i`.
    std::optional<double> mean_excluding(UserId u, ItemId i) const;
    /// Mean over every visible rating; absent when none remain.
    std::optional<double> global_mean() const;

private:
    bool hides(UserId u, ItemId i) const noexcept {
        return held_user_ == u && held_item_ == i;
    }

    const RatingMatrix* m_;
    std::optional<UserId> held_user_;
    std::optional<ItemId> held_item_;
    double held_value_ = 0.0;
};

enum class ColdStartClass { NoRating, FewRating, Regular };

std::string_view to_string(ColdStartClass c);

/// Mean of the user's visible ratings, optionally skipping one item.
std::optional<double> mean_rating(RatingView view, UserId user,
                                  std::optional<ItemId> exclude = std::nullopt);

/// NoRating: 0 ratings, FewRating: 1 to 5, Regular: 6 or more.
ColdStartClass classify_user(const RatingMatrix& matrix, UserId user);
ColdStartClass classify_count(std::size_t ratings);

std::vector<UserId> raters_of(RatingView view, ItemId item);
std::vector<ItemId> common_items(RatingView view, UserId a, UserId u);

}  // namespace trustrec
