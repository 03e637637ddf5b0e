#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace trustrec {

// Strong ids. Both are plain enums so they hash and order like integers
// but cannot be mixed up with each other or with counts.
enum class UserId : std::uint32_t {};
enum class ItemId : std::uint32_t {};

constexpr std::uint32_t raw(UserId u) noexcept { return static_cast<std::uint32_t>(u); }
constexpr std::uint32_t raw(ItemId i) noexcept { return static_cast<std::uint32_t>(i); }

/// Closed interval of admissible rating values.
struct RatingScale {
    double min = 1.0;
    double max = 5.0;

    RatingScale() = default;
    RatingScale(double lo, double hi) : min(lo), max(hi) {
        if (!(lo < hi)) {
            throw std::invalid_argument("rating scale requires min < max");
        }
    }

    bool contains(double v) const noexcept { return v >= min && v <= max; }

    friend bool operator==(const RatingScale&, const RatingScale&) = default;
};

/// Parses "MIN:MAX".
RatingScale parse_scale(const std::string& text);

}  // namespace trustrec
