#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>

#include "tpoly/error.hpp"

namespace tpoly {

/// Exact rational whose denominator divides 2, stored as twice its value.
class Half {
public:
    constexpr Half() = default;
    constexpr Half(std::int64_t integer) : twice_(2 * integer) {}  // NOLINT: implicit by design of the arithmetic

    static constexpr Half from_twice(std::int64_t twice) {
        Half h;
        h.twice_ = twice;
        return h;
    }
    static Half from_fraction(std::int64_t num, std::int64_t den) {
        if (den == 1) return Half(num);
        if (den == 2) return from_twice(num);
        if (den == -1) return Half(-num);
        if (den == -2) return from_twice(-num);
        fail_validation("denominator must be 1 or 2, got " + std::to_string(den));
    }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr std::int64_t numerator() const { return is_integer() ? twice_ / 2 : twice_; }
    constexpr std::int64_t denominator() const { return is_integer() ? 1 : 2; }

    /// Value as an integer; throws if the value is a proper half.
    std::int64_t to_integer() const {
        if (!is_integer()) fail_computation("value " + str() + " is not an integer");
        return twice_ / 2;
    }

    /// Halves the value; the result must stay in the half-lattice.
    Half halved() const {
        if (twice_ % 2 != 0) fail_computation("halving " + str() + " leaves the half-integer lattice");
        return from_twice(twice_ / 2);
    }

    constexpr Half operator-() const { return from_twice(-twice_); }
    constexpr Half operator+(Half o) const { return from_twice(twice_ + o.twice_); }
    constexpr Half operator-(Half o) const { return from_twice(twice_ - o.twice_); }
    constexpr Half operator*(std::int64_t k) const { return from_twice(twice_ * k); }
    constexpr Half& operator+=(Half o) { twice_ += o.twice_; return *this; }
    constexpr Half& operator-=(Half o) { twice_ -= o.twice_; return *this; }

    constexpr auto operator<=>(const Half&) const = default;
    constexpr bool operator==(const Half&) const = default;

    constexpr Half abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

    std::string str() const {
        return is_integer() ? std::to_string(twice_ / 2) : std::to_string(twice_) + "/2";
    }

private:
    std::int64_t twice_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Half h) { return os << h.str(); }

struct Point2 {
    Half x;
    Half y;

    constexpr Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
    constexpr Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
    constexpr Point2 operator-() const { return {-x, -y}; }
    constexpr Point2 operator*(std::int64_t k) const { return {x * k, y * k}; }
    constexpr auto operator<=>(const Point2&) const = default;
    constexpr bool operator==(const Point2&) const = default;

    /// <p, (u,v)> for an integer direction.
    constexpr Half dot(std::int64_t u, std::int64_t v) const { return x * u + y * v; }
};

inline std::ostream& operator<<(std::ostream& os, Point2 p) {
    return os << '(' << p.x << ',' << p.y << ')';
}

}  // namespace tpoly
