#pragma once

/**
 * @file vec.hpp
 * @brief Length-3 integer and rational coordinate vectors in the basis {a,b,c}.
 */

#include <array>
#include <compare>
#include <optional>
#include <string>

#include "gcm3/numeric.hpp"

namespace gcm3 {

struct IntVec3 {
    Int x{0}, y{0}, z{0};

    IntVec3() = default;
    IntVec3(Int x_, Int y_, Int z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    IntVec3(long x_, long y_, long z_) : x(x_), y(y_), z(z_) {}

    const Int& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    Int& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

    friend IntVec3 operator+(const IntVec3& a, const IntVec3& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend IntVec3 operator-(const IntVec3& a, const IntVec3& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend IntVec3 operator*(const Int& s, const IntVec3& v) {
        return {s * v.x, s * v.y, s * v.z};
    }
    IntVec3 operator-() const { return {-x, -y, -z}; }

    friend bool operator==(const IntVec3& a, const IntVec3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const IntVec3& a, const IntVec3& b) { return !(a == b); }
    // Lexicographic; used for canonical orderings.
    friend bool operator<(const IntVec3& a, const IntVec3& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    }

    bool is_zero() const { return x == 0 && y == 0 && z == 0; }
    Int content() const { return gcd(gcd(abs(x), abs(y)), abs(z)); }
    bool is_primitive() const { return content() == 1; }

    // Divides out the content; zero stays zero.
    IntVec3 primitive() const {
        Int g = content();
        if (g == 0 || g == 1) return *this;
        return {x / g, y / g, z / g};
    }
};

struct RatVec3 {
    Rat x, y, z;

    RatVec3() = default;
    RatVec3(Rat x_, Rat y_, Rat z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    explicit RatVec3(const IntVec3& v) : x(v.x), y(v.y), z(v.z) {}

    const Rat& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    friend RatVec3 operator+(const RatVec3& a, const RatVec3& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend RatVec3 operator-(const RatVec3& a, const RatVec3& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend RatVec3 operator*(const Rat& s, const RatVec3& v) {
        return {s * v.x, s * v.y, s * v.z};
    }
    RatVec3 operator-() const { return {-x, -y, -z}; }

    friend bool operator==(const RatVec3& a, const RatVec3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const RatVec3& a, const RatVec3& b) { return !(a == b); }

    bool is_integral() const { return is_integer(x) && is_integer(y) && is_integer(z); }

    // Valid only when is_integral().
    IntVec3 to_int() const { return {Int(x.get_num()), Int(y.get_num()), Int(z.get_num())}; }
};

// "2a+9b+6c", "b+2c", "-3b-2c", "0".
std::string to_abc_string(const IntVec3& v);
std::string to_abc_string(const RatVec3& v);

// Accepts both the symbolic form ("2a+9b+6c", "c", "-b") and a plain
// coordinate triple "x,y,z".
std::optional<IntVec3> parse_abc(const std::string& s);

}  // namespace gcm3
