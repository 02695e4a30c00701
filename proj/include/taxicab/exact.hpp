#pragma once

/**
 * @file exact.hpp
 * @brief Planar points, nonzero directions and the L1 primitives.
 *
 * Points double as 2-vectors for affine arithmetic. Direction is the
 * checked type for ray directions: it can never be the zero vector.
 */

#include "taxicab/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace taxicab {

/// Raised for inputs that violate a geometric precondition.
class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
    friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }

    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator-(const Point& a) { return {-a.x, -a.y}; }
    friend Point operator*(const Point& a, const Rational& k) { return {a.x * k, a.y * k}; }
    friend Point operator*(const Rational& k, const Point& a) { return {a.x * k, a.y * k}; }
    friend Point operator/(const Point& a, const Rational& k) { return {a.x / k, a.y / k}; }

    [[nodiscard]] bool is_origin() const { return x.is_zero() && y.is_zero(); }
    [[nodiscard]] std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
    friend std::ostream& operator<<(std::ostream& os, const Point& p) { return os << p.str(); }
};

class Direction {
public:
    Direction(Rational dx, Rational dy) : dx_(std::move(dx)), dy_(std::move(dy)) {
        if (dx_.is_zero() && dy_.is_zero()) throw GeometryError("zero direction");
    }
    explicit Direction(const Point& v) : Direction(v.x, v.y) {}

    /// Direction from p toward q; p and q must differ.
    static Direction between(const Point& p, const Point& q) { return Direction(q - p); }

    [[nodiscard]] const Rational& dx() const noexcept { return dx_; }
    [[nodiscard]] const Rational& dy() const noexcept { return dy_; }
    [[nodiscard]] Point vec() const { return {dx_, dy_}; }

    friend bool operator==(const Direction&, const Direction&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Direction& d) { return os << d.vec(); }

private:
    Rational dx_;
    Rational dy_;
};

inline Rational taxicab_norm(const Point& v) { return abs(v.x) + abs(v.y); }
inline Rational taxicab_norm(const Direction& d) { return abs(d.dx()) + abs(d.dy()); }

inline Rational taxicab_distance(const Point& p, const Point& q) { return taxicab_norm(p - q); }

/// Scales d onto the unit taxicab circle.
inline Direction unit_point(const Direction& d) {
    const Rational n = taxicab_norm(d);
    return Direction(d.dx() / n, d.dy() / n);
}

/// Side of the slope +1 line: positive above, negative below.
inline Rational cross_pos(const Direction& d) { return d.dy() - d.dx(); }
/// Side of the slope -1 line: positive above, negative below.
inline Rational cross_neg(const Direction& d) { return d.dx() + d.dy(); }

/// z-component of u x v.
inline Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

/// Orientation of (a, b, c): +1 counterclockwise, -1 clockwise, 0 collinear.
inline int orientation(const Point& a, const Point& b, const Point& c) { return cross(b - a, c - a).sign(); }

/// Whether p lies on the closed segment [a, b].
inline bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orientation(a, b, p) != 0) return false;
    return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) && min(a.y, b.y) <= p.y && p.y <= max(a.y, b.y);
}

}  // namespace taxicab
