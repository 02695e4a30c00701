#pragma once

/**
 * @file circle.hpp
 * @brief The taxicab circle: a square rotated 45 degrees.
 *
 * Boundary points are charted by a perimeter parameter t in [0, 8r),
 * measured as taxicab arc length counterclockwise from corner E.
 */

#include "taxicab/exact.hpp"

#include <array>
#include <string_view>

namespace taxicab {

enum class CornerId { E, N, W, S };

inline constexpr std::array<CornerId, 4> kCorners{CornerId::E, CornerId::N, CornerId::W, CornerId::S};

constexpr std::string_view to_string(CornerId c) {
    switch (c) {
        case CornerId::E: return "E";
        case CornerId::N: return "N";
        case CornerId::W: return "W";
        case CornerId::S: return "S";
    }
    return "?";
}

enum class Location { inside, boundary, outside };

constexpr std::string_view to_string(Location l) {
    switch (l) {
        case Location::inside: return "inside";
        case Location::boundary: return "boundary";
        case Location::outside: return "outside";
    }
    return "?";
}

class TaxicabCircle {
public:
    TaxicabCircle(Point center, Rational radius) : center_(std::move(center)), radius_(std::move(radius)) {
        if (radius_.sign() <= 0) throw GeometryError("circle radius must be positive, got " + radius_.str());
    }

    [[nodiscard]] const Point& center() const noexcept { return center_; }
    [[nodiscard]] const Rational& radius() const noexcept { return radius_; }
    [[nodiscard]] Rational perimeter() const { return radius_ * 8; }

    friend bool operator==(const TaxicabCircle&, const TaxicabCircle&) = default;
    friend std::strong_ordering operator<=>(const TaxicabCircle& a, const TaxicabCircle& b) {
        if (auto c = a.radius_ <=> b.radius_; c != 0) return c;
        return a.center_ <=> b.center_;
    }

    [[nodiscard]] std::string str() const { return "(" + center_.str() + ", " + radius_.str() + ")"; }
    friend std::ostream& operator<<(std::ostream& os, const TaxicabCircle& c) { return os << c.str(); }

private:
    Point center_;
    Rational radius_;
};

inline Point corner(const TaxicabCircle& c, CornerId id) {
    const auto& o = c.center();
    const auto& r = c.radius();
    switch (id) {
        case CornerId::E: return {o.x + r, o.y};
        case CornerId::N: return {o.x, o.y + r};
        case CornerId::W: return {o.x - r, o.y};
        case CornerId::S: return {o.x, o.y - r};
    }
    throw std::logic_error("bad corner id");
}

/// Corners indexed in E, N, W, S order.
inline std::array<Point, 4> corners(const TaxicabCircle& c) {
    return {corner(c, CornerId::E), corner(c, CornerId::N), corner(c, CornerId::W), corner(c, CornerId::S)};
}

inline Location locate(const TaxicabCircle& c, const Point& p) {
    const auto cmp = taxicab_distance(p, c.center()) <=> c.radius();
    if (cmp < 0) return Location::inside;
    if (cmp > 0) return Location::outside;
    return Location::boundary;
}

inline bool on_boundary(const TaxicabCircle& c, const Point& p) { return locate(c, p) == Location::boundary; }

inline Rational perimeter_param(const TaxicabCircle& c, const Point& p) {
    if (!on_boundary(c, p)) throw GeometryError("point " + p.str() + " is not on circle " + c.str());
    const Rational dx = p.x - c.center().x;
    const Rational dy = p.y - c.center().y;
    const Rational& r = c.radius();
    if (dx.sign() >= 0 && dy.sign() >= 0) return dy * 2;
    if (dx.sign() <= 0 && dy.sign() >= 0) return r * 2 - dx * 2;
    if (dx.sign() <= 0 && dy.sign() <= 0) return r * 4 - dy * 2;
    return mod(r * 6 + dx * 2, c.perimeter());
}

inline Point point_at_param(const TaxicabCircle& c, const Rational& t) {
    const Rational& r = c.radius();
    const Rational u = mod(t, c.perimeter());
    Rational dx, dy;
    if (u < r * 2) {
        dy = u / 2;
        dx = r - dy;
    } else if (u < r * 4) {
        dx = (r * 2 - u) / 2;
        dy = r + dx;
    } else if (u < r * 6) {
        dy = (r * 4 - u) / 2;
        dx = -r - dy;
    } else {
        dx = (u - r * 6) / 2;
        dy = dx - r;
    }
    return {c.center().x + dx, c.center().y + dy};
}

/// Counterclockwise taxicab arc length from p1 to p2, in [0, 8r).
inline Rational arc_length_ccw(const TaxicabCircle& c, const Point& p1, const Point& p2) {
    return mod(perimeter_param(c, p2) - perimeter_param(c, p1), c.perimeter());
}

/// Whether the closed disc lies in the closed half-plane a*x + b*y <= rhs.
inline bool disc_in_halfplane(const TaxicabCircle& c, const Rational& a, const Rational& b, const Rational& rhs) {
    return a * c.center().x + b * c.center().y + c.radius() * max(abs(a), abs(b)) <= rhs;
}

}  // namespace taxicab
