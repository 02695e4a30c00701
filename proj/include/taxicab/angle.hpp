#pragma once

/**
 * @file angle.hpp
 * @brief Convex taxicab angles, their t-radian measure, and the
 *        positive/negative inscribed classification.
 *
 * An angle is the closed convex sector between two rays from a vertex.
 * Its t-radian measure is the arc it cuts from the unit taxicab circle
 * at the vertex (full turn = 8). The angle is positively inscribed when
 * the slope +1 line through the vertex misses the sector interior, and
 * negatively inscribed for the slope -1 line. A line carrying one of the
 * rays counts as missing the interior.
 */

#include "taxicab/circle.hpp"

#include <optional>
#include <string_view>

namespace taxicab {

enum class InscribedClass { not_inscribed, strictly_positive, strictly_negative, completely };

constexpr std::string_view to_string(InscribedClass c) {
    switch (c) {
        case InscribedClass::not_inscribed: return "not_inscribed";
        case InscribedClass::strictly_positive: return "strictly_positive";
        case InscribedClass::strictly_negative: return "strictly_negative";
        case InscribedClass::completely: return "completely";
    }
    return "?";
}

inline std::optional<InscribedClass> parse_inscribed_class(std::string_view s) {
    for (auto c : {InscribedClass::not_inscribed, InscribedClass::strictly_positive,
                   InscribedClass::strictly_negative, InscribedClass::completely})
        if (to_string(c) == s) return c;
    return std::nullopt;
}

constexpr bool is_positively_inscribed(InscribedClass c) {
    return c == InscribedClass::strictly_positive || c == InscribedClass::completely;
}
constexpr bool is_negatively_inscribed(InscribedClass c) {
    return c == InscribedClass::strictly_negative || c == InscribedClass::completely;
}
constexpr bool is_inscribed(InscribedClass c) { return c != InscribedClass::not_inscribed; }

class Angle {
public:
    Angle(Point vertex, Direction ray1, Direction ray2)
        : vertex_(std::move(vertex)), ray1_(std::move(ray1)), ray2_(std::move(ray2)) {
        if (cross(ray1_.vec(), ray2_.vec()).is_zero())
            throw GeometryError("angle rays are collinear: " + ray1_.vec().str() + ", " + ray2_.vec().str());
    }

    /// Angle at vertex with rays toward p and q.
    static Angle toward(const Point& vertex, const Point& p, const Point& q) {
        return Angle(vertex, Direction::between(vertex, p), Direction::between(vertex, q));
    }

    [[nodiscard]] const Point& vertex() const noexcept { return vertex_; }
    [[nodiscard]] const Direction& ray1() const noexcept { return ray1_; }
    [[nodiscard]] const Direction& ray2() const noexcept { return ray2_; }

private:
    Point vertex_;
    Direction ray1_;
    Direction ray2_;
};

inline const TaxicabCircle& unit_circle() {
    static const TaxicabCircle c{Point{0, 0}, Rational(1)};
    return c;
}

/// t-radian measure, in the open interval (0, 4).
inline Rational measure(const Angle& a) {
    const Point u1 = unit_point(a.ray1()).vec();
    const Point u2 = unit_point(a.ray2()).vec();
    const Rational arc = arc_length_ccw(unit_circle(), u1, u2);
    return min(arc, Rational(8) - arc);
}

inline bool positively_inscribed(const Angle& a) {
    return (cross_pos(a.ray1()) * cross_pos(a.ray2())).sign() >= 0;
}

inline bool negatively_inscribed(const Angle& a) {
    return (cross_neg(a.ray1()) * cross_neg(a.ray2())).sign() >= 0;
}

inline InscribedClass classify(const Angle& a) {
    const bool pos = positively_inscribed(a);
    const bool neg = negatively_inscribed(a);
    if (pos && neg) return InscribedClass::completely;
    if (pos) return InscribedClass::strictly_positive;
    if (neg) return InscribedClass::strictly_negative;
    return InscribedClass::not_inscribed;
}

/// Whether both rays point into one closed axis quadrant, i.e. the arc they
/// cut from the unit circle lies on a single circle edge.
inline bool rays_share_quadrant(const Direction& d1, const Direction& d2) {
    const auto same_side = [](const Rational& u, const Rational& v) {
        return !((u.sign() > 0 && v.sign() < 0) || (u.sign() < 0 && v.sign() > 0));
    };
    return same_side(d1.dx(), d2.dx()) && same_side(d1.dy(), d2.dy());
}

}  // namespace taxicab
