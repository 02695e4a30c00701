#pragma once

/**
 * @file triangle.hpp
 * @brief Triangles, their three angles, and the structural predicates
 *        relating inscribed classes across vertices.
 */

#include "taxicab/angle.hpp"

#include <array>
#include <cstddef>

namespace taxicab {

class DegenerateTriangle : public GeometryError {
public:
    DegenerateTriangle() : GeometryError("degenerate triangle") {}
};

class Triangle {
public:
    Triangle(Point a, Point b, Point c) : v_{std::move(a), std::move(b), std::move(c)} {
        if (orientation(v_[0], v_[1], v_[2]) == 0) throw DegenerateTriangle();
    }
    explicit Triangle(const std::array<Point, 3>& v) : Triangle(v[0], v[1], v[2]) {}

    [[nodiscard]] const Point& vertex(std::size_t i) const { return v_.at(i); }
    [[nodiscard]] const std::array<Point, 3>& vertices() const noexcept { return v_; }

    /// Side i joins the two vertices other than vertex i.
    [[nodiscard]] std::pair<const Point&, const Point&> side(std::size_t i) const {
        return {v_.at((i + 1) % 3), v_.at((i + 2) % 3)};
    }

    friend bool operator==(const Triangle&, const Triangle&) = default;

    [[nodiscard]] std::string str() const { return v_[0].str() + " " + v_[1].str() + " " + v_[2].str(); }
    friend std::ostream& operator<<(std::ostream& os, const Triangle& t) { return os << t.str(); }

private:
    std::array<Point, 3> v_;
};

/// Angles at each vertex, rays toward the other two vertices in input order.
inline std::array<Angle, 3> angles(const Triangle& t) {
    const auto& v = t.vertices();
    return {Angle::toward(v[0], v[1], v[2]), Angle::toward(v[1], v[0], v[2]), Angle::toward(v[2], v[0], v[1])};
}

struct TriangleClassification {
    std::array<InscribedClass, 3> classes;
    std::array<Rational, 3> measures;
    bool is_inscribed = false;
    int completely_count = 0;

    friend bool operator==(const TriangleClassification&, const TriangleClassification&) = default;
};

inline TriangleClassification classify_triangle(const Triangle& t) {
    TriangleClassification out;
    const auto as = angles(t);
    out.is_inscribed = true;
    for (std::size_t i = 0; i < 3; ++i) {
        out.classes[i] = classify(as[i]);
        out.measures[i] = measure(as[i]);
        if (out.classes[i] == InscribedClass::not_inscribed) out.is_inscribed = false;
        if (out.classes[i] == InscribedClass::completely) ++out.completely_count;
    }
    return out;
}

inline bool has_slope_plus_one(const Point& p, const Point& q) { return (q.y - p.y) == (q.x - p.x); }
inline bool has_slope_minus_one(const Point& p, const Point& q) { return (q.y - p.y) == -(q.x - p.x); }
inline bool is_diagonal(const Point& p, const Point& q) { return has_slope_plus_one(p, q) || has_slope_minus_one(p, q); }

/// |slope| <= 1; vertical segments are steep.
inline bool is_shallow(const Point& p, const Point& q) { return abs(q.y - p.y) <= abs(q.x - p.x); }

/// One side has slope exactly +1 and another exactly -1.
inline bool has_diagonal_side_pair(const Triangle& t) {
    bool plus = false, minus = false;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto [p, q] = t.side(i);
        plus = plus || has_slope_plus_one(p, q);
        minus = minus || has_slope_minus_one(p, q);
    }
    return plus && minus;
}

/// Some side has slope exactly +1 or -1.
inline bool has_diagonal_side(const Triangle& t) {
    for (std::size_t i = 0; i < 3; ++i) {
        const auto [p, q] = t.side(i);
        if (is_diagonal(p, q)) return true;
    }
    return false;
}

// Structural predicates. Each returns true when the relation holds.

/// A strictly positive vertex forces both others to be negatively inscribed.
inline bool strict_positive_neighbors_negative(const TriangleClassification& c) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (c.classes[i] != InscribedClass::strictly_positive) continue;
        for (std::size_t j = 0; j < 3; ++j)
            if (j != i && !is_negatively_inscribed(c.classes[j])) return false;
    }
    return true;
}

/// A strictly negative vertex forces both others to be positively inscribed.
inline bool strict_negative_neighbors_positive(const TriangleClassification& c) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (c.classes[i] != InscribedClass::strictly_negative) continue;
        for (std::size_t j = 0; j < 3; ++j)
            if (j != i && !is_positively_inscribed(c.classes[j])) return false;
    }
    return true;
}

/// Three completely inscribed angles exactly when two sides have slopes +1 and -1.
inline bool three_completely_iff_diagonal_pair(const Triangle& t, const TriangleClassification& c) {
    return (c.completely_count == 3) == has_diagonal_side_pair(t);
}

/// An inscribed triangle has a completely inscribed vertex.
inline bool inscribed_has_completely(const TriangleClassification& c) {
    return !c.is_inscribed || c.completely_count >= 1;
}

/// An inscribed triangle admits a P/N vertex labelling, consistent with the
/// classes (completely inscribed vertices take either label), that is not
/// constant.
inline bool admits_alternating_labels(const TriangleClassification& c) {
    if (!c.is_inscribed) return true;
    for (unsigned mask = 0; mask < 8; ++mask) {
        bool consistent = true;
        for (std::size_t i = 0; i < 3; ++i) {
            const bool positive = (mask >> i) & 1U;
            if (positive && !is_positively_inscribed(c.classes[i])) consistent = false;
            if (!positive && !is_negatively_inscribed(c.classes[i])) consistent = false;
        }
        if (consistent && mask != 0 && mask != 7) return true;
    }
    return false;
}

}  // namespace taxicab
