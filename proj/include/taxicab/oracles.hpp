#pragma once

/**
 * @file oracles.hpp
 * @brief Brute-force references used to cross-check the solvers, and the
 *        inscribed-angle demonstration.
 *
 * Nothing here calls into the circumcircle or incircle solvers.
 */

#include "taxicab/angle.hpp"
#include "taxicab/triangle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace taxicab {

/// Centers (X/4, Y/4) with X in [x_lo, x_hi] and Y in [y_lo, y_hi].
struct QuarterBox {
    std::int64_t x_lo, x_hi, y_lo, y_hi;

    [[nodiscard]] bool contains(const Point& c) const {
        const Rational qx = c.x * 4, qy = c.y * 4;
        return qx.is_integer() && qy.is_integer() && Rational(x_lo) <= qx && qx <= Rational(x_hi) &&
               Rational(y_lo) <= qy && qy <= Rational(y_hi);
    }
};

namespace detail {

inline std::int64_t to_int64(const Rational& r) {
    if (!r.is_integer() || !r.numerator().fits_slong_p())
        throw GeometryError("oracle requires small integer coordinates, got " + r.str());
    return r.numerator().get_si();
}

inline std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

}  // namespace detail

/// Scan window of oracle_circumcircle: the bounding box inflated by twice
/// the taxicab diameter, in quarter units.
inline QuarterBox circumcircle_oracle_box(const Triangle& t) {
    constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
    constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
    std::int64_t x_lo = kMax, x_hi = kMin, y_lo = kMax, y_hi = kMin, diam = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto x = detail::to_int64(t.vertex(i).x), y = detail::to_int64(t.vertex(i).y);
        x_lo = std::min(x_lo, x);
        x_hi = std::max(x_hi, x);
        y_lo = std::min(y_lo, y);
        y_hi = std::max(y_hi, y);
        for (std::size_t j = 0; j < 3; ++j)
            diam = std::max(diam, detail::to_int64(taxicab_distance(t.vertex(i), t.vertex(j))));
    }
    return {4 * (x_lo - 2 * diam), 4 * (x_hi + 2 * diam), 4 * (y_lo - 2 * diam), 4 * (y_hi + 2 * diam)};
}

/// Every circle through the three vertices whose center lies on the quarter
/// grid inside circumcircle_oracle_box. Integer vertices only. Sorted.
inline std::vector<TaxicabCircle> oracle_circumcircle(const Triangle& t) {
    const QuarterBox box = circumcircle_oracle_box(t);
    std::array<std::int64_t, 3> vx{}, vy{};
    for (std::size_t i = 0; i < 3; ++i) {
        vx[i] = 4 * detail::to_int64(t.vertex(i).x);
        vy[i] = 4 * detail::to_int64(t.vertex(i).y);
    }
    std::vector<TaxicabCircle> out;
    for (std::int64_t X = box.x_lo; X <= box.x_hi; ++X) {
        const std::int64_t a0 = detail::iabs(X - vx[0]), a1 = detail::iabs(X - vx[1]), a2 = detail::iabs(X - vx[2]);
        for (std::int64_t Y = box.y_lo; Y <= box.y_hi; ++Y) {
            const std::int64_t r = a0 + detail::iabs(Y - vy[0]);
            if (r == 0 || a1 + detail::iabs(Y - vy[1]) != r || a2 + detail::iabs(Y - vy[2]) != r) continue;
            out.emplace_back(Point{Rational(X, 4), Rational(Y, 4)}, Rational(r, 4));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Smallest multiple of step that is >= v.
inline Rational ceil_to_grid(const Rational& v, const Rational& step) {
    const Rational k = floor(v / step);
    const Rational below = k * step;
    return below == v ? below : below + step;
}

/// Best disc radius over centers on the grid (resolution * Z)^2 inside the
/// triangle's bounding box; each center gets its exact largest contained
/// radius, min over sides of slack / max(|a|, |b|). A lower bound on the
/// optimum.
inline Rational oracle_incircle_bound(const Triangle& t, const Rational& resolution) {
    if (resolution.sign() <= 0) throw GeometryError("oracle resolution must be positive");
    Rational x_lo = t.vertex(0).x, x_hi = x_lo, y_lo = t.vertex(0).y, y_hi = y_lo;
    for (const auto& v : t.vertices()) {
        x_lo = min(x_lo, v.x);
        x_hi = max(x_hi, v.x);
        y_lo = min(y_lo, v.y);
        y_hi = max(y_hi, v.y);
    }

    // Independent half-plane setup: a*x + b*y <= c with the opposite vertex inside.
    struct Half {
        Rational a, b, c, support;
    };
    std::array<Half, 3> halves;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& p = t.vertex((i + 1) % 3);
        const auto& q = t.vertex((i + 2) % 3);
        Rational a = p.y - q.y, b = q.x - p.x;
        Rational c = a * p.x + b * p.y;
        if (a * t.vertex(i).x + b * t.vertex(i).y > c) {
            a = -a;
            b = -b;
            c = -c;
        }
        halves[i] = {a, b, c, max(abs(a), abs(b))};
    }

    Rational best = 0;
    for (Rational x = ceil_to_grid(x_lo, resolution); x <= x_hi; x += resolution) {
        for (Rational y = ceil_to_grid(y_lo, resolution); y <= y_hi; y += resolution) {
            std::optional<Rational> rho;
            for (const auto& h : halves) {
                const Rational r = (h.c - h.a * x - h.b * y) / h.support;
                if (!rho || r < *rho) rho = r;
            }
            if (*rho > best) best = *rho;
        }
    }
    return best;
}

struct InscribedAngleDemo {
    Rational alpha;  ///< inscribed angle at the vertex
    Rational theta;  ///< central angle of the arc
};

/**
 * Central and inscribed measures for the counterclockwise arc from
 * arc_start to arc_end, seen from the center and from vertex. All three
 * points must be on the circle and the vertex off the closed arc.
 */
inline InscribedAngleDemo inscribed_angle_demo(const TaxicabCircle& c, const Point& arc_start, const Point& arc_end,
                                               const Point& vertex) {
    const Rational arc = arc_length_ccw(c, arc_start, arc_end);
    if (arc.is_zero()) throw GeometryError("arc endpoints coincide");
    if (arc_length_ccw(c, arc_start, vertex) <= arc)
        throw GeometryError("vertex " + vertex.str() + " lies on the arc");
    return {measure(Angle::toward(vertex, arc_start, arc_end)), arc / c.radius()};
}

struct InscribedAngleWitness {
    Point arc_start;
    Point arc_end;
    Point vertex;
};

/// First (start, end, vertex) triple, scanning perimeter parameters in
/// multiples of step, whose demo values equal (alpha, theta).
inline std::optional<InscribedAngleWitness> find_inscribed_angle_witness(const TaxicabCircle& c,
                                                                         const Rational& theta,
                                                                         const Rational& alpha,
                                                                         const Rational& step) {
    const Rational arc = theta * c.radius();
    if (arc.sign() <= 0 || arc >= c.perimeter()) return std::nullopt;
    for (Rational s = 0; s < c.perimeter(); s += step) {
        const Point start = point_at_param(c, s);
        const Point end = point_at_param(c, s + arc);
        for (Rational v = s + arc + step; v < s + c.perimeter(); v += step) {
            const Point vertex = point_at_param(c, v);
            const auto demo = inscribed_angle_demo(c, start, end, vertex);
            if (demo.alpha == alpha && demo.theta == theta) return InscribedAngleWitness{start, end, vertex};
        }
    }
    return std::nullopt;
}

}  // namespace taxicab
