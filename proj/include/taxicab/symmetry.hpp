#pragma once

/**
 * @file symmetry.hpp
 * @brief Taxicab similarities of the plane and how results transform
 *        under them.
 *
 * A PlaneMap is p -> scale * flip(swap(p)) + shift, with an optional
 * (x, y) -> (y, x) swap and per-axis sign flips. These maps preserve the
 * L1 metric up to the positive scale, so they carry circles to circles and
 * every solver result to the corresponding result of the mapped triangle.
 */

#include "taxicab/circumcircle.hpp"
#include "taxicab/incircle.hpp"

#include <algorithm>
#include <string>

namespace taxicab {

struct PlaneMap {
    bool swap_axes = false;
    bool flip_x = false;
    bool flip_y = false;
    Rational scale = 1;
    Point shift{0, 0};

    [[nodiscard]] Point linear(const Point& p) const {
        Point q = swap_axes ? Point{p.y, p.x} : p;
        if (flip_x) q.x = -q.x;
        if (flip_y) q.y = -q.y;
        return q * scale;
    }
    [[nodiscard]] Point apply(const Point& p) const { return linear(p) + shift; }

    [[nodiscard]] TaxicabCircle apply(const TaxicabCircle& c) const {
        return TaxicabCircle(apply(c.center()), c.radius() * scale);
    }
    [[nodiscard]] Triangle apply(const Triangle& t) const {
        return Triangle(apply(t.vertex(0)), apply(t.vertex(1)), apply(t.vertex(2)));
    }

    /// An odd number of sign flips exchanges the slope +1 and -1 lines.
    [[nodiscard]] InscribedClass apply(InscribedClass c) const {
        if (flip_x == flip_y) return c;
        if (c == InscribedClass::strictly_positive) return InscribedClass::strictly_negative;
        if (c == InscribedClass::strictly_negative) return InscribedClass::strictly_positive;
        return c;
    }

    [[nodiscard]] CornerId apply(CornerId id) const {
        const TaxicabCircle unit{Point{0, 0}, Rational(1)};
        const Point image = linear(corner(unit, id)) / scale;
        for (auto c : kCorners)
            if (corner(unit, c) == image) return c;
        throw std::logic_error("plane map does not permute corners");
    }

    [[nodiscard]] std::string str() const {
        std::string out = "map(";
        out += swap_axes ? "swap," : "";
        out += flip_x ? "flip_x," : "";
        out += flip_y ? "flip_y," : "";
        return out + "scale=" + scale.str() + ",shift=" + shift.str() + ")";
    }
};

inline TriangleClassification map_result(const PlaneMap& m, const TriangleClassification& c) {
    TriangleClassification out = c;
    for (auto& k : out.classes) k = m.apply(k);
    return out;
}

inline CircumcircleSolutionSet map_result(const PlaneMap& m, const CircumcircleSolutionSet& set) {
    std::vector<CircleFamily> parts;
    for (const auto& f : set.components) {
        switch (f.kind) {
            case FamilyKind::point:
                parts.push_back(make_point_family(m.apply(f.base)));
                break;
            case FamilyKind::segment:
                parts.push_back(make_segment_family(m.apply(f.base), m.apply(family_end(f))));
                break;
            case FamilyKind::ray: {
                const Point v = m.linear(f.center_velocity->vec());
                parts.push_back(make_ray_family(m.apply(f.base), {v.x, v.y, f.radius_rate * m.scale}));
                break;
            }
        }
    }
    return normalize_solution_set(std::move(parts));
}

inline TouchDescriptor map_result(const PlaneMap& m, const TouchDescriptor& d) {
    TouchDescriptor out = d;
    for (auto& c : out.corners) c = m.apply(c);
    std::sort(out.corners.begin(), out.corners.end());
    return out;
}

inline IncircleResult map_result(const PlaneMap& m, const IncircleResult& r) {
    if (const auto* in = std::get_if<Incircle>(&r)) {
        Incircle out{m.apply(in->circle), in->touches, in->distinct_corner_count, in->unique};
        for (auto& t : out.touches) t = map_result(m, t);
        return out;
    }
    const auto& no = std::get<NoIncircle>(r);
    return NoIncircle{m.apply(no.witness), no.distinct_corner_count};
}

/// Touch descriptors with corner lists sorted, for comparing mapped results.
inline IncircleResult canonical_touches(IncircleResult r) {
    if (auto* in = std::get_if<Incircle>(&r))
        for (auto& t : in->touches) std::sort(t.corners.begin(), t.corners.end());
    return r;
}

}  // namespace taxicab
