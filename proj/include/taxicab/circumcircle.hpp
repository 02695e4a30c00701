#pragma once

/**
 * @file circumcircle.hpp
 * @brief Every taxicab circle through the three vertices of a triangle.
 *
 * With S = cx + cy and D = cx - cy the taxicab distance from the center to
 * a point (x, y) is max(|s - S|, |d - D|) where s = x + y, d = x - y, so a
 * taxicab circle is an axis-aligned square in (s, d) coordinates. Putting
 * a vertex on a given circle edge is then one linear equality in (S, D, r)
 * plus two linear inequalities that keep it between the edge's corners.
 * The solver enumerates all 4^3 edge assignments, solves each exactly, and
 * merges the pieces into maximal one-parameter families.
 */

#include "taxicab/linear.hpp"
#include "taxicab/triangle.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace taxicab {

/// Circle edges. NE and SW have slope -1, NW and SE have slope +1.
enum class EdgeId { NE, NW, SW, SE };

inline constexpr std::array<EdgeId, 4> kEdges{EdgeId::NE, EdgeId::NW, EdgeId::SW, EdgeId::SE};

constexpr std::string_view to_string(EdgeId e) {
    switch (e) {
        case EdgeId::NE: return "NE";
        case EdgeId::NW: return "NW";
        case EdgeId::SW: return "SW";
        case EdgeId::SE: return "SE";
    }
    return "?";
}

/// Edge of vertex i is element i.
using EdgeAssignment = std::array<EdgeId, 3>;

/// All 64 assignments in lexicographic order.
inline std::vector<EdgeAssignment> all_edge_assignments() {
    std::vector<EdgeAssignment> out;
    out.reserve(64);
    for (auto a : kEdges)
        for (auto b : kEdges)
            for (auto c : kEdges) out.push_back({a, b, c});
    return out;
}

enum class FamilyKind { point, segment, ray };

constexpr std::string_view to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::point: return "point";
        case FamilyKind::segment: return "segment";
        case FamilyKind::ray: return "ray";
    }
    return "?";
}

/**
 * Circles base + t * (center_velocity, radius_rate) for t in [0, t_max],
 * or t >= 0 when t_max is absent. The velocity triple is scaled to unit
 * max-norm. A segment's base is its endpoint with the smaller
 * (radius, center x, center y). Point families carry no velocity and
 * t_max = 0.
 */
struct CircleFamily {
    FamilyKind kind = FamilyKind::point;
    TaxicabCircle base;
    std::optional<Direction> center_velocity;
    Rational radius_rate;
    std::optional<Rational> t_max;

    [[nodiscard]] bool bounded() const { return t_max.has_value(); }

    friend bool operator==(const CircleFamily&, const CircleFamily&) = default;
};

namespace detail {

// (cx, cy, r) triples.
inline Vec3 to_vec(const TaxicabCircle& c) { return {c.center().x, c.center().y, c.radius()}; }
inline TaxicabCircle to_circle(const Vec3& v) { return TaxicabCircle({v[0], v[1]}, v[2]); }

inline bool radius_first_less(const Vec3& a, const Vec3& b) {
    if (a[2] != b[2]) return a[2] < b[2];
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
}

inline Vec3 velocity_of(const CircleFamily& f) {
    if (!f.center_velocity) return {0, 0, 0};
    return {f.center_velocity->dx(), f.center_velocity->dy(), f.radius_rate};
}

}  // namespace detail

inline CircleFamily make_point_family(const TaxicabCircle& c) {
    return CircleFamily{FamilyKind::point, c, std::nullopt, Rational(0), Rational(0)};
}

/// Family between two distinct circles.
inline CircleFamily make_segment_family(const TaxicabCircle& a, const TaxicabCircle& b) {
    Vec3 p = detail::to_vec(a), q = detail::to_vec(b);
    if (p == q) return make_point_family(a);
    if (detail::radius_first_less(q, p)) std::swap(p, q);
    const Vec3 step = q - p;
    const Rational len = linf_norm(step);
    const Vec3 v = step * (Rational(1) / len);
    return CircleFamily{FamilyKind::segment, detail::to_circle(p), Direction(v[0], v[1]), v[2], len};
}

/// Unbounded family from base along (center_step, radius_step).
inline CircleFamily make_ray_family(const TaxicabCircle& base, const Vec3& step) {
    const Vec3 v = step * (Rational(1) / linf_norm(step));
    return CircleFamily{FamilyKind::ray, base, Direction(v[0], v[1]), v[2], std::nullopt};
}

inline TaxicabCircle circle_at(const CircleFamily& f, const Rational& t) {
    if (t.sign() < 0 || (f.t_max && t > *f.t_max))
        throw GeometryError("family parameter " + t.str() + " out of range");
    return detail::to_circle(detail::to_vec(f.base) + detail::velocity_of(f) * t);
}

/// Far endpoint of a bounded family.
inline TaxicabCircle family_end(const CircleFamily& f) {
    if (!f.t_max) throw GeometryError("unbounded family has no far endpoint");
    return circle_at(f, *f.t_max);
}

/// A circle strictly inside the parameter range (the base for points).
inline TaxicabCircle interior_sample(const CircleFamily& f) {
    if (f.kind == FamilyKind::point) return f.base;
    if (f.t_max) return circle_at(f, *f.t_max / 2);
    return circle_at(f, Rational(1));
}

namespace detail {

/// Parameter t (unrestricted) with base + t*v == c, if c is on the family's line.
inline std::optional<Rational> line_param(const CircleFamily& f, const Vec3& c) {
    const Vec3 v = velocity_of(f);
    const Vec3 off = c - to_vec(f.base);
    if (is_zero(v)) return is_zero(off) ? std::optional<Rational>(Rational(0)) : std::nullopt;
    std::size_t k = 0;
    while (v[k].is_zero()) ++k;
    const Rational t = off[k] / v[k];
    if (off != v * t) return std::nullopt;
    return t;
}

}  // namespace detail

inline bool family_contains(const CircleFamily& f, const TaxicabCircle& c) {
    const auto t = detail::line_param(f, detail::to_vec(c));
    if (!t || t->sign() < 0) return false;
    return !f.t_max || *t <= *f.t_max;
}

enum class Multiplicity { none, unique, bounded_family, unbounded_family, mixed };

constexpr std::string_view to_string(Multiplicity m) {
    switch (m) {
        case Multiplicity::none: return "none";
        case Multiplicity::unique: return "unique";
        case Multiplicity::bounded_family: return "bounded_family";
        case Multiplicity::unbounded_family: return "unbounded_family";
        case Multiplicity::mixed: return "mixed";
    }
    return "?";
}

struct CircumcircleSolutionSet {
    std::vector<CircleFamily> components;
    Multiplicity multiplicity = Multiplicity::none;

    [[nodiscard]] bool empty() const { return components.empty(); }
    friend bool operator==(const CircumcircleSolutionSet&, const CircumcircleSolutionSet&) = default;
};

namespace detail {

/// s = x + y and d = x - y of each vertex.
struct RotatedVertices {
    std::array<Rational, 3> s;
    std::array<Rational, 3> d;

    explicit RotatedVertices(const Triangle& t) {
        for (std::size_t i = 0; i < 3; ++i) {
            s[i] = t.vertex(i).x + t.vertex(i).y;
            d[i] = t.vertex(i).x - t.vertex(i).y;
        }
    }
};

inline bool on_s_edge(EdgeId e) { return e == EdgeId::NE || e == EdgeId::SW; }

// Edge equality as X + sign * r = value with X = S for NE/SW and X = D for
// NW/SE: NE: s = S + r, SW: s = S - r, SE: d = D + r, NW: d = D - r.
inline int edge_sign(EdgeId e) { return (e == EdgeId::NE || e == EdgeId::SE) ? 1 : -1; }

/// The at most two distinct equalities of one coordinate group.
struct GroupEquations {
    std::optional<Rational> plus;   // X + r = value
    std::optional<Rational> minus;  // X - r = value

    /// False if the new equality contradicts one already present.
    bool add(int sign, const Rational& value) {
        auto& slot = sign > 0 ? plus : minus;
        if (slot) return *slot == value;
        slot = value;
        return true;
    }
};

// (S, D, r) -> (cx, cy, r); linear, so also maps directions.
inline Vec3 sdr_to_circle_space(const Vec3& v) {
    return {(v[0] + v[1]) / 2, (v[0] - v[1]) / 2, v[2]};
}

/// Membership rows keeping each vertex between the corners of its edge:
/// |d - D| <= r on NE/SW edges, |s - S| <= r on NW/SE edges; plus r >= 0.
inline std::vector<LinearRow> edge_span_rows(const RotatedVertices& rv, const EdgeAssignment& a) {
    std::vector<LinearRow> rows;
    rows.reserve(7);
    for (std::size_t i = 0; i < 3; ++i) {
        if (on_s_edge(a[i])) {
            rows.push_back({{0, -1, -1}, -rv.d[i]});
            rows.push_back({{0, 1, -1}, rv.d[i]});
        } else {
            rows.push_back({{-1, 0, -1}, -rv.s[i]});
            rows.push_back({{1, 0, -1}, rv.s[i]});
        }
    }
    rows.push_back({{0, 0, -1}, 0});
    return rows;
}

inline std::optional<CircleFamily> solve_rotated(const RotatedVertices& rv, const EdgeAssignment& a) {
    GroupEquations sg, dg;
    for (std::size_t i = 0; i < 3; ++i) {
        const bool ok = on_s_edge(a[i]) ? sg.add(edge_sign(a[i]), rv.s[i]) : dg.add(edge_sign(a[i]), rv.d[i]);
        if (!ok) return std::nullopt;
    }

    // Pin r from a group holding both signs: X + r = p, X - r = m.
    std::optional<Rational> r;
    const auto pin = [&](const GroupEquations& g) -> bool {
        if (!g.plus || !g.minus) return true;
        const Rational rr = (*g.plus - *g.minus) / 2;
        if (r && *r != rr) return false;
        r = rr;
        return true;
    };
    if (!pin(sg) || !pin(dg)) return std::nullopt;

    const auto solve_group = [&](const GroupEquations& g, const Rational& radius) -> std::optional<Rational> {
        if (g.plus) return *g.plus - radius;
        if (g.minus) return *g.minus + radius;
        return std::nullopt;
    };

    Vec3 p{0, 0, 0}, n{0, 0, 0};
    if (r) {
        if (r->sign() < 0) return std::nullopt;
        const auto S = solve_group(sg, *r);
        const auto D = solve_group(dg, *r);
        if (!S && !D) throw std::logic_error("circumcircle system underdetermined for a non-degenerate triangle");
        p = {S.value_or(0), D.value_or(0), *r};
        if (!S) n = {1, 0, 0};
        else if (!D) n = {0, 1, 0};
    } else {
        // One equality per group: S = vs - ss * r, D = vd - sd * r, r free.
        const bool s_plus = sg.plus.has_value(), d_plus = dg.plus.has_value();
        if ((!sg.plus && !sg.minus) || (!dg.plus && !dg.minus))
            throw std::logic_error("circumcircle system underdetermined for a non-degenerate triangle");
        p = {s_plus ? *sg.plus : *sg.minus, d_plus ? *dg.plus : *dg.minus, 0};
        n = {s_plus ? -1 : 1, d_plus ? -1 : 1, 1};
    }

    const auto rows = edge_span_rows(rv, a);
    if (is_zero(n)) {
        for (const auto& row : rows)
            if (dot(row.coef, p) > row.rhs) return std::nullopt;
        const Vec3 c = sdr_to_circle_space(p);
        if (c[2].sign() <= 0) return std::nullopt;
        return make_point_family(to_circle(c));
    }

    const auto iv = clip_line(p, n, rows);
    if (!iv) return std::nullopt;
    const auto at = [&](const Rational& tt) { return sdr_to_circle_space(p + n * tt); };
    const auto check_radius = [](const Vec3& c) {
        if (c[2].sign() <= 0) throw std::logic_error("zero-radius circumcircle for a non-degenerate triangle");
    };
    if (iv->lo && iv->hi) {
        const Vec3 lo = at(*iv->lo), hi = at(*iv->hi);
        check_radius(lo);
        check_radius(hi);
        return make_segment_family(to_circle(lo), to_circle(hi));
    }
    if (!iv->lo && !iv->hi) throw std::logic_error("circumcircle family unbounded in both directions");
    const Vec3 end = at(iv->lo ? *iv->lo : *iv->hi);
    check_radius(end);
    return make_ray_family(to_circle(end), sdr_to_circle_space(iv->lo ? n : n * Rational(-1)));
}

}  // namespace detail

/// Circles whose edges carry the vertices as assigned; empty if infeasible.
inline std::optional<CircleFamily> solve_assignment(const Triangle& t, const EdgeAssignment& a) {
    return detail::solve_rotated(detail::RotatedVertices(t), a);
}

namespace detail {

struct ParamRange {
    std::optional<Rational> lo;  // absent = -infinity
    std::optional<Rational> hi;  // absent = +infinity
};

/// Range of g expressed in f's line parameter; requires collinear families.
inline std::optional<ParamRange> range_on_line_of(const CircleFamily& f, const CircleFamily& g) {
    const auto tb = line_param(f, to_vec(g.base));
    if (!tb) return std::nullopt;
    const Vec3 vf = velocity_of(f), vg = velocity_of(g);
    if (vg == vf) {
        if (g.t_max) return ParamRange{*tb, *tb + *g.t_max};
        return ParamRange{*tb, std::nullopt};
    }
    if (vg == vf * Rational(-1)) {
        if (g.t_max) return ParamRange{*tb - *g.t_max, *tb};
        return ParamRange{std::nullopt, *tb};
    }
    return std::nullopt;
}

/// Union of two families if they lie on one line and share a circle.
inline std::optional<CircleFamily> try_merge(const CircleFamily& f, const CircleFamily& g) {
    if (g.kind == FamilyKind::point) {
        if (family_contains(f, g.base)) return f;
        return std::nullopt;
    }
    if (f.kind == FamilyKind::point) return try_merge(g, f);

    const auto rg = range_on_line_of(f, g);
    if (!rg) return std::nullopt;
    const ParamRange rf{Rational(0), f.t_max};

    // Overlap test: max(lo) <= min(hi), with absent bounds infinite.
    const std::optional<Rational> lo_max = rg->lo ? std::optional<Rational>(max(*rf.lo, *rg->lo)) : rf.lo;
    std::optional<Rational> hi_min;
    if (rf.hi && rg->hi) hi_min = min(*rf.hi, *rg->hi);
    else if (rf.hi) hi_min = rf.hi;
    else hi_min = rg->hi;
    if (lo_max && hi_min && *hi_min < *lo_max) return std::nullopt;

    std::optional<Rational> lo, hi;
    if (rg->lo) lo = min(*rf.lo, *rg->lo);
    if (rf.hi && rg->hi) hi = max(*rf.hi, *rg->hi);
    if (!lo && !hi) throw std::logic_error("merged circumcircle family unbounded in both directions");

    const Vec3 base = to_vec(f.base);
    const Vec3 v = velocity_of(f);
    const auto at = [&](const Rational& t) { return to_circle(base + v * t); };
    if (lo && hi) return make_segment_family(at(*lo), at(*hi));
    if (lo) return make_ray_family(at(*lo), v);
    return make_ray_family(at(*hi), v * Rational(-1));
}

inline bool family_less(const CircleFamily& a, const CircleFamily& b) {
    const Vec3 pa = to_vec(a.base), pb = to_vec(b.base);
    if (pa != pb) return radius_first_less(pa, pb);
    if (a.kind != b.kind) return a.kind < b.kind;
    const Vec3 va = velocity_of(a), vb = velocity_of(b);
    for (std::size_t i = 0; i < 3; ++i)
        if (va[i] != vb[i]) return va[i] < vb[i];
    if (a.t_max.has_value() != b.t_max.has_value()) return a.t_max.has_value();
    return a.t_max && *a.t_max < *b.t_max;
}

}  // namespace detail

/// Merges overlapping families, sorts them, and classifies multiplicity.
inline CircumcircleSolutionSet normalize_solution_set(std::vector<CircleFamily> parts) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < parts.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < parts.size() && !changed; ++j) {
                if (auto m = detail::try_merge(parts[i], parts[j])) {
                    parts[i] = std::move(*m);
                    parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(j));
                    changed = true;
                }
            }
        }
    }
    std::sort(parts.begin(), parts.end(), detail::family_less);

    CircumcircleSolutionSet out;
    out.components = std::move(parts);
    bool has_ray = false, has_segment = false, has_point = false;
    for (const auto& f : out.components) {
        has_ray = has_ray || f.kind == FamilyKind::ray;
        has_segment = has_segment || f.kind == FamilyKind::segment;
        has_point = has_point || f.kind == FamilyKind::point;
    }
    if (out.components.empty()) out.multiplicity = Multiplicity::none;
    else if (out.components.size() == 1 && has_point) out.multiplicity = Multiplicity::unique;
    else if (has_ray && !has_segment && !has_point) out.multiplicity = Multiplicity::unbounded_family;
    else if (!has_ray && has_segment) out.multiplicity = Multiplicity::bounded_family;
    else out.multiplicity = Multiplicity::mixed;
    return out;
}

inline CircumcircleSolutionSet circumcircles(const Triangle& t) {
    const detail::RotatedVertices rv(t);
    std::vector<CircleFamily> parts;
    for (const auto& a : all_edge_assignments())
        if (auto f = detail::solve_rotated(rv, a)) parts.push_back(std::move(*f));
    return normalize_solution_set(std::move(parts));
}

/// Whether every vertex is at taxicab distance radius from the center.
inline bool verify_circumcircle(const Triangle& t, const TaxicabCircle& c) {
    for (const auto& v : t.vertices())
        if (taxicab_distance(v, c.center()) != c.radius()) return false;
    return true;
}

inline bool solution_set_contains(const CircumcircleSolutionSet& set, const TaxicabCircle& c) {
    return std::any_of(set.components.begin(), set.components.end(),
                       [&](const CircleFamily& f) { return family_contains(f, c); });
}

}  // namespace taxicab
