#pragma once

/**
 * @file incircle.hpp
 * @brief Largest taxicab disc in a triangle, incircle classification, and
 *        the arc-length construction of the incircle.
 *
 * A taxicab disc (I, rho) lies in the half-plane a*x + b*y <= c iff
 * a*I.x + b*I.y + rho*max(|a|, |b|) <= c, because max(|a|, |b|) is the
 * support value of the unit L1 ball. The largest contained disc is
 * therefore a three-variable linear program with four constraints, solved
 * here by exact vertex enumeration.
 */

#include "taxicab/linear.hpp"
#include "taxicab/triangle.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace taxicab {

/// Half-plane a*x + b*y <= c containing the triangle; support = max(|a|, |b|).
struct SideConstraint {
    Rational a;
    Rational b;
    Rational c;
    Rational support;

    [[nodiscard]] Rational slack(const Point& p) const { return c - a * p.x - b * p.y; }
    [[nodiscard]] bool holds(const Point& p) const { return slack(p).sign() >= 0; }
    [[nodiscard]] bool contains(const TaxicabCircle& disc) const {
        return a * disc.center().x + b * disc.center().y + disc.radius() * support <= c;
    }
    [[nodiscard]] bool tight(const TaxicabCircle& disc) const {
        return a * disc.center().x + b * disc.center().y + disc.radius() * support == c;
    }

    friend bool operator==(const SideConstraint&, const SideConstraint&) = default;
};

namespace detail {

inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Scales (a, b, c) by a positive factor to coprime integers.
inline std::array<Rational, 3> to_lowest_integers(const std::array<Rational, 3>& v) {
    mpz_class den = 1;
    for (const auto& x : v) den = lcm(den, x.denominator());
    std::array<mpz_class, 3> n;
    mpz_class g = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        n[i] = v[i].numerator() * (den / v[i].denominator());
        g = gcd(g, n[i]);
    }
    return {Rational(n[0] / g, mpz_class(1)), Rational(n[1] / g, mpz_class(1)), Rational(n[2] / g, mpz_class(1))};
}

}  // namespace detail

/// Constraint i is the line through side i (opposite vertex i), oriented so
/// that vertex i satisfies it strictly.
inline std::array<SideConstraint, 3> side_constraints(const Triangle& t) {
    std::array<SideConstraint, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto [p, q] = t.side(i);
        Rational a = q.y - p.y;
        Rational b = p.x - q.x;
        Rational c = a * p.x + b * p.y;
        if (a * t.vertex(i).x + b * t.vertex(i).y > c) {
            a = -a;
            b = -b;
            c = -c;
        }
        const auto n = detail::to_lowest_integers({a, b, c});
        out[i] = SideConstraint{n[0], n[1], n[2], max(abs(n[0]), abs(n[1]))};
    }
    return out;
}

/// Whether the closed disc lies in the closed triangle.
inline bool disc_in_triangle(const Triangle& t, const TaxicabCircle& disc) {
    const auto sides = side_constraints(t);
    return std::all_of(sides.begin(), sides.end(), [&](const SideConstraint& s) { return s.contains(disc); });
}

enum class ContactKind { none, corner, edge };

constexpr std::string_view to_string(ContactKind k) {
    switch (k) {
        case ContactKind::none: return "none";
        case ContactKind::corner: return "corner";
        case ContactKind::edge: return "edge";
    }
    return "?";
}

/// How the disc meets side `side`: one corner, a whole edge (two corners), or not at all.
struct TouchDescriptor {
    std::size_t side = 0;
    ContactKind contact = ContactKind::none;
    std::vector<CornerId> corners;

    friend bool operator==(const TouchDescriptor&, const TouchDescriptor&) = default;
};

/// Contact of a disc with a side whose constraint is tight.
inline TouchDescriptor contact_for(std::size_t side, const SideConstraint& s) {
    const auto cmp = abs(s.a) <=> abs(s.b);
    if (cmp > 0) return {side, ContactKind::corner, {s.a.sign() > 0 ? CornerId::E : CornerId::W}};
    if (cmp < 0) return {side, ContactKind::corner, {s.b.sign() > 0 ? CornerId::N : CornerId::S}};
    const CornerId horizontal = s.a.sign() > 0 ? CornerId::E : CornerId::W;
    const CornerId vertical = s.b.sign() > 0 ? CornerId::N : CornerId::S;
    if (horizontal == CornerId::E) return {side, ContactKind::edge, {CornerId::E, vertical}};
    return {side, ContactKind::edge, {vertical, CornerId::W}};
}

inline std::array<TouchDescriptor, 3> touches(const Triangle& t, const TaxicabCircle& disc) {
    const auto sides = side_constraints(t);
    std::array<TouchDescriptor, 3> out;
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = sides[i].tight(disc) ? contact_for(i, sides[i]) : TouchDescriptor{i, ContactKind::none, {}};
    return out;
}

/// Number of the disc's corners lying on the boundary of the triangle.
inline int distinct_corner_count(const Triangle& t, const TaxicabCircle& disc) {
    int count = 0;
    for (const auto& c : corners(disc)) {
        for (std::size_t i = 0; i < 3; ++i) {
            const auto [p, q] = t.side(i);
            if (on_segment(c, p, q)) {
                ++count;
                break;
            }
        }
    }
    return count;
}

struct MaxInscribedCircle {
    TaxicabCircle circle;
    std::array<TouchDescriptor, 3> touches;
    bool unique = true;
    /// Every optimal vertex of the program, in active-set order.
    std::vector<TaxicabCircle> optimal_candidates;
};

inline MaxInscribedCircle max_inscribed_circle(const Triangle& t) {
    const auto sides = side_constraints(t);
    std::array<LinearRow, 4> rows;
    for (std::size_t i = 0; i < 3; ++i) rows[i] = {{sides[i].a, sides[i].b, sides[i].support}, sides[i].c};
    rows[3] = {{0, 0, -1}, 0};  // rho >= 0

    const auto feasible = [&](const Vec3& x) {
        return std::all_of(rows.begin(), rows.end(), [&](const LinearRow& r) { return dot(r.coef, x) <= r.rhs; });
    };

    // Active sets in lexicographic order: {0,1,2}, {0,1,3}, {0,2,3}, {1,2,3}.
    std::vector<Vec3> best;
    for (std::size_t skip = 4; skip-- > 0;) {
        std::vector<LinearRow> active;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != skip) active.push_back(rows[i]);
        const auto x = solve_unique(std::move(active));
        if (!x || !feasible(*x)) continue;
        if (best.empty() || (*x)[2] > best.front()[2]) best = {*x};
        else if ((*x)[2] == best.front()[2] && std::find(best.begin(), best.end(), *x) == best.end())
            best.push_back(*x);
    }
    if (best.empty() || best.front()[2].sign() <= 0)
        throw std::logic_error("no positive-radius disc in a non-degenerate triangle");

    bool unique = best.size() == 1;
    if (unique) {
        // A singular side system with a feasible level line would leave a
        // continuum of optimal centers.
        std::vector<LinearRow> all_sides(rows.begin(), rows.begin() + 3);
        if (const auto sol = solve_equalities(all_sides); sol && !sol->null_basis.empty()) {
            for (const auto& n : sol->null_basis)
                if (n[2].is_zero()) unique = false;
        }
    }

    MaxInscribedCircle out{TaxicabCircle({best.front()[0], best.front()[1]}, best.front()[2]), {}, unique, {}};
    for (const auto& x : best) out.optimal_candidates.emplace_back(Point{x[0], x[1]}, x[2]);
    out.touches = touches(t, out.circle);
    return out;
}

struct Incircle {
    TaxicabCircle circle;
    std::array<TouchDescriptor, 3> touches;
    int distinct_corner_count = 0;
    bool unique = true;

    friend bool operator==(const Incircle&, const Incircle&) = default;
};

/// The largest contained disc when fewer than three of its corners touch the sides.
struct NoIncircle {
    TaxicabCircle witness;
    int distinct_corner_count = 0;

    friend bool operator==(const NoIncircle&, const NoIncircle&) = default;
};

using IncircleResult = std::variant<Incircle, NoIncircle>;

inline IncircleResult incircle(const Triangle& t) {
    auto best = max_inscribed_circle(t);
    const int count = distinct_corner_count(t, best.circle);
    if (count >= 3) return Incircle{best.circle, best.touches, count, best.unique};
    return NoIncircle{best.circle, count};
}

inline const TaxicabCircle& result_circle(const IncircleResult& r) {
    if (const auto* in = std::get_if<Incircle>(&r)) return in->circle;
    return std::get<NoIncircle>(r).witness;
}

/**
 * The constructive incircle argument, evaluated literally.
 *
 * Pick a completely inscribed vertex C whose two sides have slope in
 * [-1, 1] (the vertex where the slope +1 and -1 sides meet, if all three
 * angles are completely inscribed), working in the (y, x) frame if no
 * vertex qualifies in the original one. With alpha, beta the measures at
 * the other vertices A, B, the point P on AB at distance
 * r_beta = alpha*|AB|/(alpha+beta) from B splits AB so that the arcs of
 * radius r_alpha about A and r_beta about B both have length l. Those two
 * arcs are taken as two edges of a circle of radius l/2 meeting at P.
 *
 * The argument needs each arc to stay on a single circle edge, which is
 * what `applicable` records. Only then is `circle` assembled.
 */
struct PaperConstruction {
    std::size_t gamma_vertex = 0;
    std::size_t a_vertex = 0;
    std::size_t b_vertex = 0;
    bool swapped_axes = false;
    Rational alpha;
    Rational beta;
    Rational side_ab;
    Rational r_alpha;
    Rational r_beta;
    Point p;
    Rational arc_length_l;
    Rational rho;
    bool applicable = false;
    /// Ends of the two arcs on sides AC and BC.
    std::optional<Point> arc_end_a;
    std::optional<Point> arc_end_b;
    std::optional<TaxicabCircle> circle;
    bool containment_ok = false;

    friend bool operator==(const PaperConstruction&, const PaperConstruction&) = default;
};

namespace detail {

inline Point swap_axes(const Point& p) { return {p.y, p.x}; }

inline std::optional<std::size_t> choose_gamma(const Triangle& t, const TriangleClassification& cls) {
    if (cls.completely_count == 3) {
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& v = t.vertex(i);
            const auto& p = t.vertex((i + 1) % 3);
            const auto& q = t.vertex((i + 2) % 3);
            if ((has_slope_plus_one(v, p) && has_slope_minus_one(v, q)) ||
                (has_slope_minus_one(v, p) && has_slope_plus_one(v, q)))
                return i;
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        if (cls.classes[i] != InscribedClass::completely) continue;
        const auto& v = t.vertex(i);
        if (is_shallow(v, t.vertex((i + 1) % 3)) && is_shallow(v, t.vertex((i + 2) % 3))) return i;
    }
    return std::nullopt;
}

}  // namespace detail

inline PaperConstruction paper_construction(const Triangle& t) {
    const auto cls = classify_triangle(t);
    if (!cls.is_inscribed) throw GeometryError("arc construction requires an inscribed triangle");

    PaperConstruction out;
    Triangle frame = t;
    auto gamma = detail::choose_gamma(t, cls);
    if (!gamma) {
        frame = Triangle(detail::swap_axes(t.vertex(0)), detail::swap_axes(t.vertex(1)), detail::swap_axes(t.vertex(2)));
        gamma = detail::choose_gamma(frame, classify_triangle(frame));
        out.swapped_axes = true;
    }
    if (!gamma) throw std::logic_error("inscribed triangle without a usable completely inscribed vertex");

    out.gamma_vertex = *gamma;
    out.a_vertex = (*gamma + 1) % 3;
    out.b_vertex = (*gamma + 2) % 3;
    const Point& A = frame.vertex(out.a_vertex);
    const Point& B = frame.vertex(out.b_vertex);
    const Point& C = frame.vertex(out.gamma_vertex);

    out.alpha = cls.measures[out.a_vertex];
    out.beta = cls.measures[out.b_vertex];
    out.side_ab = taxicab_distance(A, B);
    out.r_beta = out.alpha * out.side_ab / (out.alpha + out.beta);
    out.r_alpha = out.side_ab - out.r_beta;
    const Point p = B + (A - B) * (out.r_beta / out.side_ab);
    out.arc_length_l = out.r_alpha * out.alpha;
    out.rho = out.arc_length_l / 2;

    out.applicable = rays_share_quadrant(Direction::between(A, B), Direction::between(A, C)) &&
                     rays_share_quadrant(Direction::between(B, A), Direction::between(B, C));

    const auto back = [&](const Point& q) { return out.swapped_axes ? detail::swap_axes(q) : q; };
    out.p = back(p);
    if (out.applicable) {
        const Point qa = A + (C - A) * (out.r_alpha / taxicab_distance(A, C));
        const Point qb = B + (C - B) * (out.r_beta / taxicab_distance(B, C));
        out.arc_end_a = back(qa);
        out.arc_end_b = back(qb);
        out.circle = TaxicabCircle(back((qa + qb) / 2), out.rho);
        out.containment_ok = disc_in_triangle(t, *out.circle) && distinct_corner_count(t, *out.circle) >= 3;
    }
    return out;
}

}  // namespace taxicab
