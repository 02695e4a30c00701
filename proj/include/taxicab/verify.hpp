#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive and randomized property sweep over triangles.
 *
 * Every non-degenerate triangle with integer vertices in a box (each vertex
 * set once, in row-major point order) plus a seeded batch of random
 * rational triangles is pushed through classification, both solvers, the
 * construction, the brute-force oracles and a set of plane symmetries. Each
 * property counts the triangles it was evaluated on and echoes every
 * counterexample verbatim.
 *
 * Random stream: std::mt19937_64 seeded with the config seed. An integer in
 * [0, n) is the next 64-bit output modulo n. A random coordinate draws a
 * denominator 1 + u % denominator_limit, then a numerator uniformly from
 * the integers that keep the value inside the box. Collinear draws are
 * discarded and redrawn.
 */

#include "taxicab/circumcircle.hpp"
#include "taxicab/incircle.hpp"
#include "taxicab/oracles.hpp"
#include "taxicab/symmetry.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace taxicab {

struct SweepConfig {
    int box_min = 0;
    int box_max = 4;
    int denominator_limit = 4;
    int trials = 0;
    std::uint64_t seed = 1;
    /// Checked after the box enumeration, before the random triangles.
    std::vector<Triangle> extra_triangles;
    /// Include wall-clock timings in the report (breaks byte-identity).
    bool include_timing = false;

    void validate() const {
        if (box_max <= box_min) throw std::invalid_argument("sweep box must contain more than one point per axis");
        if (trials < 0) throw std::invalid_argument("trial count must be non-negative");
        if (denominator_limit < 1) throw std::invalid_argument("denominator limit must be at least 1");
    }
};

struct PropertyRecord {
    std::string name;
    std::string statement;
    std::size_t checked = 0;
    std::vector<std::string> counterexamples;

    [[nodiscard]] bool passed() const { return counterexamples.empty(); }
};

/// Construction-versus-solver log entry for a triangle where the
/// construction's single-edge arc argument does not apply.
struct Discrepancy {
    std::string triangle;
    std::string construction_rho;
    std::string solver_rho;
    bool rho_agrees = false;
};

struct SuiteReport {
    SweepConfig config;
    std::size_t triangles = 0;
    std::size_t grid_triangles = 0;
    std::size_t inscribed_triangles = 0;
    std::vector<PropertyRecord> properties;
    std::vector<Discrepancy> discrepancies;
    /// Triangles whose largest disc is tight on all three sides but has
    /// fewer than three corners on them: the "touches every side" and
    /// "three corners touch" readings of incircle disagree.
    std::vector<std::string> touch_reading_disagreements;
    /// Multiplicity histogram of circumcircle solution sets.
    std::map<std::string, std::size_t> multiplicities;
    double elapsed_seconds = 0;

    [[nodiscard]] bool passed() const {
        return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed(); });
    }
    [[nodiscard]] const PropertyRecord& property(const std::string& name) const {
        for (const auto& p : properties)
            if (p.name == name) return p;
        throw std::out_of_range("no property " + name);
    }
};

using ClassifierFn = std::function<TriangleClassification(const Triangle&)>;

namespace detail {

inline std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

inline Rational random_coordinate(std::mt19937_64& rng, const SweepConfig& cfg) {
    const auto den = static_cast<long>(1 + next_below(rng, static_cast<std::uint64_t>(cfg.denominator_limit)));
    const long span = static_cast<long>(cfg.box_max - cfg.box_min) * den;
    const auto num = static_cast<long>(cfg.box_min) * den + static_cast<long>(next_below(rng, static_cast<std::uint64_t>(span + 1)));
    return Rational(num, den);
}

}  // namespace detail

/// Non-degenerate integer triangles in the box, each vertex set once.
inline std::vector<Triangle> enumerate_box_triangles(int lo, int hi) {
    std::vector<Point> pts;
    for (int x = lo; x <= hi; ++x)
        for (int y = lo; y <= hi; ++y) pts.push_back({x, y});
    std::vector<Triangle> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (orientation(pts[i], pts[j], pts[k]) != 0) out.emplace_back(pts[i], pts[j], pts[k]);
    return out;
}

inline std::vector<Triangle> random_triangles(const SweepConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<Triangle> out;
    while (static_cast<int>(out.size()) < cfg.trials) {
        std::array<Point, 3> v;
        for (auto& p : v) {
            p.x = detail::random_coordinate(rng, cfg);
            p.y = detail::random_coordinate(rng, cfg);
        }
        if (orientation(v[0], v[1], v[2]) != 0) out.emplace_back(v);
    }
    return out;
}

/// Maps under which every result is checked for equivariance.
inline std::vector<PlaneMap> symmetry_maps() {
    std::vector<PlaneMap> maps(4);
    maps[0].shift = {Rational(7, 2), Rational(-5, 3)};
    maps[1].swap_axes = true;
    maps[2].flip_y = true;
    maps[3].scale = Rational(3, 2);
    return maps;
}

namespace detail {

inline bool all_integer(const Triangle& t) {
    return std::all_of(t.vertices().begin(), t.vertices().end(),
                       [](const Point& p) { return p.x.is_integer() && p.y.is_integer(); });
}

/// Quarter-grid circles of the solution set whose centers lie in box.
inline std::vector<TaxicabCircle> grid_members(const CircumcircleSolutionSet& set, const QuarterBox& box) {
    std::vector<TaxicabCircle> out;
    const Rational quarter(1, 4);
    for (const auto& f : set.components) {
        if (f.kind == FamilyKind::point) {
            if (box.contains(f.base.center())) out.push_back(f.base);
            continue;
        }
        // Velocities have unit max-norm with entries in {-1, 0, 1}, so the
        // moving coordinate crosses a quarter-grid line every quarter of
        // parameter, starting from the first crossing at or after t = 0.
        const auto& v = *f.center_velocity;
        const bool along_x = !v.dx().is_zero();
        const Rational& moving = along_x ? f.base.center().x : f.base.center().y;
        const Rational& rate = along_x ? v.dx() : v.dy();
        const Rational start = mod(-moving * rate, quarter);
        Rational last;
        if (f.t_max) {
            last = *f.t_max;
        } else {
            const Rational lo(along_x ? box.x_lo : box.y_lo, 4), hi(along_x ? box.x_hi : box.y_hi, 4);
            last = max(abs(lo - moving), abs(hi - moving));
        }
        for (Rational t = start; t <= last; t += quarter) {
            const auto c = circle_at(f, t);
            if (box.contains(c.center())) out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

class Recorder {
public:
    std::size_t add(std::string name, std::string statement) {
        records_.push_back({std::move(name), std::move(statement), 0, {}});
        return records_.size() - 1;
    }
    void check(std::size_t id, bool ok, const Triangle& t, const std::string& detail = {}) {
        auto& r = records_[id];
        ++r.checked;
        if (!ok) r.counterexamples.push_back(t.str() + (detail.empty() ? "" : " : " + detail));
    }
    std::vector<PropertyRecord> take() { return std::move(records_); }

private:
    std::vector<PropertyRecord> records_;
};

inline std::string classes_str(const TriangleClassification& c) {
    std::string out;
    for (std::size_t i = 0; i < 3; ++i) {
        out += i ? "," : "";
        out += std::string(to_string(c.classes[i]));
    }
    return out;
}

inline std::string set_str(const CircumcircleSolutionSet& s) {
    std::string out = std::string(to_string(s.multiplicity)) + "[";
    for (const auto& f : s.components) {
        out += std::string(to_string(f.kind)) + " " + f.base.str();
        if (f.center_velocity) out += " v=" + f.center_velocity->vec().str() + " rr=" + f.radius_rate.str();
        if (f.t_max) out += " tmax=" + f.t_max->str();
        out += ";";
    }
    return out + "]";
}

inline bool obeys_touch_trichotomy(const Triangle& t, const std::array<TouchDescriptor, 3>& touches) {
    for (const auto& d : touches) {
        if (d.contact == ContactKind::none) continue;
        const auto [p, q] = t.side(d.side);
        const Rational run = abs(q.x - p.x), rise = abs(q.y - p.y);
        if (rise < run) {
            if (d.contact != ContactKind::corner || (d.corners[0] != CornerId::N && d.corners[0] != CornerId::S))
                return false;
        } else if (rise > run) {
            if (d.contact != ContactKind::corner || (d.corners[0] != CornerId::E && d.corners[0] != CornerId::W))
                return false;
        } else if (d.contact != ContactKind::edge) {
            return false;
        }
    }
    return true;
}

}  // namespace detail

/**
 * Runs every property over the configured triangles. The classifier is
 * injectable so the harness itself can be tested against a planted fault.
 */
inline SuiteReport run_suite(const SweepConfig& cfg, const ClassifierFn& classifier = classify_triangle) {
    cfg.validate();
    const auto started = std::chrono::steady_clock::now();

    detail::Recorder rec;
    const auto p_range = rec.add("angle_measure_range", "every angle measure lies in (0, 4)");
    const auto p_sum = rec.add("angle_sum", "the three angle measures sum to exactly 4");
    const auto p_quadrant = rec.add("angle_quadrant_inscribed",
                                    "rays in a common closed quadrant give an inscribed angle (negatively in I/III, "
                                    "positively in II/IV)");
    const auto p_thm1 = rec.add("strict_positive_neighbors_negative",
                                "a strictly positive vertex has negatively inscribed neighbors");
    const auto p_cor1 = rec.add("strict_negative_neighbors_positive",
                                "a strictly negative vertex has positively inscribed neighbors");
    const auto p_thm2 = rec.add("three_completely_iff_diagonal_pair",
                                "three completely inscribed angles iff sides of slope +1 and -1");
    const auto p_thm3 = rec.add("inscribed_has_completely", "an inscribed triangle has a completely inscribed angle");
    const auto p_thm4 = rec.add("inscribed_admits_alternating_labels",
                                "an inscribed triangle admits a non-constant P/N labelling consistent with its classes");
    const auto p_circ = rec.add("circumcircle_iff_inscribed", "a circumcircle exists iff the triangle is inscribed");
    const auto p_circ_ok = rec.add("circumcircle_members_pass_distance_check",
                                   "family endpoints and interior samples pass the vertex distance check");
    const auto p_circ_diag = rec.add("circumcircle_nonunique_needs_diagonal_side",
                                     "non-unique circumcircles only when a side has slope +1 or -1");
    const auto p_circ_shape = rec.add("circumcircle_family_shape",
                                      "segments keep the radius and move diagonally; rays grow the radius");
    const auto p_circ_oracle = rec.add("circumcircle_matches_grid_oracle",
                                       "solver and brute-force quarter-grid circle sets coincide (integer triangles)");
    const auto p_inc = rec.add("incircle_iff_inscribed", "an incircle exists iff the triangle is inscribed");
    const auto p_inc_unique = rec.add("incircle_unique", "the incircle of an inscribed triangle is unique");
    const auto p_inc_contain = rec.add("incircle_contained_and_tangent",
                                       "the disc is contained, tight sides are touched, incircles have >= 3 corners on sides");
    const auto p_inc_touch = rec.add("incircle_touch_trichotomy",
                                     "shallow sides touch N/S, steep sides touch E/W, diagonal sides touch an edge");
    const auto p_noinc = rec.add("noincircle_witness_misses_a_corner",
                                 "without an incircle the largest disc has at most two corners on the sides");
    const auto p_inc_oracle = rec.add("incircle_grid_bound",
                                      "half-unit grid search never beats the solver and matches it on grid optima");
    const auto p_pc_ident = rec.add("construction_identities",
                                    "r_alpha + r_beta = |AB|, r_alpha*alpha = r_beta*beta, rho = l/2");
    const auto p_pc_agree = rec.add("construction_matches_solver_when_applicable",
                                    "an applicable construction yields the solver's incircle with both arcs full edges");
    const auto p_sym_cls = rec.add("symmetry_classification", "classification is equivariant under plane symmetries");
    const auto p_sym_circ = rec.add("symmetry_circumcircle", "circumcircle sets are equivariant under plane symmetries");
    const auto p_sym_inc = rec.add("symmetry_incircle", "incircle results are equivariant under plane symmetries");

    SuiteReport report;
    report.config = cfg;
    const auto maps = symmetry_maps();
    const Rational oracle_resolution(1, 2);

    const auto check = [&](const Triangle& t) {
        ++report.triangles;
        const bool integer = detail::all_integer(t);
        const auto cls = classifier(t);
        if (cls.is_inscribed) ++report.inscribed_triangles;

        // Angles.
        const auto as = angles(t);
        Rational sum = 0;
        bool in_range = true;
        for (std::size_t i = 0; i < 3; ++i) {
            sum += cls.measures[i];
            in_range = in_range && cls.measures[i].sign() > 0 && cls.measures[i] < Rational(4);
            if (rays_share_quadrant(as[i].ray1(), as[i].ray2())) {
                const auto& r1 = as[i].ray1();
                const auto& r2 = as[i].ray2();
                const int sx = r1.dx().is_zero() ? r2.dx().sign() : r1.dx().sign();
                const int sy = r1.dy().is_zero() ? r2.dy().sign() : r1.dy().sign();
                const bool ok = sx * sy > 0 ? is_negatively_inscribed(cls.classes[i])
                                            : is_positively_inscribed(cls.classes[i]);
                rec.check(p_quadrant, ok, t, "vertex " + std::to_string(i) + " class " + std::string(to_string(cls.classes[i])));
            }
        }
        rec.check(p_range, in_range, t);
        rec.check(p_sum, sum == Rational(4), t, "sum " + sum.str());

        const std::string cls_detail = "classes " + detail::classes_str(cls);
        rec.check(p_thm1, strict_positive_neighbors_negative(cls), t, cls_detail);
        rec.check(p_cor1, strict_negative_neighbors_positive(cls), t, cls_detail);
        rec.check(p_thm2, three_completely_iff_diagonal_pair(t, cls), t, cls_detail);
        rec.check(p_thm3, inscribed_has_completely(cls), t, cls_detail);
        rec.check(p_thm4, admits_alternating_labels(cls), t, cls_detail);

        // Circumcircles.
        const auto set = circumcircles(t);
        ++report.multiplicities[std::string(to_string(set.multiplicity))];
        rec.check(p_circ, set.empty() != cls.is_inscribed, t, cls_detail + " circumcircles " + detail::set_str(set));
        bool members_ok = true, shape_ok = true;
        for (const auto& f : set.components) {
            members_ok = members_ok && verify_circumcircle(t, f.base) && verify_circumcircle(t, interior_sample(f));
            if (f.t_max) members_ok = members_ok && verify_circumcircle(t, family_end(f));
            if (f.kind == FamilyKind::segment)
                shape_ok = shape_ok && f.radius_rate.is_zero() && abs(f.center_velocity->dx()) == abs(f.center_velocity->dy());
            if (f.kind == FamilyKind::ray) shape_ok = shape_ok && f.radius_rate.sign() > 0;
        }
        rec.check(p_circ_ok, members_ok, t, detail::set_str(set));
        rec.check(p_circ_shape, shape_ok, t, detail::set_str(set));
        if (!set.empty() && set.multiplicity != Multiplicity::unique)
            rec.check(p_circ_diag, has_diagonal_side(t), t, detail::set_str(set));
        if (integer) {
            const auto oracle = oracle_circumcircle(t);
            const auto mine = detail::grid_members(set, circumcircle_oracle_box(t));
            rec.check(p_circ_oracle, oracle == mine, t,
                      "oracle " + std::to_string(oracle.size()) + " circles, solver " + std::to_string(mine.size()));
        }

        // Incircles.
        const auto best = max_inscribed_circle(t);
        const auto inc = incircle(t);
        const bool has_incircle = std::holds_alternative<Incircle>(inc);
        const int corner_count = distinct_corner_count(t, best.circle);
        rec.check(p_inc, has_incircle == cls.is_inscribed, t,
                  cls_detail + " disc " + best.circle.str() + " corners " + std::to_string(corner_count));
        if (cls.is_inscribed) rec.check(p_inc_unique, best.unique, t, "optimal candidates " + std::to_string(best.optimal_candidates.size()));
        {
            const auto sides = side_constraints(t);
            bool ok = disc_in_triangle(t, best.circle);
            int tight = 0;
            for (std::size_t i = 0; i < 3; ++i) {
                const bool is_tight = sides[i].tight(best.circle);
                tight += is_tight ? 1 : 0;
                ok = ok && (is_tight == (best.touches[i].contact != ContactKind::none));
            }
            if (has_incircle) ok = ok && std::get<Incircle>(inc).distinct_corner_count >= 3;
            rec.check(p_inc_contain, ok, t, "disc " + best.circle.str());
            if (tight == 3 && corner_count < 3) report.touch_reading_disagreements.push_back(t.str());
        }
        rec.check(p_inc_touch, detail::obeys_touch_trichotomy(t, best.touches), t, "disc " + best.circle.str());
        if (!has_incircle) {
            const auto& no = std::get<NoIncircle>(inc);
            rec.check(p_noinc, no.distinct_corner_count <= 2 && disc_in_triangle(t, no.witness), t,
                      "corners " + std::to_string(no.distinct_corner_count));
        }
        if (integer) {
            const Rational bound = oracle_incircle_bound(t, oracle_resolution);
            const auto& c = best.circle.center();
            const bool on_grid = (c.x / oracle_resolution).is_integer() && (c.y / oracle_resolution).is_integer();
            const bool ok = bound <= best.circle.radius() && (!on_grid || bound == best.circle.radius());
            rec.check(p_inc_oracle, ok, t, "grid bound " + bound.str() + " solver " + best.circle.radius().str());
        }

        // Construction.
        if (cls.is_inscribed) {
            const auto pc = paper_construction(t);
            const bool ident = pc.r_alpha + pc.r_beta == pc.side_ab && pc.r_alpha * pc.alpha == pc.r_beta * pc.beta &&
                               pc.rho * 2 == pc.arc_length_l;
            rec.check(p_pc_ident, ident, t);
            if (pc.applicable) {
                bool ok = pc.circle && pc.circle == best.circle && pc.containment_ok;
                if (ok) {
                    const auto cs = corners(*pc.circle);
                    const auto is_corner = [&](const Point& p) { return std::find(cs.begin(), cs.end(), p) != cs.end(); };
                    ok = is_corner(pc.p) && is_corner(*pc.arc_end_a) && is_corner(*pc.arc_end_b) &&
                         taxicab_distance(pc.p, *pc.arc_end_a) == pc.arc_length_l &&
                         taxicab_distance(pc.p, *pc.arc_end_b) == pc.arc_length_l;
                }
                rec.check(p_pc_agree, ok, t,
                          "construction " + (pc.circle ? pc.circle->str() : std::string("none")) + " solver " +
                              best.circle.str());
            } else {
                report.discrepancies.push_back(
                    {t.str(), pc.rho.str(), best.circle.radius().str(), pc.rho == best.circle.radius()});
            }
        }

        // Symmetries.
        for (const auto& m : maps) {
            const Triangle image = m.apply(t);
            const auto cls_image = classifier(image);
            rec.check(p_sym_cls, cls_image == map_result(m, cls), t, m.str());
            rec.check(p_sym_circ, circumcircles(image) == map_result(m, set), t, m.str());
            rec.check(p_sym_inc, canonical_touches(incircle(image)) == canonical_touches(map_result(m, inc)), t, m.str());
        }
    };

    for (const auto& t : enumerate_box_triangles(cfg.box_min, cfg.box_max)) {
        check(t);
        ++report.grid_triangles;
    }
    for (const auto& t : cfg.extra_triangles) check(t);
    for (const auto& t : random_triangles(cfg)) check(t);

    report.properties = rec.take();
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

}  // namespace taxicab
