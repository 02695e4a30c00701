#pragma once

/**
 * @file figures.hpp
 * @brief Built-in scenes, one per illustration of the taxicab angle,
 *        circumcircle and incircle results. Geometry comes from the kernel.
 */

#include "taxicab/circumcircle.hpp"
#include "taxicab/incircle.hpp"
#include "taxicab/oracles.hpp"
#include "taxicab/scene.hpp"

#include <optional>
#include <string>
#include <vector>

namespace taxicab::scene {

namespace detail {

inline std::string class_label(const std::string& name, InscribedClass c) {
    return name + ": " + std::string(to_string(c));
}

inline Panel angle_panel(const std::string& title, const std::string& label, const Point& q1, const Point& q2) {
    const Point o{0, 0};
    const InscribedClass c = classify(Angle::toward(o, q1, q2));
    return Panel{title + " (" + std::string(to_string(c)) + ")", {AngleItem{label, o, q1, q2, true}}};
}

/// Triangle with each angle drawn and labelled by its class.
inline Panel classified_triangle_panel(const std::string& title, const std::string& prefix, const Triangle& t) {
    static const char* names[] = {"A", "B", "C"};
    Panel p{title, {TriangleItem{prefix + "triangle", t}}};
    const auto cls = classify_triangle(t);
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& v = t.vertex(i);
        p.items.push_back(AngleItem{prefix + class_label(names[i], cls.classes[i]), v, t.vertex((i + 1) % 3),
                                    t.vertex((i + 2) % 3), true});
    }
    return p;
}

inline Panel family_panel(const std::string& title, const std::string& prefix, const Triangle& t) {
    const auto set = circumcircles(t);
    Panel p{title + " [" + std::string(to_string(set.multiplicity)) + "]", {TriangleItem{prefix + "triangle", t}}};
    for (std::size_t i = 0; i < set.components.size(); ++i)
        p.items.push_back(FamilyItem{prefix + "family " + std::to_string(i), set.components[i], 3});
    return p;
}

inline Scene fig_uninscribed_angle() {
    return {"A taxicab angle that is not inscribed",
            {angle_panel("both diagonals cross the angle", "angle", Point{3, -1}, Point{-3, -1})}};
}

inline Scene fig_inscribed_angles() {
    return {"Inscribed taxicab angles",
            {angle_panel("a)", "a", Point{2, -4}, Point{4, 0}), angle_panel("b)", "b", Point{4, 0}, Point{4, 2}),
             angle_panel("c)", "c", Point{4, 0}, Point{0, 4})}};
}

inline Scene fig_inscribed_angle_failure() {
    const TaxicabCircle c{Point{0, 0}, Rational(2)};
    // tag keeps labels unique across the panels: "" on the left, "'" on the right.
    const auto panel = [&](const std::string& tag, const Point& s, const Point& e, const Point& v) {
        const auto demo = inscribed_angle_demo(c, s, e, v);
        return Panel{"alpha = " + demo.alpha.str() + ", theta = " + demo.theta.str(),
                     {CircleItem{"circle" + tag, c, false}, ArcItem{"arc" + tag, c, s, e},
                      SegmentItem{"center-start" + tag, c.center(), s, true},
                      SegmentItem{"center-end" + tag, c.center(), e, true},
                      AngleItem{"alpha" + tag, v, s, e, false}, PointItem{"O" + tag, c.center()}}};
    };
    Scene s{"Failure of the Euclidean inscribed angle theorem", {}};
    s.panels.push_back(panel("", Point{2, 0}, Point{0, 2}, Point{-2, 0}));
    const auto w = find_inscribed_angle_witness(c, Rational(5, 2), Rational(1), Rational(1, 2));
    if (!w) throw std::logic_error("no boundary witness for theta = 5/2, alpha = 1");
    s.panels.push_back(panel("'", w->arc_start, w->arc_end, w->vertex));
    return s;
}

inline Scene fig_positive_neighbor() {
    return {"Neighbours of a strictly positively inscribed angle are negatively inscribed",
            {classified_triangle_panel("", "", Triangle(Point{5, 1}, Point{4, -3}, Point{0, 0}))}};
}

inline Scene fig_three_completely() {
    return {"A triangle with three completely inscribed angles",
            {classified_triangle_panel("sides of slope 1 and -1", "", Triangle(Point{0, 0}, Point{2, 2}, Point{4, 0}))}};
}

inline Scene fig_one_completely() {
    return {"An inscribed triangle has a completely inscribed angle",
            {classified_triangle_panel("", "", Triangle(Point{0, 0}, Point{2, 2}, Point{2, 0}))}};
}

inline Scene fig_circumcircle() {
    const Triangle t(Point{5, 1}, Point{4, -3}, Point{0, 0});
    const auto set = circumcircles(t);
    Panel p{"unique circumcircle", {TriangleItem{"triangle", t}}};
    for (std::size_t i = 0; i < set.components.size(); ++i)
        p.items.push_back(CircleItem{"circumcircle " + std::to_string(i), set.components[i].base, false});
    static const char* names[] = {"A", "B", "C"};
    for (std::size_t i = 0; i < 3; ++i) p.items.push_back(PointItem{names[i], t.vertex(i)});
    return {"Taxicab circumcircle of an inscribed triangle", {p}};
}

inline Scene fig_circumcircle_families() {
    return {"Triangles with infinitely many circumcircles",
            {family_panel("diagonal shift", "1: ", Triangle(Point{0, 0}, Point{2, 2}, Point{3, -2})),
             family_panel("growing circles", "2: ", Triangle(Point{0, 0}, Point{2, 2}, Point{2, -2})),
             family_panel("both", "3: ", Triangle(Point{0, 0}, Point{2, 2}, Point{3, 1}))}};
}

inline Scene fig_incircle() {
    const Triangle t(Point{5, 1}, Point{4, -3}, Point{0, 0});
    const auto in = std::get<Incircle>(incircle(t));
    const auto pc = paper_construction(t);
    static const char* names[] = {"A", "B", "C"};
    Panel p{"incircle " + in.circle.str(), {TriangleItem{"triangle", t}, CircleItem{"incircle", in.circle, false}}};
    p.items.push_back(CircleItem{"r_alpha", TaxicabCircle(t.vertex(pc.a_vertex), pc.r_alpha), true});
    p.items.push_back(CircleItem{"r_beta", TaxicabCircle(t.vertex(pc.b_vertex), pc.r_beta), true});
    if (pc.arc_end_a)
        p.items.push_back(ArcItem{"arc A", TaxicabCircle(t.vertex(pc.a_vertex), pc.r_alpha), pc.p, *pc.arc_end_a});
    if (pc.arc_end_b)
        p.items.push_back(ArcItem{"arc B", TaxicabCircle(t.vertex(pc.b_vertex), pc.r_beta), *pc.arc_end_b, pc.p});
    const char* roles[3] = {"", "", ""};
    roles[pc.a_vertex] = "A";
    roles[pc.b_vertex] = "B";
    roles[pc.gamma_vertex] = "C";
    for (std::size_t i = 0; i < 3; ++i) p.items.push_back(PointItem{roles[i][0] ? roles[i] : names[i], t.vertex(i)});
    p.items.push_back(PointItem{"P", pc.p});
    return {"Taxicab incircle of an inscribed triangle", {p}};
}

inline Scene fig_not_inscribed() {
    const Triangle t(Point{0, 0}, Point{6, 0}, Point{3, 2});
    const auto r = incircle(t);
    const TaxicabCircle disc = result_circle(r);
    return {"A taxicab circle inside a triangle that is not inscribed",
            {Panel{"largest disc " + disc.str(), {TriangleItem{"triangle", t}, CircleItem{"disc", disc, false}}}}};
}

}  // namespace detail

inline const std::vector<std::string>& builtin_figure_names() {
    static const std::vector<std::string> names{
        "uninscribed-angle", "inscribed-angles",     "inscribed-angle-failure", "positive-neighbor",
        "three-completely",  "one-completely",       "circumcircle",            "circumcircle-families",
        "incircle",          "not-inscribed",
    };
    return names;
}

inline std::optional<Scene> builtin_figure(const std::string& name) {
    if (name == "uninscribed-angle") return detail::fig_uninscribed_angle();
    if (name == "inscribed-angles") return detail::fig_inscribed_angles();
    if (name == "inscribed-angle-failure") return detail::fig_inscribed_angle_failure();
    if (name == "positive-neighbor") return detail::fig_positive_neighbor();
    if (name == "three-completely") return detail::fig_three_completely();
    if (name == "one-completely") return detail::fig_one_completely();
    if (name == "circumcircle") return detail::fig_circumcircle();
    if (name == "circumcircle-families") return detail::fig_circumcircle_families();
    if (name == "incircle") return detail::fig_incircle();
    if (name == "not-inscribed") return detail::fig_not_inscribed();
    return std::nullopt;
}

}  // namespace taxicab::scene
