#pragma once

/**
 * @file io.hpp
 * @brief JSON and plain-text documents for every kernel value and result.
 *
 * Rationals are written as "p" or "p/q" strings. On input a rational may be
 * a JSON integer, a "p/q" string, a decimal string, or a bare JSON number
 * with a fraction or exponent; the latter is read from its literal text, so
 * 0.1 is exactly 1/10 and never passes through a double.
 */

#include "taxicab/circumcircle.hpp"
#include "taxicab/incircle.hpp"
#include "taxicab/verify.hpp"

#include "json.hpp"

#include <sstream>
#include <string>

namespace taxicab::io {

using Json = nlohmann::ordered_json;

/// Malformed document: wrong shape, missing key, bad rational text.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// DOM builder that keeps floating-point literals as their source text.
class ExactSax : public nlohmann::detail::json_sax_dom_parser<Json> {
public:
    using Base = nlohmann::detail::json_sax_dom_parser<Json>;
    using Base::Base;

    bool number_float(Json::number_float_t /*unused*/, const Json::string_t& literal) {
        Json::string_t copy = literal;
        return Base::string(copy);
    }
};

}  // namespace detail

inline Json parse_document(const std::string& text) {
    Json out;
    detail::ExactSax sax(out, false);
    try {
        if (!Json::sax_parse(text, &sax)) throw InputError("malformed JSON document");
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON document: ") + e.what());
    }
    if (out.is_discarded()) throw InputError("malformed JSON document");
    return out;
}

// ---- rationals and points ----------------------------------------------

inline Json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from(const Json& j) {
    if (j.is_number_unsigned()) return Rational(mpq_class(mpz_class(std::to_string(j.get<std::uint64_t>()), 10)));
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    }
    if (j.is_number_float()) throw InputError("floating-point value without literal text");
    throw InputError("expected a rational, got " + j.dump());
}

inline Json to_json(const Point& p) { return Json::array({to_json(p.x), to_json(p.y)}); }

inline Point point_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InputError("expected a point [x, y], got " + j.dump());
    return {rational_from(j[0]), rational_from(j[1])};
}

inline const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

// ---- circles, angles, triangles ----------------------------------------

inline Json to_json(const TaxicabCircle& c) {
    Json j;
    j["center"] = to_json(c.center());
    j["radius"] = to_json(c.radius());
    return j;
}

inline TaxicabCircle circle_from(const Json& j) {
    return TaxicabCircle(point_from(member(j, "center")), rational_from(member(j, "radius")));
}

inline Json to_json(const Angle& a) {
    Json j;
    j["vertex"] = to_json(a.vertex());
    j["ray1"] = to_json(a.ray1().vec());
    j["ray2"] = to_json(a.ray2().vec());
    return j;
}

/// Rays are direction vectors.
inline Angle angle_from(const Json& j) {
    return Angle(point_from(member(j, "vertex")), Direction(point_from(member(j, "ray1"))),
                 Direction(point_from(member(j, "ray2"))));
}

inline Json to_json(const Triangle& t) {
    Json v = Json::array();
    for (const auto& p : t.vertices()) v.push_back(to_json(p));
    Json j;
    j["vertices"] = v;
    return j;
}

inline Triangle triangle_from(const Json& j) {
    const Json& v = member(j, "vertices");
    if (!v.is_array() || v.size() != 3) throw InputError("\"vertices\" must hold exactly three points");
    return Triangle(point_from(v[0]), point_from(v[1]), point_from(v[2]));
}

inline Json angle_report(const Angle& a) {
    Json j = to_json(a);
    j["class"] = std::string(to_string(classify(a)));
    j["measure"] = to_json(measure(a));
    return j;
}

inline Json to_json(const TriangleClassification& c) {
    Json j;
    j["classes"] = Json::array();
    j["measures"] = Json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        j["classes"].push_back(std::string(to_string(c.classes[i])));
        j["measures"].push_back(to_json(c.measures[i]));
    }
    j["is_inscribed"] = c.is_inscribed;
    j["completely_count"] = c.completely_count;
    return j;
}

inline TriangleClassification classification_from(const Json& j) {
    TriangleClassification c;
    const Json& cls = member(j, "classes");
    const Json& ms = member(j, "measures");
    if (!cls.is_array() || cls.size() != 3 || !ms.is_array() || ms.size() != 3)
        throw InputError("classification needs three classes and three measures");
    for (std::size_t i = 0; i < 3; ++i) {
        const auto k = parse_inscribed_class(cls[i].get<std::string>());
        if (!k) throw InputError("unknown angle class " + cls[i].dump());
        c.classes[i] = *k;
        c.measures[i] = rational_from(ms[i]);
    }
    c.is_inscribed = member(j, "is_inscribed").get<bool>();
    c.completely_count = member(j, "completely_count").get<int>();
    return c;
}

// ---- circumcircles -----------------------------------------------------

inline Json to_json(const CircleFamily& f) {
    Json j;
    j["kind"] = std::string(to_string(f.kind));
    j["base"] = to_json(f.base);
    j["center_velocity"] = f.center_velocity ? to_json(f.center_velocity->vec()) : Json(nullptr);
    j["radius_rate"] = to_json(f.radius_rate);
    j["t_max"] = f.t_max ? to_json(*f.t_max) : Json(nullptr);
    return j;
}

inline CircleFamily family_from(const Json& j) {
    const std::string kind = member(j, "kind").get<std::string>();
    const TaxicabCircle base = circle_from(member(j, "base"));
    if (kind == "point") return make_point_family(base);
    const Point v = point_from(member(j, "center_velocity"));
    const Vec3 step{v.x, v.y, rational_from(member(j, "radius_rate"))};
    if (kind == "ray") return make_ray_family(base, step);
    if (kind == "segment") {
        const Rational t_max = rational_from(member(j, "t_max"));
        const Vec3 end = taxicab::detail::to_vec(base) + step * t_max;
        return make_segment_family(base, taxicab::detail::to_circle(end));
    }
    throw InputError("unknown family kind \"" + kind + "\"");
}

inline Json to_json(const CircumcircleSolutionSet& s) {
    Json j;
    j["multiplicity"] = std::string(to_string(s.multiplicity));
    j["components"] = Json::array();
    for (const auto& f : s.components) j["components"].push_back(to_json(f));
    return j;
}

inline CircumcircleSolutionSet solution_set_from(const Json& j) {
    std::vector<CircleFamily> parts;
    for (const auto& c : member(j, "components")) parts.push_back(family_from(c));
    return normalize_solution_set(std::move(parts));
}

// ---- incircles ---------------------------------------------------------

inline Json to_json(const TouchDescriptor& d) {
    Json j;
    j["side"] = d.side;
    j["contact"] = d.contact == ContactKind::none ? "none" : d.contact == ContactKind::corner ? "corner" : "edge";
    j["corners"] = Json::array();
    for (auto c : d.corners) j["corners"].push_back(std::string(to_string(c)));
    return j;
}

inline TouchDescriptor touch_from(const Json& j) {
    TouchDescriptor d;
    d.side = member(j, "side").get<std::size_t>();
    const std::string contact = member(j, "contact").get<std::string>();
    if (contact == "none") d.contact = ContactKind::none;
    else if (contact == "corner") d.contact = ContactKind::corner;
    else if (contact == "edge") d.contact = ContactKind::edge;
    else throw InputError("unknown contact \"" + contact + "\"");
    for (const auto& c : member(j, "corners")) {
        const std::string name = c.get<std::string>();
        bool found = false;
        for (auto id : kCorners)
            if (to_string(id) == name) {
                d.corners.push_back(id);
                found = true;
            }
        if (!found) throw InputError("unknown corner \"" + name + "\"");
    }
    return d;
}

inline Json to_json(const IncircleResult& r) {
    Json j;
    if (const auto* in = std::get_if<Incircle>(&r)) {
        j["kind"] = "incircle";
        j["circle"] = to_json(in->circle);
        j["touches"] = Json::array();
        for (const auto& t : in->touches) j["touches"].push_back(to_json(t));
        j["distinct_corner_count"] = in->distinct_corner_count;
        j["unique"] = in->unique;
    } else {
        const auto& no = std::get<NoIncircle>(r);
        j["kind"] = "no_incircle";
        j["witness"] = to_json(no.witness);
        j["distinct_corner_count"] = no.distinct_corner_count;
    }
    return j;
}

inline IncircleResult incircle_result_from(const Json& j) {
    const std::string kind = member(j, "kind").get<std::string>();
    if (kind == "no_incircle")
        return NoIncircle{circle_from(member(j, "witness")), member(j, "distinct_corner_count").get<int>()};
    if (kind != "incircle") throw InputError("unknown incircle kind \"" + kind + "\"");
    Incircle in{circle_from(member(j, "circle")), {}, member(j, "distinct_corner_count").get<int>(),
                member(j, "unique").get<bool>()};
    const Json& touches = member(j, "touches");
    if (!touches.is_array() || touches.size() != 3) throw InputError("incircle needs three touch records");
    for (std::size_t i = 0; i < 3; ++i) in.touches[i] = touch_from(touches[i]);
    return in;
}

inline Json to_json(const PaperConstruction& pc) {
    const auto opt_point = [](const std::optional<Point>& p) { return p ? to_json(*p) : Json(nullptr); };
    Json j;
    j["gamma_vertex"] = pc.gamma_vertex;
    j["a_vertex"] = pc.a_vertex;
    j["b_vertex"] = pc.b_vertex;
    j["swapped_axes"] = pc.swapped_axes;
    j["alpha"] = to_json(pc.alpha);
    j["beta"] = to_json(pc.beta);
    j["side_ab"] = to_json(pc.side_ab);
    j["r_alpha"] = to_json(pc.r_alpha);
    j["r_beta"] = to_json(pc.r_beta);
    j["p"] = to_json(pc.p);
    j["arc_length_l"] = to_json(pc.arc_length_l);
    j["rho"] = to_json(pc.rho);
    j["applicable"] = pc.applicable;
    j["arc_end_a"] = opt_point(pc.arc_end_a);
    j["arc_end_b"] = opt_point(pc.arc_end_b);
    j["circle"] = pc.circle ? to_json(*pc.circle) : Json(nullptr);
    j["containment_ok"] = pc.containment_ok;
    return j;
}

inline PaperConstruction construction_from(const Json& j) {
    const auto opt_point = [](const Json& v) { return v.is_null() ? std::optional<Point>() : point_from(v); };
    PaperConstruction pc;
    pc.gamma_vertex = member(j, "gamma_vertex").get<std::size_t>();
    pc.a_vertex = member(j, "a_vertex").get<std::size_t>();
    pc.b_vertex = member(j, "b_vertex").get<std::size_t>();
    pc.swapped_axes = member(j, "swapped_axes").get<bool>();
    pc.alpha = rational_from(member(j, "alpha"));
    pc.beta = rational_from(member(j, "beta"));
    pc.side_ab = rational_from(member(j, "side_ab"));
    pc.r_alpha = rational_from(member(j, "r_alpha"));
    pc.r_beta = rational_from(member(j, "r_beta"));
    pc.p = point_from(member(j, "p"));
    pc.arc_length_l = rational_from(member(j, "arc_length_l"));
    pc.rho = rational_from(member(j, "rho"));
    pc.applicable = member(j, "applicable").get<bool>();
    pc.arc_end_a = opt_point(member(j, "arc_end_a"));
    pc.arc_end_b = opt_point(member(j, "arc_end_b"));
    if (const Json& c = member(j, "circle"); !c.is_null()) pc.circle = circle_from(c);
    pc.containment_ok = member(j, "containment_ok").get<bool>();
    return pc;
}

// ---- suite reports -----------------------------------------------------

inline Json to_json(const SuiteReport& r) {
    Json cfg;
    cfg["box"] = Json::array({r.config.box_min, r.config.box_max});
    cfg["denominator_limit"] = r.config.denominator_limit;
    cfg["trials"] = r.config.trials;
    cfg["seed"] = r.config.seed;
    cfg["extra_triangles"] = Json::array();
    for (const auto& t : r.config.extra_triangles) cfg["extra_triangles"].push_back(to_json(t)["vertices"]);

    Json j;
    j["config"] = cfg;
    j["passed"] = r.passed();
    j["triangles"] = r.triangles;
    j["grid_triangles"] = r.grid_triangles;
    j["inscribed_triangles"] = r.inscribed_triangles;
    j["properties"] = Json::array();
    for (const auto& p : r.properties) {
        Json pj;
        pj["name"] = p.name;
        pj["statement"] = p.statement;
        pj["checked"] = p.checked;
        pj["violations"] = p.counterexamples.size();
        pj["counterexamples"] = p.counterexamples;
        j["properties"].push_back(pj);
    }
    j["multiplicities"] = Json::object();
    for (const auto& [k, v] : r.multiplicities) j["multiplicities"][k] = v;
    j["discrepancies"] = Json::array();
    for (const auto& d : r.discrepancies) {
        Json dj;
        dj["triangle"] = d.triangle;
        dj["construction_rho"] = d.construction_rho;
        dj["solver_rho"] = d.solver_rho;
        dj["rho_agrees"] = d.rho_agrees;
        j["discrepancies"].push_back(dj);
    }
    j["touch_reading_disagreements"] = r.touch_reading_disagreements;
    if (r.config.include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- text forms --------------------------------------------------------

inline std::string text(const TriangleClassification& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < 3; ++i)
        os << "vertex " << i << ": " << to_string(c.classes[i]) << ", measure " << c.measures[i] << "\n";
    os << "inscribed: " << (c.is_inscribed ? "yes" : "no") << "\n";
    os << "completely inscribed angles: " << c.completely_count << "\n";
    return os.str();
}

inline std::string text(const CircleFamily& f) {
    std::ostringstream os;
    os << to_string(f.kind) << " " << f.base.str();
    if (f.center_velocity) os << " velocity " << f.center_velocity->vec().str() << " radius rate " << f.radius_rate;
    if (f.kind == FamilyKind::segment) os << " t in [0, " << *f.t_max << "] to " << family_end(f).str();
    if (f.kind == FamilyKind::ray) os << " t >= 0";
    return os.str();
}

inline std::string text(const CircumcircleSolutionSet& s) {
    std::ostringstream os;
    os << "multiplicity: " << to_string(s.multiplicity) << "\n";
    for (const auto& f : s.components) os << "  " << text(f) << "\n";
    return os.str();
}

inline std::string text(const IncircleResult& r) {
    std::ostringstream os;
    const auto touches = [&](const std::array<TouchDescriptor, 3>& ts) {
        for (const auto& t : ts) {
            os << "  side " << t.side << ": " << to_json(t)["contact"].get<std::string>();
            for (auto c : t.corners) os << " " << to_string(c);
            os << "\n";
        }
    };
    if (const auto* in = std::get_if<Incircle>(&r)) {
        os << "incircle: " << in->circle.str() << (in->unique ? " (unique)" : " (not unique)") << "\n";
        touches(in->touches);
        os << "corners on sides: " << in->distinct_corner_count << "\n";
    } else {
        const auto& no = std::get<NoIncircle>(r);
        os << "no incircle; largest disc " << no.witness.str() << " has " << no.distinct_corner_count
           << " corner(s) on the sides\n";
    }
    return os.str();
}

inline std::string text(const PaperConstruction& pc) {
    std::ostringstream os;
    os << "construction: gamma=" << pc.gamma_vertex << " A=" << pc.a_vertex << " B=" << pc.b_vertex
       << (pc.swapped_axes ? " (axes swapped)" : "") << "\n";
    os << "  alpha=" << pc.alpha << " beta=" << pc.beta << " AB=" << pc.side_ab << "\n";
    os << "  r_alpha=" << pc.r_alpha << " r_beta=" << pc.r_beta << " P=" << pc.p.str() << "\n";
    os << "  l=" << pc.arc_length_l << " rho=" << pc.rho << " applicable=" << (pc.applicable ? "yes" : "no") << "\n";
    if (pc.circle)
        os << "  circle " << pc.circle->str() << " containment " << (pc.containment_ok ? "ok" : "fails") << "\n";
    return os.str();
}

inline std::string text(const Angle& a) {
    std::ostringstream os;
    os << "class: " << to_string(classify(a)) << "\nmeasure: " << measure(a) << "\n";
    return os.str();
}

inline std::string text(const SuiteReport& r) {
    std::ostringstream os;
    os << "box [" << r.config.box_min << "," << r.config.box_max << "]^2, trials " << r.config.trials << ", seed "
       << r.config.seed << ", denominator limit " << r.config.denominator_limit << "\n";
    os << "triangles " << r.triangles << " (grid " << r.grid_triangles << "), inscribed " << r.inscribed_triangles
       << "\n\n";
    for (const auto& p : r.properties) {
        os << (p.passed() ? "ok   " : "FAIL ") << p.name << ": " << p.checked << " checked, "
           << p.counterexamples.size() << " violations\n";
        for (const auto& c : p.counterexamples) os << "       " << c << "\n";
    }
    os << "\nmultiplicities:";
    for (const auto& [k, v] : r.multiplicities) os << " " << k << "=" << v;
    os << "\nconstruction discrepancies (not applicable): " << r.discrepancies.size() << "\n";
    for (const auto& d : r.discrepancies)
        os << "  " << d.triangle << " construction rho " << d.construction_rho << " solver rho " << d.solver_rho
           << (d.rho_agrees ? " (agree)" : "") << "\n";
    os << "touch-reading disagreements: " << r.touch_reading_disagreements.size() << "\n";
    for (const auto& t : r.touch_reading_disagreements) os << "  " << t << "\n";
    if (r.config.include_timing) os << "elapsed " << r.elapsed_seconds << " s\n";
    os << (r.passed() ? "PASSED" : "FAILED") << "\n";
    return os.str();
}

}  // namespace taxicab::io
