#pragma once

/**
 * @file scene.hpp
 * @brief Labelled drawings of kernel objects and their SVG rendering.
 *
 * A scene is a title plus one or more panels laid out left to right. All
 * geometry stays exact until the final write, where each panel maps world
 * (x, y) to canvas (ox + (x - x0) * k, oy + (y1 - y) * k) and prints the
 * result with two decimals (half away from zero). The mapping of every
 * panel is echoed in a comment so the file documents itself.
 */

#include "taxicab/angle.hpp"
#include "taxicab/circumcircle.hpp"
#include "taxicab/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace taxicab::scene {

struct PointItem {
    std::string label;
    Point at;
};

struct SegmentItem {
    std::string label;
    Point from, to;
    bool dashed = false;
};

struct TriangleItem {
    std::string label;
    Triangle triangle;
};

struct CircleItem {
    std::string label;
    TaxicabCircle circle;
    bool dashed = false;
};

/// Counterclockwise arc of a circle, drawn heavy.
struct ArcItem {
    std::string label;
    TaxicabCircle circle;
    Point from, to;
};

/// Angle at vertex with rays toward two points; optional slope +1 / -1
/// guide lines through the vertex.
struct AngleItem {
    std::string label;
    Point vertex, toward1, toward2;
    bool guides = true;
};

/// A circumcircle family drawn as sample circles plus the center path.
struct FamilyItem {
    std::string label;
    CircleFamily family;
    int samples = 3;
};

struct TextItem {
    std::string label;
    Point at;
    std::string text;
};

using Item = std::variant<PointItem, SegmentItem, TriangleItem, CircleItem, ArcItem, AngleItem, FamilyItem, TextItem>;

struct Panel {
    std::string title;
    std::vector<Item> items;
};

struct Scene {
    std::string title;
    std::vector<Panel> panels;
};

inline const std::string& label_of(const Item& item) {
    return std::visit([](const auto& i) -> const std::string& { return i.label; }, item);
}

/// Throws io::InputError on an empty scene or a missing/duplicate label.
inline void validate(const Scene& s) {
    if (s.panels.empty()) throw io::InputError("scene has no panels");
    std::set<std::string> seen;
    for (const auto& p : s.panels)
        for (const auto& item : p.items) {
            const auto& l = label_of(item);
            if (l.empty()) throw io::InputError("scene item without a label");
            if (!seen.insert(l).second) throw io::InputError("duplicate scene label \"" + l + "\"");
        }
}

// ---- scene documents ---------------------------------------------------

namespace detail {

inline bool flag(const io::Json& j, const char* key, bool fallback) {
    return j.contains(key) ? j.at(key).get<bool>() : fallback;
}

inline Item item_from(const io::Json& j) {
    const std::string type = io::member(j, "type").get<std::string>();
    const std::string label = io::member(j, "label").get<std::string>();
    if (type == "point") return PointItem{label, io::point_from(io::member(j, "at"))};
    if (type == "segment")
        return SegmentItem{label, io::point_from(io::member(j, "from")), io::point_from(io::member(j, "to")),
                           flag(j, "dashed", false)};
    if (type == "triangle") return TriangleItem{label, io::triangle_from(j)};
    if (type == "circle") return CircleItem{label, io::circle_from(j), flag(j, "dashed", false)};
    if (type == "arc")
        return ArcItem{label, io::circle_from(io::member(j, "circle")), io::point_from(io::member(j, "from")),
                       io::point_from(io::member(j, "to"))};
    if (type == "angle")
        return AngleItem{label, io::point_from(io::member(j, "vertex")), io::point_from(io::member(j, "toward1")),
                         io::point_from(io::member(j, "toward2")), flag(j, "guides", true)};
    if (type == "family") {
        const int samples = j.contains("samples") ? j.at("samples").get<int>() : 3;
        if (samples < 1) throw io::InputError("family samples must be positive");
        return FamilyItem{label, io::family_from(io::member(j, "family")), samples};
    }
    if (type == "text") return TextItem{label, io::point_from(io::member(j, "at")), io::member(j, "text").get<std::string>()};
    throw io::InputError("unknown scene item type \"" + type + "\"");
}

inline Panel panel_from(const io::Json& j) {
    Panel p;
    if (j.contains("title")) p.title = j.at("title").get<std::string>();
    for (const auto& item : io::member(j, "items")) p.items.push_back(item_from(item));
    return p;
}

}  // namespace detail

/// {"title": .., "panels": [{"title": .., "items": [..]}]} or a single
/// panel given as {"title": .., "items": [..]}.
inline Scene scene_from(const io::Json& j) {
    Scene s;
    try {
        if (j.contains("title")) s.title = j.at("title").get<std::string>();
        if (j.contains("panels")) {
            for (const auto& p : j.at("panels")) s.panels.push_back(detail::panel_from(p));
        } else {
            s.panels.push_back(detail::panel_from(j));
        }
    } catch (const nlohmann::json::exception& e) {
        throw io::InputError(std::string("malformed scene: ") + e.what());
    } catch (const GeometryError& e) {
        throw io::InputError(std::string("invalid scene geometry: ") + e.what());
    }
    validate(s);
    return s;
}

// ---- rendering ---------------------------------------------------------

namespace detail {

struct Box {
    Rational x0, y0, x1, y1;
    bool empty = true;

    void add(const Point& p) {
        if (empty) {
            x0 = x1 = p.x;
            y0 = y1 = p.y;
            empty = false;
            return;
        }
        x0 = min(x0, p.x);
        x1 = max(x1, p.x);
        y0 = min(y0, p.y);
        y1 = max(y1, p.y);
    }
    void add(const TaxicabCircle& c) {
        for (const auto& p : corners(c)) add(p);
    }
};

inline std::vector<TaxicabCircle> family_samples(const FamilyItem& f) {
    std::vector<TaxicabCircle> out;
    if (f.family.kind == FamilyKind::point) return {f.family.base};
    for (int i = 0; i < f.samples; ++i) {
        Rational t = f.family.t_max ? (f.samples == 1 ? Rational(0) : *f.family.t_max * Rational(i, f.samples - 1))
                                    : Rational(i);
        out.push_back(circle_at(f.family, t));
    }
    return out;
}

inline Rational angle_arc_radius(const AngleItem& a) {
    return min(taxicab_distance(a.vertex, a.toward1), taxicab_distance(a.vertex, a.toward2)) / 4;
}

inline Box bounds(const Panel& p) {
    Box b;
    for (const auto& item : p.items) {
        std::visit(
            [&](const auto& i) {
                using T = std::decay_t<decltype(i)>;
                if constexpr (std::is_same_v<T, PointItem> || std::is_same_v<T, TextItem>) b.add(i.at);
                if constexpr (std::is_same_v<T, SegmentItem>) {
                    b.add(i.from);
                    b.add(i.to);
                }
                if constexpr (std::is_same_v<T, TriangleItem>)
                    for (const auto& v : i.triangle.vertices()) b.add(v);
                if constexpr (std::is_same_v<T, CircleItem> || std::is_same_v<T, ArcItem>) b.add(i.circle);
                if constexpr (std::is_same_v<T, AngleItem>) {
                    b.add(i.vertex);
                    b.add(i.toward1);
                    b.add(i.toward2);
                }
                if constexpr (std::is_same_v<T, FamilyItem>)
                    for (const auto& c : family_samples(i)) b.add(c);
            },
            item);
    }
    if (b.empty) b.add(Point{0, 0});
    // Point and angle labels are written to the right of their anchor.
    b.x0 -= 1;
    b.y0 -= 1;
    b.x1 += 3;
    b.y1 += 1;
    return b;
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string num(const Rational& r) { return r.decimal(2); }

class Canvas {
public:
    Canvas(const Box& world, Rational scale, Rational ox, Rational oy)
        : world_(world), k_(std::move(scale)), ox_(std::move(ox)), oy_(std::move(oy)) {}

    [[nodiscard]] Rational cx(const Point& p) const { return ox_ + (p.x - world_.x0) * k_; }
    [[nodiscard]] Rational cy(const Point& p) const { return oy_ + (world_.y1 - p.y) * k_; }
    [[nodiscard]] std::string xy(const Point& p) const { return num(cx(p)) + "," + num(cy(p)); }
    [[nodiscard]] Rational width() const { return (world_.x1 - world_.x0) * k_; }
    [[nodiscard]] Rational height() const { return (world_.y1 - world_.y0) * k_; }
    [[nodiscard]] const Box& world() const { return world_; }
    [[nodiscard]] const Rational& scale() const { return k_; }
    [[nodiscard]] const Rational& ox() const { return ox_; }
    [[nodiscard]] const Rational& oy() const { return oy_; }

    void polyline(std::ostream& os, const std::vector<Point>& pts, const std::string& attrs, bool closed) const {
        os << "  <" << (closed ? "polygon" : "polyline") << " points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << xy(pts[i]);
        os << "\" fill=\"none\" " << attrs << "/>\n";
    }
    void line(std::ostream& os, const Point& a, const Point& b, const std::string& attrs) const {
        os << "  <line x1=\"" << num(cx(a)) << "\" y1=\"" << num(cy(a)) << "\" x2=\"" << num(cx(b)) << "\" y2=\""
           << num(cy(b)) << "\" " << attrs << "/>\n";
    }
    void dot(std::ostream& os, const Point& p, const std::string& fill) const {
        os << "  <circle cx=\"" << num(cx(p)) << "\" cy=\"" << num(cy(p)) << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
    }
    void text(std::ostream& os, const Point& p, const std::string& s, int dx, int dy) const {
        os << "  <text x=\"" << num(cx(p) + dx) << "\" y=\"" << num(cy(p) + dy)
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << xml_escape(s) << "</text>\n";
    }

private:
    Box world_;
    Rational k_, ox_, oy_;
};

/// Corners of c strictly inside the ccw arc from p to q, bracketed by p and q.
inline std::vector<Point> arc_points(const TaxicabCircle& c, const Point& p, const Point& q) {
    const Rational t0 = perimeter_param(c, p);
    const Rational len = arc_length_ccw(c, p, q);
    std::vector<Point> pts{p};
    // Corners sit at parameters 2rk; keep those strictly inside the arc.
    std::vector<std::pair<Rational, Point>> inner;
    for (int k = 0; k < 4; ++k) {
        const Rational at = mod(c.radius() * 2 * k - t0, c.perimeter());
        if (at.sign() > 0 && at < len) inner.emplace_back(at, point_at_param(c, t0 + at));
    }
    std::sort(inner.begin(), inner.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [t, pt] : inner) pts.push_back(pt);
    pts.push_back(q);
    return pts;
}

/// Slope +1 or -1 line through p clipped to the window, if it meets it.
inline std::optional<std::pair<Point, Point>> clip_diagonal(const Point& p, int slope, const Box& w) {
    // Points p + t * (1, slope); clip t against the box.
    Rational lo = w.x0 - p.x, hi = w.x1 - p.x;
    Rational ylo = slope > 0 ? w.y0 - p.y : p.y - w.y1;
    Rational yhi = slope > 0 ? w.y1 - p.y : p.y - w.y0;
    lo = max(lo, ylo);
    hi = min(hi, yhi);
    if (hi <= lo) return std::nullopt;
    const auto at = [&](const Rational& t) { return Point{p.x + t, p.y + t * slope}; };
    return std::make_pair(at(lo), at(hi));
}

inline void draw(std::ostream& os, const Canvas& cv, const Item& item) {
    constexpr const char* ink = "stroke=\"#222222\" stroke-width=\"1.5\"";
    constexpr const char* circle_ink = "stroke=\"#1f5fa8\" stroke-width=\"1.5\"";
    constexpr const char* dash = " stroke-dasharray=\"5,4\"";
    std::visit(
        [&](const auto& i) {
            using T = std::decay_t<decltype(i)>;
            if constexpr (std::is_same_v<T, PointItem>) {
                cv.dot(os, i.at, "#222222");
                cv.text(os, i.at, i.label, 5, -5);
            } else if constexpr (std::is_same_v<T, SegmentItem>) {
                cv.line(os, i.from, i.to, std::string(ink) + (i.dashed ? dash : ""));
            } else if constexpr (std::is_same_v<T, TriangleItem>) {
                const auto& v = i.triangle.vertices();
                cv.polyline(os, {v.begin(), v.end()}, ink, true);
            } else if constexpr (std::is_same_v<T, CircleItem>) {
                const auto c = corners(i.circle);
                cv.polyline(os, {c.begin(), c.end()}, std::string(circle_ink) + (i.dashed ? dash : ""), true);
                cv.dot(os, i.circle.center(), "#1f5fa8");
            } else if constexpr (std::is_same_v<T, ArcItem>) {
                cv.polyline(os, arc_points(i.circle, i.from, i.to), "stroke=\"#c0392b\" stroke-width=\"3\"", false);
            } else if constexpr (std::is_same_v<T, AngleItem>) {
                if (i.guides) {
                    for (int slope : {1, -1})
                        if (const auto seg = clip_diagonal(i.vertex, slope, cv.world()))
                            cv.line(os, seg->first, seg->second,
                                    "stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"2,3\"");
                }
                cv.line(os, i.vertex, i.toward1, ink);
                cv.line(os, i.vertex, i.toward2, ink);
                const TaxicabCircle small(i.vertex, angle_arc_radius(i));
                const auto end = [&](const Point& q) {
                    const Direction u = unit_point(Direction::between(i.vertex, q));
                    return i.vertex + u.vec() * small.radius();
                };
                Point p1 = end(i.toward1), p2 = end(i.toward2);
                if (arc_length_ccw(small, p1, p2) > Rational(4) * small.radius()) std::swap(p1, p2);
                cv.polyline(os, arc_points(small, p1, p2), "stroke=\"#c0392b\" stroke-width=\"2\"", false);
                cv.text(os, i.vertex, i.label, -14, 16);
            } else if constexpr (std::is_same_v<T, FamilyItem>) {
                const auto samples = family_samples(i);
                for (std::size_t k = 0; k < samples.size(); ++k) {
                    const auto c = corners(samples[k]);
                    cv.polyline(os, {c.begin(), c.end()}, std::string(circle_ink) + (k ? dash : ""), true);
                }
                if (samples.size() > 1)
                    cv.line(os, samples.front().center(), samples.back().center(),
                            "stroke=\"#1f5fa8\" stroke-width=\"2\"");
                for (const auto& c : samples) cv.dot(os, c.center(), "#1f5fa8");
            } else if constexpr (std::is_same_v<T, TextItem>) {
                cv.text(os, i.at, i.text, 0, 0);
            }
        },
        item);
}

}  // namespace detail

/// Deterministic SVG document for a validated scene.
inline std::string render_svg(const Scene& s) {
    validate(s);
    const Rational gap = 24, title_h = 36, panel_title_h = 22, max_extent = 360;

    std::vector<detail::Canvas> canvases;
    Rational x = gap, height = 0;
    for (const auto& p : s.panels) {
        const detail::Box b = detail::bounds(p);
        const Rational extent = max(b.x1 - b.x0, b.y1 - b.y0);
        const Rational k = min(Rational(40), max_extent / extent);
        canvases.emplace_back(b, k, x, title_h + panel_title_h);
        x += canvases.back().width() + gap;
        height = max(height, canvases.back().height());
    }
    // Rough glyph width so the title is not clipped.
    const Rational width = max(x, gap * 2 + Rational(static_cast<long>(s.title.size())) * 9);
    const Rational total_h = title_h + panel_title_h + height + gap;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::num(width) << "\" height=\""
       << detail::num(total_h) << "\" viewBox=\"0 0 " << detail::num(width) << " " << detail::num(total_h) << "\">\n";
    os << "<!-- y-up world to y-down canvas; canvas = (ox + (x - x0) * k, oy + (y1 - y) * k); "
          "exact rationals rounded to 2 decimals (half away from zero) on output -->\n";
    for (std::size_t i = 0; i < canvases.size(); ++i) {
        const auto& c = canvases[i];
        os << "<!-- panel " << i << ": x0=" << c.world().x0 << " y1=" << c.world().y1 << " k=" << c.scale()
           << " ox=" << c.ox() << " oy=" << c.oy() << " -->\n";
    }
    os << "<rect x=\"0\" y=\"0\" width=\"" << detail::num(width) << "\" height=\"" << detail::num(total_h)
       << "\" fill=\"#ffffff\"/>\n";
    os << "<text x=\"" << detail::num(gap) << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">"
       << detail::xml_escape(s.title) << "</text>\n";
    for (std::size_t i = 0; i < s.panels.size(); ++i) {
        const auto& cv = canvases[i];
        os << "<g id=\"panel-" << i << "\">\n";
        os << "  <text x=\"" << detail::num(cv.ox()) << "\" y=\"" << detail::num(title_h + 14)
           << "\" font-family=\"sans-serif\" font-size=\"13\">" << detail::xml_escape(s.panels[i].title)
           << "</text>\n";
        os << "  <rect x=\"" << detail::num(cv.ox()) << "\" y=\"" << detail::num(cv.oy()) << "\" width=\""
           << detail::num(cv.width()) << "\" height=\"" << detail::num(cv.height())
           << "\" fill=\"none\" stroke=\"#dddddd\"/>\n";
        for (const auto& item : s.panels[i].items) detail::draw(os, cv, item);
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace taxicab::scene
