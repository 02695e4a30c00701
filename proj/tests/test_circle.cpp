#include "taxicab/circle.hpp"

#include "gen.hpp"
#include "reference.hpp"

#include <gtest/gtest.h>

using namespace taxicab;

namespace {

const TaxicabCircle c2{Point{0, 0}, Rational(2)};

}  // namespace

TEST(Circle, RadiusMustBePositive) {
    EXPECT_THROW(TaxicabCircle(Point{0, 0}, Rational(0)), GeometryError);
    EXPECT_THROW(TaxicabCircle(Point{0, 0}, Rational(-1)), GeometryError);
    EXPECT_EQ(c2.perimeter(), Rational(16));
}

TEST(Circle, Corners) {
    const auto k = corners(c2);
    EXPECT_EQ(k[0], (Point{2, 0}));
    EXPECT_EQ(k[1], (Point{0, 2}));
    EXPECT_EQ(k[2], (Point{-2, 0}));
    EXPECT_EQ(k[3], (Point{0, -2}));

    const TaxicabCircle c{Point{3, Rational(-1, 2)}, Rational(7, 2)};
    EXPECT_EQ(corner(c, CornerId::E), (Point{Rational(13, 2), Rational(-1, 2)}));
    EXPECT_EQ(corner(c, CornerId::N), (Point{3, 3}));
    EXPECT_EQ(corner(c, CornerId::W), (Point{Rational(-1, 2), Rational(-1, 2)}));
    EXPECT_EQ(corner(c, CornerId::S), (Point{3, -4}));

    const TaxicabCircle d{Point{Rational(8, 3), 0}, Rational(4, 3)};
    EXPECT_EQ(corner(d, CornerId::E), (Point{4, 0}));
    EXPECT_EQ(corner(d, CornerId::N), (Point{Rational(8, 3), Rational(4, 3)}));
    EXPECT_EQ(corner(d, CornerId::W), (Point{Rational(4, 3), 0}));
    EXPECT_EQ(corner(d, CornerId::S), (Point{Rational(8, 3), Rational(-4, 3)}));
    for (const auto& p : corners(c)) EXPECT_EQ(taxicab_distance(p, c.center()), c.radius());
}

TEST(Circle, Locate) {
    EXPECT_EQ(locate(c2, {1, 1}), Location::boundary);
    EXPECT_EQ(locate(c2, {0, 0}), Location::inside);
    EXPECT_EQ(locate(c2, {2, 1}), Location::outside);
    EXPECT_EQ(locate(TaxicabCircle(Point{3, Rational(-1, 2)}, Rational(7, 2)), {0, 0}), Location::boundary);
}

TEST(Circle, PerimeterParamExamples) {
    EXPECT_EQ(perimeter_param(c2, {2, 0}), Rational(0));
    EXPECT_EQ(perimeter_param(c2, {0, 2}), Rational(4));
    EXPECT_EQ(perimeter_param(c2, {Rational(-1, 2), Rational(3, 2)}), Rational(5));
    EXPECT_EQ(perimeter_param(c2, {0, -2}), Rational(12));
    EXPECT_EQ(perimeter_param(c2, {1, -1}), Rational(14));
    // Same points through the polyline walk.
    EXPECT_EQ(*ref::walk_param({0, 0}, 2, {0, 2}), Rational(4));
    EXPECT_EQ(*ref::walk_param({0, 0}, 2, {Rational(-1, 2), Rational(3, 2)}), Rational(5));
}

TEST(Circle, PerimeterParamRejectsOffBoundary) {
    EXPECT_THROW(perimeter_param(c2, {0, 0}), GeometryError);
    EXPECT_THROW(arc_length_ccw(c2, {0, 0}, {2, 0}), GeometryError);
}

TEST(Circle, PointAtParam) {
    EXPECT_EQ(point_at_param(c2, 0), (Point{2, 0}));
    EXPECT_EQ(point_at_param(c2, 4), (Point{0, 2}));
    EXPECT_EQ(point_at_param(c2, 16), (Point{2, 0}));
    EXPECT_EQ(point_at_param(c2, -1), point_at_param(c2, 15));
}

TEST(Circle, ArcLength) {
    EXPECT_EQ(arc_length_ccw(c2, {2, 0}, {0, 2}), Rational(4));
    EXPECT_EQ(arc_length_ccw(c2, {0, 2}, {2, 0}), Rational(12));
    EXPECT_EQ(arc_length_ccw(c2, {1, 1}, {1, 1}), Rational(0));
}

TEST(CircleProperties, ParamMatchesPolylineWalk) {
    gen::Source g(21);
    for (int i = 0; i < 400; ++i) {
        const TaxicabCircle c(g.point(), abs(g.rational(5, 6)) + Rational(1, 3));
        const Rational t = mod(g.rational(40, 7), c.perimeter());
        const Point p = point_at_param(c, t);
        EXPECT_EQ(taxicab_distance(p, c.center()), c.radius());
        const auto walked = ref::walk_param(c.center(), c.radius(), p);
        ASSERT_TRUE(walked.has_value());
        EXPECT_EQ(perimeter_param(c, p), *walked);
        EXPECT_EQ(perimeter_param(c, p), t);
    }
}

TEST(CircleProperties, ArcLengthsComplement) {
    gen::Source g(22);
    for (int i = 0; i < 300; ++i) {
        const TaxicabCircle c(g.point(), abs(g.rational(5, 6)) + Rational(1, 3));
        const Point p = point_at_param(c, g.rational(40, 7));
        const Point q = point_at_param(c, g.rational(40, 7));
        const Rational sum = arc_length_ccw(c, p, q) + arc_length_ccw(c, q, p);
        EXPECT_TRUE(sum.is_zero() || sum == c.perimeter());
        EXPECT_EQ(point_at_param(c, perimeter_param(c, p)), p);
    }
}

TEST(Circle, HalfPlaneContainment) {
    // x <= 2 contains ((0,0),2) exactly; x + y <= 1 does not.
    EXPECT_TRUE(disc_in_halfplane(c2, 1, 0, 2));
    EXPECT_FALSE(disc_in_halfplane(c2, 1, 1, 1));
    EXPECT_TRUE(disc_in_halfplane(c2, 1, 1, 2));
}
