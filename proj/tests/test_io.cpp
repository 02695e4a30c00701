#include "taxicab/io.hpp"

#include "gen.hpp"

#include <gtest/gtest.h>

using namespace taxicab;

namespace {

const Triangle kUnique(Point{5, 1}, Point{4, -3}, Point{0, 0});

}  // namespace

TEST(Io, RationalForms) {
    const auto j = io::parse_document(R"([3, "-7/2", 0.1, -2.5e-1, "0.75", 18446744073709551615])");
    EXPECT_EQ(io::rational_from(j[0]), Rational(3));
    EXPECT_EQ(io::rational_from(j[1]), Rational(-7, 2));
    EXPECT_EQ(io::rational_from(j[2]), Rational(1, 10));
    EXPECT_EQ(io::rational_from(j[3]), Rational(-1, 4));
    EXPECT_EQ(io::rational_from(j[4]), Rational(3, 4));
    EXPECT_EQ(io::rational_from(j[5]).str(), "18446744073709551615");
    EXPECT_THROW(io::rational_from(io::Json("1/0")), io::InputError);
    EXPECT_THROW(io::rational_from(io::Json(true)), io::InputError);
}

TEST(Io, MalformedDocuments) {
    EXPECT_THROW(io::parse_document("{"), io::InputError);
    EXPECT_THROW(io::parse_document(""), io::InputError);
    EXPECT_THROW(io::triangle_from(io::parse_document(R"({"vertices": [[0,0],[1,0]]})")), io::InputError);
    EXPECT_THROW(io::triangle_from(io::parse_document(R"({"points": []})")), io::InputError);
    EXPECT_THROW(io::point_from(io::parse_document("[1,2,3]")), io::InputError);
    EXPECT_THROW(io::triangle_from(io::parse_document(R"({"vertices": [[0,0],[1,1],[2,2]]})")), DegenerateTriangle);
}

TEST(Io, TriangleAndCircleRoundTrip) {
    EXPECT_EQ(io::triangle_from(io::to_json(kUnique)).str(), kUnique.str());
    const TaxicabCircle c(Point{3, Rational(-1, 2)}, Rational(7, 2));
    EXPECT_EQ(io::circle_from(io::to_json(c)), c);
    EXPECT_EQ(io::to_json(c).dump(), R"({"center":["3","-1/2"],"radius":"7/2"})");
}

TEST(Io, ClassificationRoundTrip) {
    const auto c = classify_triangle(kUnique);
    const auto back = io::classification_from(io::to_json(c));
    EXPECT_EQ(back.classes, c.classes);
    EXPECT_EQ(back.measures, c.measures);
    EXPECT_EQ(back.is_inscribed, c.is_inscribed);
    EXPECT_EQ(back.completely_count, c.completely_count);
}

TEST(Io, SolutionSetRoundTrip) {
    for (const auto& t : {kUnique, Triangle(Point{0, 0}, Point{2, 2}, Point{3, -2}),
                          Triangle(Point{0, 0}, Point{2, 2}, Point{2, -2}), Triangle(Point{0, 0}, Point{2, 2}, Point{3, 1}),
                          Triangle(Point{0, 0}, Point{6, 0}, Point{3, 2})}) {
        const auto s = circumcircles(t);
        const auto j = io::to_json(s);
        EXPECT_EQ(io::solution_set_from(j), s) << t.str();
        EXPECT_EQ(io::to_json(io::solution_set_from(j)), j);
    }
}

TEST(Io, PointFamilyEncoding) {
    const auto j = io::to_json(circumcircles(kUnique).components[0]);
    EXPECT_TRUE(j["center_velocity"].is_null());
    EXPECT_EQ(j["t_max"], "0");
}

TEST(Io, IncircleAndConstructionRoundTrip) {
    for (const auto& t : {kUnique, Triangle(Point{0, 0}, Point{2, 2}, Point{2, -2}),
                          Triangle(Point{0, 0}, Point{6, 0}, Point{3, 2})}) {
        const auto r = incircle(t);
        EXPECT_EQ(io::incircle_result_from(io::to_json(r)), r) << t.str();
        if (classify_triangle(t).is_inscribed) {
            const auto pc = paper_construction(t);
            EXPECT_EQ(io::construction_from(io::to_json(pc)), pc) << t.str();
        }
    }
}

TEST(Io, AngleReport) {
    const auto j = io::angle_report(io::angle_from(io::parse_document(R"({"vertex":[4,-3],"ray1":[1,4],"ray2":[-4,3]})")));
    EXPECT_EQ(j["class"], "strictly_positive");
    EXPECT_EQ(j["measure"], "54/35");
}

TEST(Io, RandomRationalsRoundTrip) {
    gen::Source g(71);
    for (int i = 0; i < 200; ++i) {
        const Point p = g.point(1000, 999);
        EXPECT_EQ(io::point_from(io::parse_document(io::to_json(p).dump())), p);
    }
}
