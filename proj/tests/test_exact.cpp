#include "taxicab/exact.hpp"

#include "gen.hpp"

#include <gtest/gtest.h>

using namespace taxicab;

TEST(Rational, LowestTermsAndPositiveDenominator) {
    const Rational r(6, -4);
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(Rational(10, 5).str(), "2");
    EXPECT_TRUE(Rational(10, 5).is_integer());
}

TEST(Rational, ZeroDenominatorThrows) {
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ParseForms) {
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
    EXPECT_EQ(Rational::parse("0.5"), Rational(1, 2));
    EXPECT_EQ(Rational::parse("-1.25"), Rational(-5, 4));
    EXPECT_EQ(Rational::parse(".75"), Rational(3, 4));
    EXPECT_EQ(Rational::parse("3e-2"), Rational(3, 100));
    EXPECT_EQ(Rational::parse("2.5E1"), Rational(25));
    EXPECT_EQ(Rational::parse(" 4/2 "), Rational(2));
    EXPECT_EQ(Rational::parse("0.1"), Rational(1, 10));
    // Leading zeros are decimal, not octal.
    EXPECT_EQ(Rational::parse("0.75"), Rational(3, 4));
    EXPECT_EQ(Rational::parse("010"), Rational(10));
    EXPECT_EQ(Rational::parse("07/08"), Rational(7, 8));
}

TEST(Rational, ParseRejectsMalformed) {
    for (const char* bad : {"", "abc", "1/", "/2", "1/0", "1.2.3", "--1", "1e", "0x10", "1/-2", "."})
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, HugeValuesStayExact) {
    Rational r = 1;
    for (int i = 0; i < 200; ++i) r *= 3;
    EXPECT_EQ((r + 1 - r), Rational(1));
    EXPECT_EQ(Rational::parse(r.str()), r);
}

TEST(Rational, DecimalRoundsHalfAwayFromZero) {
    EXPECT_EQ(Rational(1, 8).decimal(2), "0.13");
    EXPECT_EQ(Rational(-1, 8).decimal(2), "-0.13");
    EXPECT_EQ(Rational(2, 3).decimal(3), "0.667");
    EXPECT_EQ(Rational(5).decimal(0), "5");
    EXPECT_EQ(Rational(-1, 1000).decimal(2), "0.00");
}

TEST(Rational, FloorAndMod) {
    EXPECT_EQ(floor(Rational(-1, 2)), Rational(-1));
    EXPECT_EQ(floor(Rational(7, 2)), Rational(3));
    EXPECT_EQ(mod(Rational(17), Rational(8)), Rational(1));
    EXPECT_EQ(mod(Rational(-1, 2), Rational(8)), Rational(15, 2));
    EXPECT_THROW(mod(Rational(1), Rational(0)), std::domain_error);
}

TEST(Rational, TotalOrder) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_EQ(min(Rational(2), Rational(1, 2)), Rational(1, 2));
    EXPECT_EQ(max(Rational(2), Rational(1, 2)), Rational(2));
}

TEST(TaxicabNorm, Examples) {
    EXPECT_EQ(taxicab_norm(Direction(3, 4)), Rational(7));
    EXPECT_EQ(taxicab_norm(Direction(1, 0)), Rational(1));
    EXPECT_EQ(taxicab_norm(Direction(-5, -1)), Rational(6));
}

TEST(TaxicabDistance, Examples) {
    EXPECT_EQ(taxicab_distance({0, 0}, {3, 4}), Rational(7));
    EXPECT_EQ(taxicab_distance({5, 1}, {4, -3}), Rational(5));
    EXPECT_EQ(taxicab_distance({2, 2}, {2, 2}), Rational(0));
}

TEST(UnitPoint, Examples) {
    EXPECT_EQ(unit_point(Direction(3, 4)), Direction(Rational(3, 7), Rational(4, 7)));
    EXPECT_EQ(unit_point(Direction(1, 0)), Direction(1, 0));
    EXPECT_EQ(unit_point(Direction(-5, -1)), Direction(Rational(-5, 6), Rational(-1, 6)));
}

TEST(Direction, ZeroRejected) {
    EXPECT_THROW(Direction(0, 0), GeometryError);
    EXPECT_THROW(Direction::between({1, 2}, {1, 2}), GeometryError);
}

TEST(Cross, Examples) {
    EXPECT_EQ(cross_pos(Direction(1, 1)), Rational(0));
    EXPECT_EQ(cross_pos(Direction(1, 0)), Rational(-1));
    EXPECT_EQ(cross_pos(Direction(0, 1)), Rational(1));
    EXPECT_EQ(cross_neg(Direction(-5, -1)), Rational(-6));
}

TEST(Orientation, SignsAndSegments) {
    EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), 1);
    EXPECT_EQ(orientation({0, 0}, {0, 1}, {1, 0}), -1);
    EXPECT_EQ(orientation({0, 0}, {1, 1}, {2, 2}), 0);
    EXPECT_TRUE(on_segment({1, 1}, {0, 0}, {2, 2}));
    EXPECT_FALSE(on_segment({3, 3}, {0, 0}, {2, 2}));
}

TEST(ExactProperties, TriangleInequalityAndSymmetries) {
    gen::Source g(11);
    for (int i = 0; i < 500; ++i) {
        const Point p = g.point(), q = g.point(), r = g.point();
        EXPECT_LE(taxicab_distance(p, r), taxicab_distance(p, q) + taxicab_distance(q, r));
        EXPECT_EQ(taxicab_distance(p, q), taxicab_distance(q, p));
        const Point shift = g.point();
        const Rational k = abs(g.rational(3, 4)) + Rational(1, 7);
        const Rational d = taxicab_distance(p, q);
        EXPECT_EQ(taxicab_distance(p + shift, q + shift), d);
        EXPECT_EQ(taxicab_distance({p.y, p.x}, {q.y, q.x}), d);
        EXPECT_EQ(taxicab_distance({p.x, -p.y}, {q.x, -q.y}), d);
        EXPECT_EQ(taxicab_distance({-p.x, p.y}, {-q.x, q.y}), d);
        EXPECT_EQ(taxicab_distance(p * k, q * k), d * k);
    }
}

TEST(ExactProperties, UnitPointIsIdempotent) {
    gen::Source g(12);
    for (int i = 0; i < 300; ++i) {
        const Direction d(g.nonzero());
        const Direction u = unit_point(d);
        EXPECT_EQ(taxicab_norm(u), Rational(1));
        EXPECT_EQ(unit_point(u), u);
    }
}

TEST(ExactProperties, ParseRoundTrip) {
    gen::Source g(13);
    for (int i = 0; i < 300; ++i) {
        const Rational r = g.rational(1000, 97);
        EXPECT_EQ(Rational::parse(r.str()), r);
    }
}
