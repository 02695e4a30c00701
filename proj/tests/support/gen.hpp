#pragma once

// Seeded generators for the property tests.

#include "taxicab/triangle.hpp"

#include <random>
#include <vector>

namespace gen {

using taxicab::Point;
using taxicab::Rational;
using taxicab::Triangle;

class Source {
public:
    explicit Source(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    /// p/q with |p/q| <= bound and 1 <= q <= max_den.
    Rational rational(long bound, long max_den) {
        const long q = integer(1, max_den);
        return Rational(integer(-bound * q, bound * q), q);
    }

    Point point(long bound = 6, long max_den = 5) { return {rational(bound, max_den), rational(bound, max_den)}; }

    Point nonzero(long bound = 6, long max_den = 5) {
        for (;;) {
            Point p = point(bound, max_den);
            if (!p.is_origin()) return p;
        }
    }

    Triangle triangle(long bound = 6, long max_den = 5) {
        for (;;) {
            const Point a = point(bound, max_den), b = point(bound, max_den), c = point(bound, max_den);
            if (taxicab::orientation(a, b, c) != 0) return Triangle(a, b, c);
        }
    }

    Triangle integer_triangle(long lo, long hi) {
        for (;;) {
            const Point a{integer(lo, hi), integer(lo, hi)}, b{integer(lo, hi), integer(lo, hi)},
                c{integer(lo, hi), integer(lo, hi)};
            if (taxicab::orientation(a, b, c) != 0) return Triangle(a, b, c);
        }
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace gen
