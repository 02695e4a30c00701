#pragma once

/**
 * @file linear.hpp
 * @brief Exact solving of tiny linear systems in three unknowns.
 *
 * Both solvers reduce to at most three equalities in three unknowns plus a
 * handful of inequalities, so plain Gauss-Jordan elimination over the
 * rationals is all that is needed.
 */

#include "taxicab/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace taxicab {

using Vec3 = std::array<Rational, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(const Vec3& a, const Rational& k) { return {a[0] * k, a[1] * k, a[2] * k}; }
inline Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline bool is_zero(const Vec3& a) { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }
inline Rational linf_norm(const Vec3& a) { return max(abs(a[0]), max(abs(a[1]), abs(a[2]))); }

struct LinearRow {
    Vec3 coef;
    Rational rhs;
};

/// Solution set of a consistent system: particular + span(null_basis).
struct AffineSolution {
    Vec3 particular;
    std::vector<Vec3> null_basis;
};

/// Gauss-Jordan elimination; nullopt when the system is inconsistent.
inline std::optional<AffineSolution> solve_equalities(std::vector<LinearRow> rows) {
    std::array<int, 3> pivot_row{-1, -1, -1};
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 3 && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel].coef[col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        const Rational inv = Rational(1) / rows[rank].coef[col];
        rows[rank].coef = rows[rank].coef * inv;
        rows[rank].rhs *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i].coef[col].is_zero()) continue;
            const Rational f = rows[i].coef[col];
            rows[i].coef = rows[i].coef - rows[rank].coef * f;
            rows[i].rhs -= rows[rank].rhs * f;
        }
        pivot_row[col] = static_cast<int>(rank);
        ++rank;
    }
    for (std::size_t i = rank; i < rows.size(); ++i)
        if (!rows[i].rhs.is_zero()) return std::nullopt;

    AffineSolution out;
    for (std::size_t col = 0; col < 3; ++col)
        if (pivot_row[col] >= 0) out.particular[col] = rows[static_cast<std::size_t>(pivot_row[col])].rhs;
    for (std::size_t free = 0; free < 3; ++free) {
        if (pivot_row[free] >= 0) continue;
        Vec3 n{0, 0, 0};
        n[free] = 1;
        for (std::size_t col = 0; col < 3; ++col)
            if (pivot_row[col] >= 0) n[col] = -rows[static_cast<std::size_t>(pivot_row[col])].coef[free];
        out.null_basis.push_back(n);
    }
    return out;
}

/// Unique solution of a square system, or nullopt if singular/inconsistent.
inline std::optional<Vec3> solve_unique(std::vector<LinearRow> rows) {
    auto sol = solve_equalities(std::move(rows));
    if (!sol || !sol->null_basis.empty()) return std::nullopt;
    return sol->particular;
}

/// Closed parameter interval; a missing bound is infinite.
struct Interval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;

    [[nodiscard]] bool empty() const { return lo && hi && *hi < *lo; }
};

/// Restricts t so that coef.(p + t*n) <= rhs holds for every row. Returns
/// nullopt if some row is violated along the whole line.
inline std::optional<Interval> clip_line(const Vec3& p, const Vec3& n, const std::vector<LinearRow>& ineqs) {
    Interval iv;
    for (const auto& row : ineqs) {
        const Rational rate = dot(row.coef, n);
        const Rational slack = row.rhs - dot(row.coef, p);
        if (rate.is_zero()) {
            if (slack.sign() < 0) return std::nullopt;
            continue;
        }
        const Rational bound = slack / rate;
        if (rate.sign() > 0) {
            if (!iv.hi || bound < *iv.hi) iv.hi = bound;
        } else {
            if (!iv.lo || bound > *iv.lo) iv.lo = bound;
        }
    }
    if (iv.empty()) return std::nullopt;
    return iv;
}

}  // namespace taxicab
