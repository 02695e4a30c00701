#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision fractions backed by GMP.
 *
 * Every scalar in the geometry core is a Rational: coordinates, radii,
 * t-radian measures, arc lengths. Values are kept in lowest terms with a
 * positive denominator, so equality is structural and the text form
 * "p/q" is canonical.
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace taxicab {

class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    template <std::integral N, std::integral D>
    Rational(N num, D den) : q_(static_cast<long>(num), static_cast<long>(den)) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        q_.canonicalize();
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        q_.canonicalize();
    }

    /// Parses "p", "p/q", or a decimal such as "-1.25" or "3e-2", exactly.
    static Rational parse(std::string_view text);

    [[nodiscard]] const mpq_class& value() const noexcept { return q_; }
    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }

    [[nodiscard]] int sign() const noexcept { return sgn(q_); }
    [[nodiscard]] bool is_zero() const noexcept { return sgn(q_) == 0; }
    [[nodiscard]] bool is_integer() const noexcept { return q_.get_den() == 1; }

    /// Canonical text form: "p" for integers, otherwise "p/q".
    [[nodiscard]] std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    /// Fixed-point decimal rendering, rounded half away from zero.
    [[nodiscard]] std::string decimal(unsigned digits) const;

    [[nodiscard]] double to_double() const { return q_.get_d(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) noexcept { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        const int c = cmp(a.q_, b.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Largest integer not exceeding r.
inline Rational floor(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.value().get_num_mpz_t(), r.value().get_den_mpz_t());
    return Rational(q, mpz_class(1));
}

/// Representative of r modulo m in [0, m); m must be positive.
inline Rational mod(const Rational& r, const Rational& m) {
    if (m.sign() <= 0) throw std::domain_error("modulus must be positive");
    return r - m * floor(r / m);
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline mpz_class pow10(unsigned long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
    return p;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
    const auto fail = [&]() -> Rational {
        throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
    };
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    if (s.empty()) return fail();

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto num = s.substr(0, slash);
        const auto den = s.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den)) return fail();
        mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("rational with zero denominator: \"" + std::string(text) + "\"");
        if (negative) n = -n;
        return Rational(n, d);
    }

    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp = s.substr(e + 1);
        bool exp_negative = false;
        if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
            exp_negative = exp.front() == '-';
            exp.remove_prefix(1);
        }
        if (!detail::all_digits(exp) || exp.size() > 6) return fail();
        exponent = std::stol(std::string(exp));
        if (exp_negative) exponent = -exponent;
        s = s.substr(0, e);
    }

    std::string digits;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        const auto whole = s.substr(0, dot);
        const auto frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) return fail();
        if ((!whole.empty() && !detail::all_digits(whole)) || (!frac.empty() && !detail::all_digits(frac)))
            return fail();
        digits = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        if (!detail::all_digits(s)) return fail();
        digits = std::string(s);
    }

    mpz_class n(digits.empty() ? std::string("0") : digits, 10);
    if (negative) n = -n;
    if (exponent >= 0) return Rational(n * detail::pow10(static_cast<unsigned long>(exponent)), mpz_class(1));
    return Rational(n, detail::pow10(static_cast<unsigned long>(-exponent)));
}

inline std::string Rational::decimal(unsigned digits) const {
    const mpz_class scale = detail::pow10(digits);
    mpz_class num = abs(*this).value().get_num() * scale * 2 + q_.get_den();
    mpz_class den = q_.get_den() * 2;
    mpz_class scaled;
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

    std::string body = scaled.get_str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    std::string out = body.substr(0, body.size() - digits);
    if (digits > 0) out += "." + body.substr(body.size() - digits);
    if (sign() < 0 && scaled != 0) out.insert(0, "-");
    return out;
}

}  // namespace taxicab
