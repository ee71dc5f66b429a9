#pragma once
// Exact integer and rational arithmetic plus the small number-theory helpers
// (integer square roots, square-free splitting, content of coefficient sets)
// that the field tower is built on.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "errors.hpp"

namespace feuerbach {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return numerator(q); }
inline Integer den(const Rational& q) { return denominator(q); }

inline int sign_int(const Integer& n) { return n.sign(); }
inline int sign_rat(const Rational& q) { return num(q).sign(); }

// Floor of sqrt(n) for n >= 0.
inline Integer isqrt_floor(const Integer& n) {
    return boost::multiprecision::sqrt(n);
}

inline std::optional<Integer> exact_int_sqrt(const Integer& n) {
    if (n < 0) return std::nullopt;
    Integer r = isqrt_floor(n);
    if (r * r == n) return r;
    return std::nullopt;
}

inline std::optional<Rational> exact_rat_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto rn = exact_int_sqrt(num(q));
    if (!rn) return std::nullopt;
    auto rd = exact_int_sqrt(den(q));
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

// Splits n > 0 as s^2 * m with m square-free up to factors above the trial
// division bound. Callers only rely on m having no small square factor; a
// missed large square factor is caught later by the exact perfect-square test.
inline std::pair<Integer, Integer> square_free_split(Integer n) {
    Integer s = 1;
    if (n <= 0) return {s, n};
    if (auto r = exact_int_sqrt(n)) return {*r, Integer(1)};
    for (Integer p = 2; p * p <= n && p < 32768; ++p) {
        Integer pp = p * p;
        while (n % pp == 0) {
            n /= pp;
            s *= p;
        }
        if (auto r = exact_int_sqrt(n)) {
            s *= *r;
            n = 1;
            break;
        }
    }
    return {s, n};
}

// Largest rational c with c^2 dividing q "coordinatewise": num and den are
// split into square * square-free parts independently.
inline Rational square_part(const Rational& q) {
    if (q == 0) return 1;
    auto [sn, mn] = square_free_split(abs(num(q)));
    auto [sd, md] = square_free_split(den(q));
    (void)mn;
    (void)md;
    return Rational(sn, sd);
}

// Positive content of a nonzero coefficient set: gcd of numerators over lcm
// of denominators. Dividing every entry by it leaves coprime integers.
inline Rational rational_content(std::span<const Rational> xs) {
    Integer g = 0, l = 1;
    for (const Rational& x : xs) {
        if (x == 0) continue;
        g = gcd(g, abs(num(x)));
        l = lcm(l, den(x));
    }
    if (g == 0) return 0;
    return Rational(g, l);
}

inline Rational pow10_rat(int e) {
    Integer p = pow(Integer(10), static_cast<unsigned>(e < 0 ? -e : e));
    return e < 0 ? Rational(1, p) : Rational(p);
}

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

} // namespace feuerbach
