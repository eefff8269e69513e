#pragma once

/*
 * ddouble.hpp -- double-double ("compensated") arithmetic.
 *
 * An unevaluated sum hi + lo of two IEEE doubles with |lo| <= ulp(hi)/2,
 * giving roughly 106 bits of significand.  Used internally by the series
 * kernels, whose alternating sums cancel by many orders of magnitude and
 * would lose most of a plain double's digits.
 *
 * The error-free transforms (two_sum, two_prod) require strict IEEE
 * semantics: no value-changing reassociation and no implicit FMA
 * contraction across them.  The build sets -ffp-contract=off; two_prod
 * uses an explicit std::fma.
 *
 * Algorithms follow Dekker (1971) and the usual double-double recipes
 * (Bailey et al.).  Division is the three-step quotient refinement.
 */

#include <cmath>

namespace sunstruct::detail {

struct ddouble {
    double hi = 0.0;
    double lo = 0.0;

    ddouble() = default;
    constexpr ddouble(double h) : hi(h), lo(0.0) {}
    constexpr ddouble(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

// Error-free sum of two doubles (no magnitude ordering assumed).
inline ddouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

// Error-free sum assuming |a| >= |b| (or a == 0).
inline ddouble quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

// Error-free product.
inline ddouble two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline ddouble operator+(ddouble a, ddouble b) {
    ddouble s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline ddouble operator+(ddouble a, double b) {
    ddouble s = two_sum(a.hi, b);
    s.lo += a.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline ddouble operator-(ddouble a) { return {-a.hi, -a.lo}; }

inline ddouble operator-(ddouble a, ddouble b) { return a + (-b); }
inline ddouble operator-(ddouble a, double b) { return a + (-b); }
inline ddouble operator-(double a, ddouble b) { return ddouble(a) + (-b); }

inline ddouble operator*(ddouble a, ddouble b) {
    ddouble p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline ddouble operator*(ddouble a, double b) {
    ddouble p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline ddouble operator*(double a, ddouble b) { return b * a; }

inline ddouble operator/(ddouble a, ddouble b) {
    double q1 = a.hi / b.hi;
    ddouble r = a - b * q1;
    double q2 = r.hi / b.hi;
    r = r - b * q2;
    double q3 = r.hi / b.hi;
    ddouble q = quick_two_sum(q1, q2);
    return q + q3;
}

inline ddouble operator/(ddouble a, double b) { return a / ddouble(b); }
inline ddouble operator/(double a, ddouble b) { return ddouble(a) / b; }

inline ddouble& operator+=(ddouble& a, ddouble b) { a = a + b; return a; }
inline ddouble& operator+=(ddouble& a, double b) { a = a + b; return a; }
inline ddouble& operator-=(ddouble& a, ddouble b) { a = a - b; return a; }
inline ddouble& operator*=(ddouble& a, ddouble b) { a = a * b; return a; }
inline ddouble& operator*=(ddouble& a, double b) { a = a * b; return a; }
inline ddouble& operator/=(ddouble& a, ddouble b) { a = a / b; return a; }

inline double to_double(ddouble a) { return a.hi + a.lo; }
inline ddouble dd_abs(ddouble a) { return a.hi < 0.0 ? -a : a; }

// Integer power by repeated multiplication; n >= 0.
inline ddouble dd_powi(ddouble base, int n) {
    ddouble r(1.0);
    ddouble b = base;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

} // namespace sunstruct::detail
