#pragma once

/*
 * specfun.hpp -- terminating Gauss hypergeometric machinery.
 *
 * Everything here is a finite sum: the first parameter of the 2F1 is a
 * nonpositive integer -gamma, so the series stops after gamma+1 terms.
 * The sums alternate in sign and can cancel by many orders of magnitude
 * (condition number up to ~2^gamma), so all kernels accumulate in
 * double-double arithmetic in fixed ascending-k order and round once at
 * the end.
 *
 * Conventions:
 *   pochhammer(a, k)            rising factorial (a)_k = a (a+1) ... (a+k-1)
 *   f21_terminating(a,b,c,z)    2F1(a,b;c;z) with a a nonpositive integer
 *   f21_at_one(a,b,c)           2F1(a,b;c;1) by the Gauss summation theorem
 *   incomplete_beta_poly        int_0^z (1-v)^gamma v^(s-1) dv
 *
 * A parameter counts as a nonpositive integer when it is within 1e-9 of
 * one; pochhammer then returns an exact 0.0 as soon as the product walks
 * past the zero factor.  The supported polynomial degree is capped at 64.
 */

#include <sunstruct/detail/ddouble.hpp>

namespace sunstruct {

inline constexpr int kMaxPolyDegree = 64;

// Tolerance for deciding that a parameter is a (nonpositive) integer.
inline constexpr double kIntegerTol = 1e-9;

struct TerminatingF21 {
    double neg_int_a;  // nonpositive integer within kIntegerTol
    double b;
    double c;          // no factor c+k, 0 <= k < |a|, may vanish
    double z;          // in [0, 1]
};

// Rising factorial.  k must be >= 0.  Exact zero when a is a nonpositive
// integer (within tolerance) and k walks past it.
double pochhammer(double a, int k);

// Terminating 2F1; throws std::invalid_argument when neg_int_a is not a
// nonpositive integer within tolerance or |neg_int_a| > kMaxPolyDegree,
// std::domain_error when z is outside [0,1] or a denominator c+k vanishes.
double f21_terminating(const TerminatingF21& f);

// Gauss summation 2F1(a,b;c;1).  For nonpositive-integer a this is the
// exact finite product (c-b)_|a| / (c)_|a|; otherwise it is the Gamma
// ratio, which requires c-a-b > 0 and positive Gamma arguments.
double f21_at_one(double a, double b, double c);

// Lower incomplete beta with integer exponent gamma:
//   int_0^z (1-v)^gamma v^(s_star-1) dv
// equal to (z^s_star / s_star) 2F1(-gamma, s_star; s_star+1; z).
// Requires 1 <= gamma <= kMaxPolyDegree, s_star > 0, z in [0,1].
double incomplete_beta_poly(int gamma, double s_star, double z);

namespace detail {

// Double-double internals shared with the profile and energy kernels.

ddouble pochhammer_dd(double a, int k);

// 2F1(-gamma, b; c; z) summed in ascending k.
ddouble f21_terminating_dd(int gamma, double b, double c, double z);

// Complete beta B(s, gamma+1) = (1/s) * prod_{i=1}^{gamma} i/(s+i).
ddouble beta_complete_dd(int gamma, double s);

// Lower tail int_0^z (1-v)^gamma v^(s-1) dv via the terminating series.
// Well conditioned for z <= ~0.5; pairs with ibeta_upper_dd beyond.
ddouble ibeta_lower_dd(int gamma, double s, double z);

// Upper tail int_z^1 (1-v)^gamma v^(s-1) dv via the substitution w = 1-v
// and the binomial series of (1-w)^(s-1); converges for 1-z < 1 and is
// free of the endpoint cancellation that kills the lower series at z->1.
ddouble ibeta_upper_dd(int gamma, double s, double z);

// Routed lower incomplete beta: series for small z, complement for large.
ddouble ibeta_routed_dd(int gamma, double s, double z);

// True when a is within kIntegerTol of a nonpositive integer; *value
// receives the snapped integer.
bool nonpositive_integer(double a, long* value);

} // namespace detail

} // namespace sunstruct
