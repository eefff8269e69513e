#include <sunstruct/specfun.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace sunstruct {

namespace detail {

bool nonpositive_integer(double a, long* value) {
    double r = std::round(a);
    if (std::abs(a - r) > kIntegerTol || r > 0.0) return false;
    if (value) *value = static_cast<long>(r);
    return true;
}

ddouble pochhammer_dd(double a, int k) {
    if (k < 0) throw std::invalid_argument("pochhammer: k must be >= 0");
    long snapped = 0;
    if (nonpositive_integer(a, &snapped) && k > -snapped) {
        // The product contains the factor a + |a| ~ 0: exact zero by
        // convention, so downstream series terminate cleanly.
        return ddouble(0.0);
    }
    ddouble p(1.0);
    // a + i enters as an exact two_sum; rounding it to double first would
    // leak ~1e-16 per factor past the extended precision.
    for (int i = 0; i < k; ++i) p = p * two_sum(a, static_cast<double>(i));
    return p;
}

ddouble f21_terminating_dd(int gamma, double b, double c, double z) {
    // Term recurrence t_{k+1} = t_k * (k-gamma)(b+k) / ((c+k)(k+1)) * z,
    // summed in ascending k.  All gamma+1 terms are generated even when z
    // is small; the cost is negligible at degree <= 64.
    //
    // At z = 1 the alternating sum cancels by up to nine orders, so every
    // factor must reach the multiply unrounded: k-gamma, k+1 and z are
    // exact doubles, b+k and c+k go through two_sum.
    ddouble sum(1.0);
    ddouble term(1.0);
    for (int k = 0; k < gamma; ++k) {
        term = term * static_cast<double>(k - gamma);
        term = term * two_sum(b, static_cast<double>(k));
        term = term / two_sum(c, static_cast<double>(k));
        term = term / static_cast<double>(k + 1);
        term = term * z;
        sum = sum + term;
    }
    return sum;
}

ddouble beta_complete_dd(int gamma, double s) {
    // B(s, gamma+1) = gamma! / (s (s+1) ... (s+gamma)); the factor-weaved
    // form keeps every partial product in [0,1] so degree 64 cannot
    // overflow for any positive s.
    ddouble p = ddouble(1.0) / s;
    for (int i = 1; i <= gamma; ++i) p = p * static_cast<double>(i) / (s + i);
    return p;
}

ddouble ibeta_lower_dd(int gamma, double s, double z) {
    if (z == 0.0) return ddouble(0.0);
    // int_0^z (1-v)^gamma v^(s-1) dv = z^s sum_l (-gamma)_l/l! z^l / (s+l)
    ddouble sum(0.0);
    ddouble coef(1.0);
    for (int l = 0; l <= gamma; ++l) {
        sum = sum + coef / two_sum(s, static_cast<double>(l));
        if (l < gamma) {
            coef = coef * static_cast<double>(l - gamma);
            coef = coef / static_cast<double>(l + 1);
            coef = coef * z;
        }
    }
    // z^s carries the relative error of pow(); the cancelling part of the
    // sum above is what needed the extended precision.
    return sum * std::pow(z, s);
}

ddouble ibeta_upper_dd(int gamma, double s, double z) {
    double y = 1.0 - z;
    if (y <= 0.0) return ddouble(0.0);
    // With w = 1-v the tail becomes int_0^y w^gamma (1-w)^(s-1) dw and
    // (1-w)^(s-1) = sum_j (1-s)_j/j! w^j, which converges for y < 1.  All
    // cancellation of the original form is gone: the summands decay
    // geometrically.
    ddouble ypow = dd_powi(ddouble(y), gamma + 1);
    ddouble sum(0.0);
    ddouble coef(1.0);
    for (int j = 0; j < 4000; ++j) {
        ddouble term = coef / static_cast<double>(gamma + 1 + j);
        sum = sum + term;
        if (dd_abs(term).hi < 1e-34 * dd_abs(sum).hi + 1e-320) break;
        coef = coef * (two_sum(1.0, -s) + static_cast<double>(j));
        coef = coef / static_cast<double>(j + 1);
        coef = coef * y;
    }
    return sum * ypow;
}

ddouble ibeta_routed_dd(int gamma, double s, double z) {
    if (z <= 0.55) return ibeta_lower_dd(gamma, s, z);
    return beta_complete_dd(gamma, s) - ibeta_upper_dd(gamma, s, z);
}

} // namespace detail

double pochhammer(double a, int k) {
    return to_double(detail::pochhammer_dd(a, k));
}

double f21_terminating(const TerminatingF21& f) {
    long snapped = 0;
    if (!detail::nonpositive_integer(f.neg_int_a, &snapped)) {
        throw std::invalid_argument(
            "f21_terminating: first parameter must be a nonpositive integer, got " +
            std::to_string(f.neg_int_a));
    }
    int gamma = static_cast<int>(-snapped);
    if (gamma > kMaxPolyDegree) {
        throw std::invalid_argument(
            "f21_terminating: degree " + std::to_string(gamma) + " exceeds cap " +
            std::to_string(kMaxPolyDegree));
    }
    if (!(f.z >= 0.0 && f.z <= 1.0)) {
        throw std::domain_error("f21_terminating: z must lie in [0,1]");
    }
    for (int k = 0; k < gamma; ++k) {
        if (std::abs(f.c + k) < kIntegerTol) {
            throw std::domain_error("f21_terminating: denominator c+k vanishes at k=" +
                                    std::to_string(k));
        }
    }
    return to_double(detail::f21_terminating_dd(gamma, f.b, f.c, f.z));
}

double f21_at_one(double a, double b, double c) {
    long snapped = 0;
    if (detail::nonpositive_integer(a, &snapped)) {
        int gamma = static_cast<int>(-snapped);
        if (gamma > kMaxPolyDegree) {
            throw std::invalid_argument("f21_at_one: degree exceeds cap");
        }
        // Chu-Vandermonde form of the Gauss sum: (c-b)_gamma / (c)_gamma.
        // Exact finite product, no Gamma evaluations, no overflow.
        detail::ddouble p(1.0);
        for (int i = 0; i < gamma; ++i) {
            if (std::abs(c + i) < kIntegerTol) {
                throw std::domain_error("f21_at_one: denominator c+k vanishes");
            }
            detail::ddouble num = detail::two_sum(c, -b) + static_cast<double>(i);
            p = p * num / detail::two_sum(c, static_cast<double>(i));
        }
        return to_double(p);
    }
    // Non-terminating case: Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)).
    // Restricted to positive Gamma arguments, which covers every use in
    // this model and sidesteps reflection/sign bookkeeping.
    double cab = c - a - b;
    if (!(cab > 0.0)) {
        throw std::domain_error("f21_at_one: requires c - a - b > 0");
    }
    if (!(c > 0.0) || !(c - a > 0.0) || !(c - b > 0.0)) {
        throw std::domain_error("f21_at_one: Gamma arguments must be positive");
    }
    return std::exp(std::lgamma(c) + std::lgamma(cab) -
                    std::lgamma(c - a) - std::lgamma(c - b));
}

double incomplete_beta_poly(int gamma, double s_star, double z) {
    if (gamma < 1 || gamma > kMaxPolyDegree) {
        throw std::invalid_argument("incomplete_beta_poly: gamma out of range");
    }
    if (!(s_star > 0.0)) {
        throw std::invalid_argument("incomplete_beta_poly: s_star must be > 0");
    }
    if (!(z >= 0.0 && z <= 1.0)) {
        throw std::domain_error("incomplete_beta_poly: z must lie in [0,1]");
    }
    return to_double(detail::ibeta_routed_dd(gamma, s_star, z));
}

} // namespace sunstruct
