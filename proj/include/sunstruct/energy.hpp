#pragma once

/*
 * energy.hpp -- nuclear energy generation rate eps = eps0 rho^n T^m.
 *
 * Two evaluation routes:
 *
 *  - epsilon_direct: pointwise ground truth, eps0 rho_c^n T_c^m *
 *    [P/P_c]^m * (1-x^delta)^(gamma(n-m)).  Cheap and exact up to
 *    rounding; diverges at x = 1 when m > n.
 *
 *  - epsilon_from_expansion: evaluation of a materialized power series
 *    in x, built once by epsilon_expansion.  This is the form the
 *    luminosity integral consumes term by term.
 *
 * The expansion multiplies three factors:
 *    [P/P_c]^m          = sum_q (-m)_q/q! eta^-q x^2q h(x)^q     (finite)
 *    h(x)^q             by repeated convolution of h's coefficients
 *    (1-z)^(-gamma(m-n)) binomial series, truncated at order S with a
 *                        recorded geometric tail bound at x_max
 *
 * Terms sharing an x-power are merged; since x_power =
 * delta*(s + multi_exponent) + 2q, equality is decided on the integer
 * pair (s + multi_exponent, q), never on floating-point exponents.  A
 * merged term carries the combined z-exponent in `s` with
 * multi_exponent = 0; the luminosity mapping s* = s + multi_exponent +
 * (3 + 2q)/delta is invariant under that folding.
 *
 * The series coefficients alternate in sign and the evaluated sum can
 * sit tens of orders of magnitude below the term mass.  Evaluation runs
 * in double-double with a running term-mass monitor and reruns in
 * arbitrary precision (MPFR) when the monitor says double-double cannot
 * reach ~1e-9 relative error.
 */

#include <sunstruct/model.hpp>

#include <memory>
#include <vector>

namespace sunstruct {

struct HPolynomial {
    // Coefficients a_0 .. a_{2 gamma} of h(x) in powers of z = x^delta;
    // P/P_c = 1 - x^2 h(x) / eta.  Signs strictly alternate: a_j has
    // sign (-1)^j.
    std::vector<double> coeffs;
};

HPolynomial h_polynomial(const ModelParams& p);

// P(x)/P_c = 1 - x^2 h(x)/eta, clamped to [0,1] (the exact value can
// round to a signed zero-neighborhood at the surface).
double pressure_ratio(double x, const ModelParams& p);

// Ground-truth burning rate.  Rejects x >= 1 when m_exp > n_exp (the
// density factor diverges there); x = 1 is fine otherwise.
double epsilon_direct(double x, const ModelParams& p, const CentralValues& cv);

// Same expression with real exponents; the expansion path below requires
// integers, the direct form does not.
double epsilon_direct(double x, double n_real, double m_real,
                      const ModelParams& p, const CentralValues& cv);

struct ExpansionOptions {
    double x_max = 0.5;      // radius the tail bound is evaluated at
    double tail_tol = 1e-8;  // largest acceptable tail_bound
};

struct ExpansionBackend;

struct PowerTermExpansion {
    struct Term {
        double coefficient;
        int s;               // binomial-series index (holds s + multi after merge)
        int q;               // power of x^2 h / eta
        int multi_exponent;  // n_1 + 2 n_2 + ... from h^q; 0 after merging
        double x_power;      // delta*(s + multi_exponent) + 2q
    };

    std::vector<Term> terms;   // grouped by q, ascending z-power within
    int truncation_order = 0;  // S
    double tail_bound = 0.0;   // dropped s-series mass at x_max
    double x_max = 0.5;
    ModelParams params;

    // Extended-precision coefficient tables backing evaluation; immutable
    // after construction, shared freely across threads.
    std::shared_ptr<const ExpansionBackend> backend;
};

// Smallest S whose tail bound at opts.x_max meets opts.tail_tol.
int choose_truncation_order(const ModelParams& p, const ExpansionOptions& opts = {});

// Materializes the term list.  Throws std::invalid_argument when the
// tail bound at S exceeds opts.tail_tol.
PowerTermExpansion epsilon_expansion(const ModelParams& p, int truncation_S,
                                     const ExpansionOptions& opts = {});

// eps0 rho_c^n T_c^m * sum_terms coefficient * x^x_power, for
// 0 <= x <= e.x_max.
double epsilon_from_expansion(double x, const PowerTermExpansion& e,
                              const CentralValues& cv, const ModelParams& p);

namespace detail {

// h^q coefficients by explicit multinomial enumeration over the
// compositions (n_0, ..., n_{2 gamma}) with sum q.  Exponential in the
// degree; reference path for small-case comparison against the
// convolution route, not used in production evaluation.
std::vector<double> h_power_multinomial(const std::vector<double>& h, int q);

// eps0 rho_c^n T_c^m via logs; shared by both evaluation routes so their
// comparison isolates series error.
double epsilon_central_scale(const ModelParams& p, const CentralValues& cv);

} // namespace detail

} // namespace sunstruct
