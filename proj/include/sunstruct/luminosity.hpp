#pragma once

/*
 * luminosity.hpp -- cumulative energy outflow
 *
 *     L(x) = 4 pi R^3 int_0^x t^2 rho(t) eps(t) dt.
 *
 * With eps in its power-series form each term integrates to an
 * incomplete beta function: the monomial coefficient c x^(2q) z^zpow
 * contributes  c * int_0^z (1-v)^gamma v^(s*-1) dv / delta  with
 * s* = zpow + (3 + 2q)/delta.  At x = 1 the incomplete beta collapses to
 * the complete one via the Gauss summation theorem, giving an
 * independent closed form for the total output.
 *
 * Term coefficients alternate and cancel catastrophically near the
 * surface; evaluation always runs through the arbitrary-precision
 * backend shared with the expansion (see mpseries).
 */

#include <sunstruct/energy.hpp>
#include <sunstruct/model.hpp>

#include <memory>
#include <vector>

namespace sunstruct {

struct LuminosityTermSet {
    struct Term {
        double coefficient;  // expansion term weight
        double s_star;       // beta-function exponent, > 0
    };

    std::vector<Term> terms;  // one per expansion term, same order
    double scale;             // W: 4 pi eps0 rho_c^(n+1) T_c^m R^3 / delta
    ModelParams params;

    std::shared_ptr<const ExpansionBackend> backend;
};

// Maps each expansion term to its beta-function exponent and attaches
// the dimensional scale.
LuminosityTermSet build_luminosity_terms(const PowerTermExpansion& e,
                                         const ModelParams& p,
                                         const PhysicalConstants& pc,
                                         const CentralValues& cv);

// L(x) in watts; L(0) = 0, monotone nondecreasing.
double luminosity_profile(double x, const LuminosityTermSet& t);

// L over the whole star via the complete-beta (Gauss summation) path;
// equals luminosity_profile(1) up to rounding.
double total_luminosity(const LuminosityTermSet& t, const ModelParams& p);

// s* for one term; exposed for the term-mapping tests.
double luminosity_s_star(int s, int q, int multi_exponent, double delta);

} // namespace sunstruct
