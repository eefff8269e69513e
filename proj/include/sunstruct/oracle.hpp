#pragma once

/*
 * oracle.hpp -- independent numerical checks of the closed forms.
 *
 * Everything here rebuilds the structure quantities by direct adaptive
 * quadrature of the defining integrals, starting from nothing but the
 * density law f_density (the model's one axiom).  None of the
 * hypergeometric machinery is used, so agreement with the analytic
 * profiles is a genuine two-path check.
 *
 * The integrator is a globally adaptive Gauss-Kronrod 15(7) rule with
 * interval bisection; the error estimate on each interval is the
 * difference between the embedded 7-point Gauss result and the 15-point
 * Kronrod result.
 */

#include <sunstruct/model.hpp>

#include <functional>

namespace sunstruct {

struct QuadOptions {
    double rel_tol = 1e-12;
    double abs_tol = 1e-15;   // lower this for integrals far below unit scale
    int max_depth = 60;
    int max_intervals = 200000;
};

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
    bool converged = false;
    long evaluations = 0;
};

QuadResult quad_integrate(const std::function<double(double)>& f, double a,
                          double b, const QuadOptions& opt = {});

// Enclosed-mass fraction: int_0^x t^2 f_D dt / int_0^1 t^2 f_D dt.
double quad_mass_fraction(double x, const ModelParams& p);

// Dimensionless pressure by integrating hydrostatic equilibrium outside-
// in, with the enclosed mass itself obtained by (nested) quadrature:
//   f_P(x) = int_x^1 I(t) f_D(t) / t^2 dt / (9 I(1)^2),
//   I(t)   = int_0^t u^2 f_D(u) du.
double quad_pressure_dimless(double x, const ModelParams& p);

// Luminosity interior to x by integrating the burning rate against the
// density profile.  eps(t) is supplied by the caller so the oracle works
// for either evaluation path.
double quad_luminosity(double x, const ModelParams& p, double rho_c,
                       double R_total,
                       const std::function<double(double)>& eps);

// Smallest x with f(x) = ratio * f(0), for monotonically decreasing f.
// Bisection to |dx| <= 1e-10.
double half_peak_radius(const std::function<double(double)>& f, double ratio);

} // namespace sunstruct
