#pragma once

/*
 * profiles.hpp -- closed-form structure profiles of the model star.
 *
 * All of the run structure follows from the single assumed density law
 *
 *     rho(r) = rho_c f_D(x),   f_D(x) = (1 - x^delta)^gamma,   x = r/R.
 *
 * Mass continuity and hydrostatic equilibrium then integrate in closed
 * form through terminating hypergeometric sums:
 *
 *     M(r)  = M  f_M(x)
 *     P(r)  = (9/4pi) G M^2/R^4  f_P(x)
 *     T(r)  = 3 (mu/(k_B N_A)) G (M/R)  f_T(x)     (ideal-gas closure)
 *
 * f_P and f_T share the kernel S(z) = sum_m c_m int_z^1 v^(2/delta+m-1)
 * (1-v)^gamma dv, evaluated through the incomplete-beta kernels; the
 * ideal-gas identity f_P = pref * f_T * f_D holds to rounding error by
 * construction.
 */

#include <sunstruct/detail/ddouble.hpp>
#include <sunstruct/model.hpp>

namespace sunstruct {

// 1 / (2X + 3Y/4 + Z/2): fully ionized ideal-gas mean molecular weight.
double mean_molecular_weight(const Composition& comp);

// Density shape (1 - x^delta)^gamma.  Requires x in [0,1].
double f_density(double x, const ModelParams& p);

// Enclosed-mass fraction; f_mass(1) = 1.
double f_mass(double x, const ModelParams& p);

// Dimensionless pressure; f_pressure(1) = 0.
double f_pressure(double x, const ModelParams& p);

// Dimensionless temperature f_P / (pref * f_D).  The ratio tends to 0
// linearly in 1 - x; inputs with x >= 1 - 1e-6 return that one-sided
// linear limit rather than dividing two underflowing quantities, so the
// result vanishes exactly only at x = 1.
double f_temperature(double x, const ModelParams& p);

// Central-pressure normalization eta(gamma, delta) = S(0).
double eta(const ModelParams& p);

// (3/delta + 1)_gamma / gamma!  --  the rho_c / <rho> density contrast.
double mass_prefactor(const ModelParams& p);

// Central density, pressure, temperature and mu for the given star.
CentralValues central_values(const ModelParams& p, const PhysicalConstants& pc,
                             const Composition& comp);

struct PhysicalPoint {
    double rho;          // kg m^-3
    double mass;         // kg enclosed
    double pressure;     // Pa
    double temperature;  // K
};

PhysicalPoint physical_profiles(double x, const ModelParams& p,
                                const PhysicalConstants& pc,
                                const CentralValues& cv);

namespace detail {

ddouble mass_prefactor_dd(const ModelParams& p);

// S(z): pressure kernel shared by f_pressure and f_temperature.  Branches
// to the complementary beta series past z = 0.55, where the direct form
// would cancel against the full integral.
ddouble pressure_kernel_dd(const ModelParams& p, double z);

// 1 - x^delta evaluated without cancellation near x = 1.
double one_minus_pow(double x, double delta);

} // namespace detail

} // namespace sunstruct
