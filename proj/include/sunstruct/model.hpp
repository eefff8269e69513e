#pragma once

/*
 * model.hpp -- parameter records for the polytrope-like density law
 *
 *     rho(x) = rho_c (1 - x^delta)^gamma,   x = r/R in [0,1]
 *
 * gamma is a positive integer so every downstream hypergeometric series
 * terminates.  The nuclear burning rate is eps = eps0 rho^n T^m with
 * integer exponents m >= n >= 0.
 */

#include <stdexcept>

namespace sunstruct {

struct ModelParams {
    double delta = 1.28;   // density-law shape, > 0
    int gamma = 10;        // density-law degree, 1..64
    int n_exp = 1;         // density exponent of the burning rate, >= 0
    int m_exp = 4;         // temperature exponent of the burning rate, >= n_exp
    double epsilon0 = 1.0; // burning-rate scale, > 0 (units fold into it)

    // Relative perturbation applied to the first summand of the central
    // pressure sum.  Zero in normal operation; nonzero values exist so the
    // cross-checks can demonstrate they catch a corrupted coefficient.
    double eta_fault_rel = 0.0;

    void validate() const;
};

struct Composition {
    double X = 0.70;  // hydrogen mass fraction
    double Y = 0.28;  // helium mass fraction
    double Z = 0.02;  // metals; X + Y + Z must be 1

    void validate() const;
};

struct PhysicalConstants {
    double G = 6.67430e-11;        // m^3 kg^-1 s^-2
    double k_B = 1.380649e-23;     // J K^-1
    double N_A = 6.02214076e23;    // mol^-1
    double M_total = 1.98892e30;   // kg, stellar mass
    double R_total = 6.9598e8;     // m, stellar radius

    void validate() const;
};

struct CentralValues {
    double rho_c;      // kg m^-3
    double P_c;        // Pa
    double T_c;        // K
    double mu;         // mean molecular weight, dimensionless
    double eta_gamma;  // dimensionless central-pressure sum eta(gamma, delta)
};

} // namespace sunstruct
