#include <sunstruct/checks.hpp>

#include <sunstruct/energy.hpp>
#include <sunstruct/luminosity.hpp>
#include <sunstruct/oracle.hpp>
#include <sunstruct/profiles.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sunstruct {

namespace {

double rel_err(double got, double want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

CheckResult make_result(std::string name, double err, double tol) {
    return CheckResult{std::move(name), err, tol, err <= tol};
}

} // namespace

std::vector<CheckResult> run_check_suite(const ModelParams& params,
                                         const PhysicalConstants& constants,
                                         const Composition& composition,
                                         double truncation_tol) {
    params.validate();
    constants.validate();
    composition.validate();

    std::vector<CheckResult> out;
    const CentralValues cv = central_values(params, constants, composition);

    // Quadrature self-test on two integrals with known values.  Everything
    // downstream trusts the integrator, so it is exercised first.
    {
        QuadOptions opt;
        const QuadResult r1 = quad_integrate(
            [](double t) { return t * t; }, 0.0, 1.0, opt);
        double err = rel_err(r1.value, 1.0 / 3.0);
        const QuadResult r2 = quad_integrate(
            [](double v) { return std::pow(v, 2.5) * std::pow(1.0 - v, 10.0); },
            0.0, 1.0, opt);
        const double beta_ref =
            std::exp(std::lgamma(3.5) + std::lgamma(11.0) - std::lgamma(14.5));
        err = std::max(err, rel_err(r2.value, beta_ref));
        out.push_back(make_result("quadrature-self-test", err, 1e-12));
    }

    // Enclosed-mass closed form against direct integration of the
    // density law.
    {
        double err = 0.0;
        for (int i = 1; i <= 10; ++i) {
            const double x = 0.1 * i;
            err = std::max(err, rel_err(f_mass(x, params),
                                        quad_mass_fraction(x, params)));
        }
        out.push_back(make_result("mass-vs-quadrature", err, 1e-8));
    }

    // Dimensionless pressure against the nested hydrostatic integral.
    {
        const double pts[] = {0.0, 0.15, 0.3, 0.5, 0.7, 0.85};
        double err = 0.0;
        for (double x : pts) {
            err = std::max(err, rel_err(f_pressure(x, params),
                                        quad_pressure_dimless(x, params)));
        }
        out.push_back(make_result("pressure-vs-quadrature", err, 1e-8));
    }

    // Central density from total-mass normalisation.
    {
        QuadOptions opt;
        opt.abs_tol = 0.0;
        opt.rel_tol = 1e-13;
        const QuadResult shell = quad_integrate(
            [&](double t) { return t * t * f_density(t, params); }, 0.0, 1.0,
            opt);
        const double r3 = std::pow(constants.R_total, 3);
        const double rho_quad =
            constants.M_total / (4.0 * std::numbers::pi * r3 * shell.value);
        out.push_back(make_result("central-density-vs-quadrature",
                                  rel_err(cv.rho_c, rho_quad), 1e-10));
    }

    // Central pressure: the closed form runs through the eta sum, the
    // reference through quadrature alone, so a perturbed eta shows up here.
    {
        const double fp0 = quad_pressure_dimless(0.0, params);
        const double p_quad = 9.0 / (4.0 * std::numbers::pi) * constants.G *
                              constants.M_total * constants.M_total /
                              std::pow(constants.R_total, 4) * fp0;
        out.push_back(make_result("central-pressure-vs-quadrature",
                                  rel_err(cv.P_c, p_quad), 1e-8));
    }

    // Pressure ratio two ways: the Horner polynomial over eta versus the
    // kernel route f_P(x)/f_P(0).  Absolute comparison; the ratio spans
    // [0, 1] by construction.
    {
        const double fp0 = f_pressure(0.0, params);
        double err = 0.0;
        for (int i = 0; i <= 32; ++i) {
            const double x = i / 32.0;
            const double kernel = f_pressure(x, params) / fp0;
            err = std::max(err,
                           std::abs(pressure_ratio(x, params) - kernel));
        }
        out.push_back(make_result("pressure-ratio-two-path", err, 1e-10));
    }

    // Perfect-gas closure: f_P / (f_D * f_T) must be flat across the
    // interior.
    {
        const double norm =
            f_pressure(0.0, params) / f_temperature(0.0, params);
        double err = 0.0;
        for (int i = 0; i <= 64; ++i) {
            const double x = 0.999 * i / 64.0;
            const double ratio = f_pressure(x, params) /
                                 (f_density(x, params) * f_temperature(x, params));
            err = std::max(err, rel_err(ratio, norm));
        }
        out.push_back(make_result("gas-law-closure", err, 1e-9));
    }

    // Boundary values fixed by construction.
    {
        double err = std::abs(f_density(0.0, params) - 1.0);
        err = std::max(err, std::abs(f_density(1.0, params)));
        err = std::max(err, std::abs(f_mass(0.0, params)));
        err = std::max(err, std::abs(f_mass(1.0, params) - 1.0));
        err = std::max(err, std::abs(f_pressure(1.0, params)));
        err = std::max(err, std::abs(f_temperature(1.0, params)));
        out.push_back(make_result("boundary-values", err, 1e-12));
    }

    // Half-peak radius of the density law: bisection against the closed
    // form (1 - 2^(-1/gamma))^(1/delta).
    {
        const double x_half = half_peak_radius(
            [&](double x) { return f_density(x, params); }, 0.5);
        const double closed =
            std::pow(1.0 - std::pow(2.0, -1.0 / params.gamma),
                     1.0 / params.delta);
        out.push_back(make_result("half-peak-radius",
                                  rel_err(x_half, closed), 1e-8));
    }

    // Energy rate two ways: raw power law in (rho, T) versus the reduced
    // central-scale form.
    {
        double err = 0.0;
        for (int i = 0; i <= 16; ++i) {
            const double x = 0.95 * i / 16.0;
            const PhysicalPoint pt =
                physical_profiles(x, params, constants, cv);
            const double raw = params.epsilon0 *
                               std::pow(pt.rho, params.n_exp) *
                               std::pow(pt.temperature, params.m_exp);
            err = std::max(err, rel_err(epsilon_direct(x, params, cv), raw));
        }
        out.push_back(make_result("energy-two-forms", err, 1e-10));
    }

    // Power-series evaluation of the energy rate against the direct form
    // inside the expansion radius, plus the luminosity term set against
    // direct quadrature of the shell integral.
    {
        ExpansionOptions opts;
        opts.tail_tol = truncation_tol;
        const int order = choose_truncation_order(params, opts);
        const PowerTermExpansion exp = epsilon_expansion(params, order, opts);

        double err = 0.0;
        for (int i = 0; i <= 10; ++i) {
            const double x = exp.x_max * i / 10.0;
            err = std::max(err,
                           rel_err(epsilon_from_expansion(x, exp, cv, params),
                                   epsilon_direct(x, params, cv)));
        }
        const double exp_tol = std::max(1e-6, 2.0 * exp.tail_bound);
        out.push_back(make_result("expansion-vs-direct", err, exp_tol));

        const LuminosityTermSet lum =
            build_luminosity_terms(exp, params, constants, cv);
        const double L_total = total_luminosity(lum, params);

        double lum_err = 0.0;
        const double pts[] = {0.1, 0.2, 0.3, 0.5, 1.0};
        for (double x : pts) {
            const double q = quad_luminosity(
                x, params, cv.rho_c, constants.R_total,
                [&](double t) { return epsilon_direct(t, params, cv); });
            const double got =
                (x == 1.0) ? L_total : luminosity_profile(x, lum);
            lum_err = std::max(lum_err, rel_err(got, q));
        }
        out.push_back(make_result("luminosity-vs-quadrature", lum_err, 1e-6));

        // Closure: the running profile at the surface must reproduce the
        // total computed through the complete-beta route.
        out.push_back(make_result(
            "luminosity-closure",
            rel_err(luminosity_profile(1.0, lum), L_total), 1e-12));

        // The rate coefficient enters linearly.
        ModelParams scaled = params;
        scaled.epsilon0 = params.epsilon0 * 3.0;
        const CentralValues cv_s =
            central_values(scaled, constants, composition);
        const PowerTermExpansion exp_s = epsilon_expansion(scaled, order, opts);
        const LuminosityTermSet lum_s =
            build_luminosity_terms(exp_s, scaled, constants, cv_s);
        out.push_back(make_result(
            "luminosity-linearity",
            rel_err(total_luminosity(lum_s, scaled), 3.0 * L_total), 1e-12));
    }

    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

} // namespace sunstruct
