#include <sunstruct/profiles.hpp>

#include <sunstruct/detail/series.hpp>
#include <sunstruct/specfun.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sunstruct {

namespace {

void require_unit_interval(double x, const char* who) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error(std::string(who) + ": x must lie in [0,1]");
    }
}

} // namespace

namespace detail {

double one_minus_pow(double x, double delta) {
    if (x <= 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    // 1 - exp(delta log x) keeps full relative precision where direct
    // subtraction would cancel (x near 1).
    return -std::expm1(delta * std::log(x));
}

ddouble mass_prefactor_dd(const ModelParams& p) {
    const double ti = 3.0 / p.delta;
    ddouble pr(1.0);
    for (int i = 1; i <= p.gamma; ++i) pr = pr * (ti + i) / static_cast<double>(i);
    return pr;
}

ddouble pressure_kernel_dd(const ModelParams& p, double z) {
    const double ti = 3.0 / p.delta;
    const double tw = 2.0 / p.delta;
    std::vector<ddouble> c = binomial_coefficients<ddouble>(p.gamma);
    ddouble s(0.0);
    if (z <= 0.55) {
        for (int m = 0; m <= p.gamma; ++m) {
            ddouble tail = beta_complete_dd(p.gamma, tw + m) -
                           ibeta_lower_dd(p.gamma, tw + m, z);
            s += c[m] / (ti + m) * tail;
        }
    } else {
        for (int m = 0; m <= p.gamma; ++m) {
            s += c[m] / (ti + m) * ibeta_upper_dd(p.gamma, tw + m, z);
        }
    }
    return s;
}

} // namespace detail

double mean_molecular_weight(const Composition& comp) {
    comp.validate();
    return 1.0 / (2.0 * comp.X + 0.75 * comp.Y + 0.5 * comp.Z);
}

double f_density(double x, const ModelParams& p) {
    require_unit_interval(x, "f_density");
    p.validate();
    double om = detail::one_minus_pow(x, p.delta);
    return to_double(detail::dd_powi(detail::ddouble(om), p.gamma));
}

double f_mass(double x, const ModelParams& p) {
    require_unit_interval(x, "f_mass");
    p.validate();
    if (x == 0.0) return 0.0;
    double z = std::pow(x, p.delta);
    const double ti = 3.0 / p.delta;
    detail::ddouble f = detail::f21_terminating_dd(p.gamma, ti, ti + 1.0, z);
    detail::ddouble x3 = detail::dd_powi(detail::ddouble(x), 3);
    return to_double(detail::mass_prefactor_dd(p) * x3 * f);
}

double f_pressure(double x, const ModelParams& p) {
    require_unit_interval(x, "f_pressure");
    p.validate();
    double z = std::pow(x, p.delta);
    detail::ddouble pref = detail::mass_prefactor_dd(p);
    detail::ddouble s = detail::pressure_kernel_dd(p, z);
    return to_double(pref * pref * s / (p.delta * p.delta));
}

double f_temperature(double x, const ModelParams& p) {
    require_unit_interval(x, "f_temperature");
    p.validate();
    // Near the surface S(z) ~ (1-z)^(gamma+1) B(3/delta, gamma+1)/(gamma+1)
    // while f_D = (1-z)^gamma, so the quotient tends to 0 linearly in
    // (1-z).  Past 1 - 1e-6 the two factors are pure roundoff (and
    // underflow outright for large gamma); substitute the one-sided limit
    // expression, which is exact 0 at x = 1.
    if (x >= 1.0 - 1e-6) {
        double om = detail::one_minus_pow(x, p.delta);
        detail::ddouble slope =
            detail::mass_prefactor_dd(p) *
            detail::beta_complete_dd(p.gamma, 3.0 / p.delta) /
            static_cast<double>(p.gamma + 1);
        return to_double(slope) * om / (p.delta * p.delta);
    }
    double z = std::pow(x, p.delta);
    detail::ddouble s = detail::pressure_kernel_dd(p, z);
    double fd = f_density(x, p);
    return to_double(detail::mass_prefactor_dd(p) * s) / (p.delta * p.delta * fd);
}

double eta(const ModelParams& p) {
    p.validate();
    return to_double(detail::eta_sum<detail::ddouble>(p));
}

double mass_prefactor(const ModelParams& p) {
    p.validate();
    return to_double(detail::mass_prefactor_dd(p));
}

CentralValues central_values(const ModelParams& p, const PhysicalConstants& pc,
                             const Composition& comp) {
    p.validate();
    pc.validate();
    double mu = mean_molecular_weight(comp);
    double pref = mass_prefactor(p);
    double et = eta(p);

    CentralValues cv;
    cv.mu = mu;
    cv.eta_gamma = et;
    cv.rho_c = 3.0 * pc.M_total / (4.0 * std::numbers::pi * std::pow(pc.R_total, 3)) * pref;
    cv.P_c = 9.0 / (4.0 * std::numbers::pi) * pc.G * pc.M_total * pc.M_total /
             std::pow(pc.R_total, 4) * pref * pref * et / (p.delta * p.delta);
    // Ideal gas with the gas constant written as k_B N_A; mu is the usual
    // dimensionless mean molecular weight.
    cv.T_c = mu * cv.P_c / (pc.k_B * pc.N_A * cv.rho_c);
    return cv;
}

PhysicalPoint physical_profiles(double x, const ModelParams& p,
                                const PhysicalConstants& pc,
                                const CentralValues& cv) {
    require_unit_interval(x, "physical_profiles");
    PhysicalPoint pt;
    pt.rho = cv.rho_c * f_density(x, p);
    pt.mass = pc.M_total * f_mass(x, p);
    pt.pressure = 9.0 / (4.0 * std::numbers::pi) * pc.G * pc.M_total * pc.M_total /
                  std::pow(pc.R_total, 4) * f_pressure(x, p);
    pt.temperature = 3.0 * cv.mu / (pc.k_B * pc.N_A) * pc.G *
                     (pc.M_total / pc.R_total) * f_temperature(x, p);
    return pt;
}

} // namespace sunstruct
