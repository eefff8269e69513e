#include <sunstruct/luminosity.hpp>

#include "mpseries.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sunstruct {

double luminosity_s_star(int s, int q, int multi_exponent, double delta) {
    return s + multi_exponent + (3.0 + 2.0 * q) / delta;
}

LuminosityTermSet build_luminosity_terms(const PowerTermExpansion& e,
                                         const ModelParams& p,
                                         const PhysicalConstants& pc,
                                         const CentralValues& cv) {
    p.validate();
    pc.validate();
    if (!e.backend) {
        throw std::invalid_argument("build_luminosity_terms: expansion has no backend");
    }

    LuminosityTermSet t;
    t.params = p;
    t.backend = e.backend;
    t.terms.reserve(e.terms.size());
    for (const auto& term : e.terms) {
        t.terms.push_back({term.coefficient,
                           luminosity_s_star(term.s, term.q, term.multi_exponent,
                                             p.delta)});
    }
    // 4 pi eps0 rho_c^(n+1) T_c^m R^3 / delta, assembled in log space: the
    // plain product overflows double for steep temperature exponents.
    double lg = std::log(4.0 * std::numbers::pi) + std::log(p.epsilon0) +
                (p.n_exp + 1.0) * std::log(cv.rho_c) +
                p.m_exp * std::log(cv.T_c) + 3.0 * std::log(pc.R_total) -
                std::log(p.delta);
    t.scale = std::exp(lg);
    return t;
}

double luminosity_profile(double x, const LuminosityTermSet& t) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error("luminosity_profile: x must lie in [0,1]");
    }
    if (!t.backend) {
        throw std::invalid_argument("luminosity_profile: term set has no backend");
    }
    if (x == 0.0) return 0.0;
    return t.scale * detail::eval_lum_profile_auto(*t.backend, x);
}

double total_luminosity(const LuminosityTermSet& t, const ModelParams& p) {
    p.validate();
    if (!t.backend) {
        throw std::invalid_argument("total_luminosity: term set has no backend");
    }
    return t.scale * detail::eval_lum_total_mp(*t.backend);
}

} // namespace sunstruct
