#include "doctest.h"

#include <sunstruct/oracle.hpp>
#include <sunstruct/profiles.hpp>

#include <cmath>

using namespace sunstruct;

namespace {

const ModelParams kDefaults{};
const Composition kComp{};
const PhysicalConstants kConsts{};

} // namespace

TEST_CASE("mean molecular weight of the standard mixture") {
    // 1 / (2 X + 3 Y / 4 + Z / 2) with X = 0.70, Y = 0.28, Z = 0.02
    CHECK(mean_molecular_weight(kComp) ==
          doctest::Approx(0.61728395061728403).epsilon(1e-15));
    // Pure ionized hydrogen: 1 / 2.
    CHECK(mean_molecular_weight({1.0, 0.0, 0.0}) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("density shape endpoints and regression point") {
    CHECK(f_density(0.0, kDefaults) == 1.0);
    CHECK(f_density(1.0, kDefaults) == 0.0);
    CHECK(f_density(0.1, kDefaults) ==
          doctest::Approx(0.58328450255600517).epsilon(1e-12));
    CHECK_THROWS_AS((void)f_density(-0.1, kDefaults), std::domain_error);
    CHECK_THROWS_AS((void)f_density(1.1, kDefaults), std::domain_error);
}

TEST_CASE("mass fraction endpoints, monotonicity, oracle agreement") {
    CHECK(f_mass(0.0, kDefaults) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(f_mass(1.0, kDefaults) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(f_mass(0.3, kDefaults) ==
          doctest::Approx(0.69153142286811464).epsilon(1e-12));

    double prev = -1.0;
    for (int i = 0; i <= 20; ++i) {
        const double cur = f_mass(i / 20.0, kDefaults);
        CHECK(cur > prev);
        prev = cur;
    }
    for (double x : {0.1, 0.3, 0.7}) {
        CHECK(f_mass(x, kDefaults) ==
              doctest::Approx(quad_mass_fraction(x, kDefaults)).epsilon(1e-9));
    }
}

TEST_CASE("pressure shape against its quadrature oracle") {
    CHECK(f_pressure(0.0, kDefaults) ==
          doctest::Approx(32.741650245300086).epsilon(1e-12));
    CHECK(f_pressure(1.0, kDefaults) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(f_pressure(0.2, kDefaults) ==
          doctest::Approx(quad_pressure_dimless(0.2, kDefaults)).epsilon(1e-8));

    double prev = f_pressure(0.0, kDefaults);
    for (int i = 1; i <= 20; ++i) {
        const double cur = f_pressure(i / 20.0, kDefaults);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("pressure kernel is continuous across its series-routing point") {
    // The kernel switches between the lower and complementary beta series
    // at z = 0.55; the profile must not feel the seam.
    const double x_seam = std::pow(0.55, 1.0 / kDefaults.delta);
    const double below = f_pressure(x_seam - 1e-7, kDefaults);
    const double above = f_pressure(x_seam + 1e-7, kDefaults);
    CHECK(below == doctest::Approx(above).epsilon(1e-5));
    // Tighter: both sides against quadrature.
    CHECK(f_pressure(x_seam + 1e-7, kDefaults) ==
          doctest::Approx(quad_pressure_dimless(x_seam + 1e-7, kDefaults))
              .epsilon(1e-8));
}

TEST_CASE("temperature shape and the surface guard") {
    CHECK(f_temperature(0.0, kDefaults) ==
          doctest::Approx(0.29099841827413203).epsilon(1e-12));
    // The density cusp at the origin (delta < 2) pushes the temperature
    // maximum slightly off center.
    CHECK(f_temperature(0.05, kDefaults) > f_temperature(0.0, kDefaults));
    CHECK(f_temperature(1.0, kDefaults) == 0.0);
    // Inside the guard band the 0/0 ratio is replaced by its one-sided
    // linear limit: positive, vanishing only at the surface itself.
    const double in_band = f_temperature(1.0 - 9e-7, kDefaults);
    CHECK(in_band > 0.0);
    CHECK(in_band < 1e-6);
    // The substitute joins the exact branch to first order in 1 - x.
    const double outside = f_temperature(1.0 - 2e-6, kDefaults);
    CHECK(std::abs(in_band / (outside * (9e-7 / 2e-6)) - 1.0) < 1e-4);
}

TEST_CASE("ideal-gas identity ties the three shape functions together") {
    const double pref = mass_prefactor(kDefaults);
    for (double x : {0.05, 0.3, 0.55, 0.8, 0.95}) {
        const double lhs = f_pressure(x, kDefaults);
        const double rhs = pref * f_temperature(x, kDefaults) * f_density(x, kDefaults);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("central-pressure sum eta") {
    // gamma = 1, delta = 1 collapses to an elementary integral: 5/144.
    ModelParams p11;
    p11.gamma = 1;
    p11.delta = 1.0;
    CHECK(eta(p11) == doctest::Approx(5.0 / 144.0).epsilon(1e-14));

    // Defaults, frozen.
    CHECK(eta(kDefaults) == doctest::Approx(4.2374114044911690e-3).epsilon(1e-13));

    // f_P(0) = pref^2 eta / delta^2 links eta to the pressure shape.
    const double pref = mass_prefactor(kDefaults);
    CHECK(eta(kDefaults) ==
          doctest::Approx(f_pressure(0.0, kDefaults) * kDefaults.delta *
                          kDefaults.delta / (pref * pref))
              .epsilon(1e-12));

    // And through the oracle, with no hypergeometric machinery at all.
    CHECK(eta(kDefaults) ==
          doctest::Approx(quad_pressure_dimless(0.0, kDefaults) * kDefaults.delta *
                          kDefaults.delta / (pref * pref))
              .epsilon(1e-8));
}

TEST_CASE("mass prefactor closed cases") {
    ModelParams p11;
    p11.gamma = 1;
    p11.delta = 1.0;
    // (3/delta + 1)_gamma / gamma! = (4)_1 / 1! = 4.
    CHECK(mass_prefactor(p11) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(mass_prefactor(kDefaults) ==
          doctest::Approx(112.51487358414492).epsilon(1e-13));
}

TEST_CASE("central values and the gas-law closure between them") {
    const CentralValues cv = central_values(kDefaults, kConsts, kComp);

    // rho_c = pref * (3 M / 4 pi R^3), assembled from the raw constants.
    const double mean_rho =
        3.0 * kConsts.M_total /
        (4.0 * M_PI * kConsts.R_total * kConsts.R_total * kConsts.R_total);
    CHECK(cv.rho_c == doctest::Approx(mass_prefactor(kDefaults) * mean_rho)
                          .epsilon(1e-13));
    CHECK(cv.rho_c == doctest::Approx(158470.4762365151).epsilon(1e-12));
    CHECK(cv.T_c == doctest::Approx(12362006350.737337).epsilon(1e-12));
    CHECK(cv.P_c == doctest::Approx(2.6386787831415388e16).epsilon(1e-12));
    CHECK(cv.eta_gamma == doctest::Approx(eta(kDefaults)).epsilon(1e-15));

    // P_c = rho_c k_B N_A T_c / mu.
    const double gas = cv.rho_c * kConsts.k_B * kConsts.N_A * cv.T_c / cv.mu;
    CHECK(cv.P_c == doctest::Approx(gas).epsilon(1e-12));
}

TEST_CASE("physical profiles hit the central and surface boundary values") {
    const CentralValues cv = central_values(kDefaults, kConsts, kComp);

    const PhysicalPoint center = physical_profiles(0.0, kDefaults, kConsts, cv);
    CHECK(center.rho == doctest::Approx(cv.rho_c).epsilon(1e-14));
    CHECK(center.mass == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(center.pressure == doctest::Approx(cv.P_c).epsilon(1e-14));
    CHECK(center.temperature == doctest::Approx(cv.T_c).epsilon(1e-14));

    const PhysicalPoint surface = physical_profiles(1.0, kDefaults, kConsts, cv);
    CHECK(surface.rho == 0.0);
    CHECK(surface.mass == doctest::Approx(kConsts.M_total).epsilon(1e-12));
    CHECK(surface.pressure == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(surface.temperature == 0.0);

    const PhysicalPoint mid = physical_profiles(0.5, kDefaults, kConsts, cv);
    CHECK(mid.rho == doctest::Approx(cv.rho_c * f_density(0.5, kDefaults))
                         .epsilon(1e-14));
    CHECK(mid.temperature > 0.0);
    CHECK(mid.temperature < cv.T_c);
}

TEST_CASE("parameter validation rejects out-of-contract models") {
    ModelParams p = kDefaults;
    p.gamma = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = kDefaults;
    p.delta = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = kDefaults;
    p.m_exp = 0;  // below n_exp = 1
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);

    Composition c = kComp;
    c.Z = 0.5;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}
