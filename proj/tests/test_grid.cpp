#include "doctest.h"

#include <sunstruct/grid.hpp>
#include <sunstruct/profiles.hpp>

#include <cmath>

using namespace sunstruct;

namespace {

TableRequest small_request(TableMode mode, int n = 33) {
    TableRequest req;
    req.mode = mode;
    req.grid_points = n;
    return req;
}

} // namespace

TEST_CASE("grid covers [0, x_max] with exact endpoints") {
    TableRequest req = small_request(TableMode::profiles);
    req.x_max = 0.8;
    const ProfileTable t = compute_table(req, false);
    REQUIRE(t.rows.size() == 33);
    CHECK(t.rows.front().x == 0.0);
    CHECK(t.rows.back().x == 0.8);
    for (size_t i = 1; i < t.rows.size(); ++i) {
        CHECK(t.rows[i].x > t.rows[i - 1].x);
    }
}

TEST_CASE("profiles mode carries no energy or luminosity columns") {
    const ProfileTable t = compute_table(small_request(TableMode::profiles), false);
    CHECK_FALSE(t.has_energy);
    CHECK_FALSE(t.has_luminosity);
    for (const auto& r : t.rows) {
        CHECK_FALSE(r.has_eps_direct);
        CHECK_FALSE(r.has_eps_expansion);
    }
}

TEST_CASE("profile columns run in the physical directions") {
    const ProfileTable t = compute_table(small_request(TableMode::profiles, 65), false);
    for (size_t i = 1; i < t.rows.size(); ++i) {
        CHECK(t.rows[i].f_D < t.rows[i - 1].f_D);
        CHECK(t.rows[i].f_P < t.rows[i - 1].f_P);
        // Non-strict: f_M saturates to 1.0 in double near the surface.
        CHECK(t.rows[i].f_M >= t.rows[i - 1].f_M);
    }
    CHECK(t.rows.front().f_M < t.rows.back().f_M);
    // Physical columns scale the dimensionless ones.
    const CentralValues cv = t.cv;
    CHECK(t.rows.front().rho == doctest::Approx(cv.rho_c).epsilon(1e-14));
    CHECK(t.rows.front().pressure == doctest::Approx(cv.P_c).epsilon(1e-14));
    CHECK(t.rows.front().temperature == doctest::Approx(cv.T_c).epsilon(1e-14));
    CHECK(t.rows.back().f_D == 0.0);
}

TEST_CASE("energy mode: direct column blank only at the surface") {
    const ProfileTable t = compute_table(small_request(TableMode::energy), false);
    REQUIRE(t.has_energy);
    CHECK_FALSE(t.has_luminosity);
    for (size_t i = 0; i + 1 < t.rows.size(); ++i) {
        CHECK(t.rows[i].has_eps_direct);
    }
    // m > n at defaults: the rate diverges at x = 1 and the cell is blank.
    CHECK_FALSE(t.rows.back().has_eps_direct);
}

TEST_CASE("expansion column honours the build radius") {
    TableRequest req = small_request(TableMode::energy);
    const ProfileTable t = compute_table(req, false);
    // x_max = 1 clamps the expansion radius to 0.9.
    CHECK(t.expansion_x_max == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(t.expansion_order > 0);
    CHECK(t.expansion_tail <= req.truncation_tol);
    for (const auto& r : t.rows) {
        if (r.x <= t.expansion_x_max * (1.0 + 1e-12)) {
            CHECK(r.has_eps_expansion);
            if (r.has_eps_direct && r.x <= 0.5) {
                CHECK(r.eps_expansion ==
                      doctest::Approx(r.eps_direct).epsilon(1e-6));
            }
        } else {
            CHECK_FALSE(r.has_eps_expansion);
        }
    }
}

TEST_CASE("tighter truncation tolerance raises the expansion order") {
    TableRequest loose = small_request(TableMode::energy, 9);
    loose.truncation_tol = 1e-6;
    TableRequest tight = small_request(TableMode::energy, 9);
    tight.truncation_tol = 1e-10;
    const ProfileTable a = compute_table(loose, false);
    const ProfileTable b = compute_table(tight, false);
    CHECK(b.expansion_order > a.expansion_order);
    CHECK(b.expansion_tail <= 1e-10);
}

TEST_CASE("luminosity mode normalises against the model total") {
    const ProfileTable t = compute_table(small_request(TableMode::all), false);
    REQUIRE(t.has_luminosity);
    CHECK(t.L_total > 0.0);
    // Monotone up to the series' relative accuracy: once the profile
    // saturates, successive values may dip by ~1e-13 of the total.
    double prev = -1.0;
    for (const auto& r : t.rows) {
        CHECK(r.L >= prev - 1e-12 * t.L_total);
        prev = r.L;
        CHECK(r.L_ratio == doctest::Approx(r.L / t.L_total).epsilon(1e-15));
    }
    CHECK(t.rows.front().L == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(t.rows.back().L_ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("parallel evaluation reproduces the serial table bit for bit") {
    TableRequest req = small_request(TableMode::all, 49);
    const ProfileTable serial = compute_table(req, false);
    const ProfileTable parallel = compute_table(req, true);
    REQUIRE(serial.rows.size() == parallel.rows.size());
    for (size_t i = 0; i < serial.rows.size(); ++i) {
        const ProfileRow& a = serial.rows[i];
        const ProfileRow& b = parallel.rows[i];
        CHECK(a.x == b.x);
        CHECK(a.f_D == b.f_D);
        CHECK(a.f_M == b.f_M);
        CHECK(a.f_P == b.f_P);
        CHECK(a.f_T == b.f_T);
        CHECK(a.rho == b.rho);
        CHECK(a.mass == b.mass);
        CHECK(a.pressure == b.pressure);
        CHECK(a.temperature == b.temperature);
        CHECK(a.has_eps_direct == b.has_eps_direct);
        CHECK(a.has_eps_expansion == b.has_eps_expansion);
        if (a.has_eps_direct) CHECK(a.eps_direct == b.eps_direct);
        if (a.has_eps_expansion) CHECK(a.eps_expansion == b.eps_expansion);
        CHECK(a.L == b.L);
        CHECK(a.L_ratio == b.L_ratio);
    }
    CHECK(serial.L_total == parallel.L_total);
}

TEST_CASE("request validation") {
    TableRequest req = small_request(TableMode::profiles);
    req.grid_points = 1;
    CHECK_THROWS_AS((void)compute_table(req, false), std::invalid_argument);
    req = small_request(TableMode::profiles);
    req.x_max = 0.0;
    CHECK_THROWS_AS((void)compute_table(req, false), std::invalid_argument);
    req = small_request(TableMode::profiles);
    req.x_max = 1.2;
    CHECK_THROWS_AS((void)compute_table(req, false), std::invalid_argument);
    req = small_request(TableMode::energy);
    req.truncation_tol = -1.0;
    CHECK_THROWS_AS((void)compute_table(req, false), std::invalid_argument);
}
