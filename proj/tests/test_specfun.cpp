#include "doctest.h"

#include <sunstruct/oracle.hpp>
#include <sunstruct/specfun.hpp>

#include <cmath>
#include <random>

using namespace sunstruct;

namespace {

double lgamma_ratio_at_one(double a, double b, double c) {
    // Gauss: 2F1(a,b;c;1) = G(c) G(c-a-b) / (G(c-a) G(c-b))
    return std::exp(std::lgamma(c) + std::lgamma(c - a - b) - std::lgamma(c - a) -
                    std::lgamma(c - b));
}

} // namespace

TEST_CASE("pochhammer small cases and addition law") {
    CHECK(pochhammer(3.0, 0) == 1.0);
    CHECK(pochhammer(3.0, 1) == 3.0);
    CHECK(pochhammer(3.0, 3) == doctest::Approx(60.0).epsilon(1e-15));
    CHECK(pochhammer(0.5, 2) == doctest::Approx(0.75).epsilon(1e-15));

    // (a)_{j+k} = (a)_j (a+j)_k
    const double as[] = {0.3, 1.7, 5.0, -0.25};
    for (double a : as) {
        for (int j = 0; j <= 4; ++j) {
            for (int k = 0; k <= 4; ++k) {
                const double lhs = pochhammer(a, j + k);
                const double rhs = pochhammer(a, j) * pochhammer(a + j, k);
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("pochhammer of a nonpositive integer vanishes past the zero") {
    CHECK(pochhammer(-3.0, 4) == 0.0);
    CHECK(pochhammer(-3.0, 7) == 0.0);
    // Snapping tolerance: 1e-10 away from -3 still counts as -3.
    CHECK(pochhammer(-3.0 + 1e-10, 5) == 0.0);
    // But only up to the zero factor.
    CHECK(pochhammer(-3.0, 3) == doctest::Approx(-6.0).epsilon(1e-15));
}

TEST_CASE("terminating 2F1 degenerate arguments") {
    CHECK(f21_terminating({0.0, 2.0, 3.0, 0.7}) == 1.0);
    CHECK(f21_terminating({-4.0, 2.0, 3.0, 0.0}) == 1.0);
    // 2F1(-1, b; c; z) = 1 - b z / c
    CHECK(f21_terminating({-1.0, 2.0, 3.0, 0.5}) ==
          doctest::Approx(1.0 - 2.0 * 0.5 / 3.0).epsilon(1e-15));
}

TEST_CASE("terminating 2F1 reduces to the binomial theorem when c = b") {
    // sum_k (-g)_k z^k / k! = (1 - z)^g
    for (int g = 1; g <= 12; ++g) {
        for (double z : {0.1, 0.37, 0.65, 0.99}) {
            const double lhs = f21_terminating({-double(g), 1.3, 1.3, z});
            const double rhs = std::pow(1.0 - z, g);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
        }
    }
}

TEST_CASE("terminating 2F1 rejects bad parameters") {
    CHECK_THROWS_AS((void)f21_terminating({-0.5, 1.0, 2.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS((void)f21_terminating({-65.0, 1.0, 2.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS((void)f21_terminating({-3.0, 1.0, 2.0, 1.5}), std::domain_error);
    CHECK_THROWS_AS((void)f21_terminating({-3.0, 1.0, 2.0, -0.1}), std::domain_error);
    // c + k walks through zero inside the sum
    CHECK_THROWS_AS((void)f21_terminating({-3.0, 1.0, -2.0, 0.5}), std::domain_error);
}

TEST_CASE("Gauss summation matches the series and the Gamma ratio") {
    std::mt19937 rng(0x5eedu);
    std::uniform_real_distribution<double> bdist(0.1, 4.0);
    std::uniform_real_distribution<double> udist(0.5, 3.0);
    std::uniform_int_distribution<int> gdist(1, 30);

    for (int draw = 0; draw < 200; ++draw) {
        const int g = gdist(rng);
        const double b = bdist(rng);
        const double c = b + udist(rng);  // keeps c - a - b = c - b + g > 0
        const double a = -double(g);

        const double series = f21_terminating({a, b, c, 1.0});
        const double closed = f21_at_one(a, b, c);
        const double gammas = lgamma_ratio_at_one(a, b, c);

        CHECK(closed == doctest::Approx(series).epsilon(1e-12));
        CHECK(closed == doctest::Approx(gammas).epsilon(1e-12));
    }
}

TEST_CASE("Gauss summation for noninteger a uses the Gamma ratio branch") {
    const double v = f21_at_one(-0.75, 0.5, 2.0);
    CHECK(v == doctest::Approx(lgamma_ratio_at_one(-0.75, 0.5, 2.0)).epsilon(1e-13));
}

TEST_CASE("incomplete beta: closed small cases") {
    // int_0^1 (1-v) dv = 1/2
    CHECK(incomplete_beta_poly(1, 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    // int_0^z dv with gamma = 1 removed by s: int_0^z (1-v) v^0 dv = z - z^2/2
    CHECK(incomplete_beta_poly(1, 1.0, 0.4) ==
          doctest::Approx(0.4 - 0.08).epsilon(1e-15));
    CHECK(incomplete_beta_poly(3, 2.5, 0.0) == 0.0);
}

TEST_CASE("incomplete beta agrees with quadrature off the easy range") {
    const int g = 10;
    const double s = 3.5;
    for (double z : {0.2, 0.55, 0.7, 0.95}) {
        QuadOptions opt;
        opt.abs_tol = 0.0;
        const QuadResult q = quad_integrate(
            [&](double v) { return std::pow(1.0 - v, g) * std::pow(v, s - 1.0); }, 0.0,
            z, opt);
        REQUIRE(q.converged);
        CHECK(incomplete_beta_poly(g, s, z) ==
              doctest::Approx(q.value).epsilon(1e-10));
    }
}

TEST_CASE("incomplete beta rejects out-of-contract parameters") {
    CHECK_THROWS_AS((void)incomplete_beta_poly(0, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS((void)incomplete_beta_poly(65, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS((void)incomplete_beta_poly(3, 0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS((void)incomplete_beta_poly(3, 1.0, 1.5), std::domain_error);
}

TEST_CASE("lower and upper incomplete-beta series partition the complete beta") {
    // The two series cover complementary subintervals, so their sum must
    // reproduce the complete integral, and the routed form must be
    // continuous across the handover point.
    for (int g : {1, 4, 10, 20}) {
        for (double s : {0.8, 2.34375, 7.0}) {
            const double full = to_double(detail::beta_complete_dd(g, s));
            for (double z : {0.45, 0.55, 0.62}) {
                const double lo = to_double(detail::ibeta_lower_dd(g, s, z));
                const double hi = to_double(detail::ibeta_upper_dd(g, s, z));
                CHECK(lo + hi == doctest::Approx(full).epsilon(1e-14));
            }
            const double below = to_double(detail::ibeta_routed_dd(g, s, 0.55 - 1e-9));
            const double above = to_double(detail::ibeta_routed_dd(g, s, 0.55 + 1e-9));
            CHECK(below == doctest::Approx(above).epsilon(1e-8));
        }
    }
}

TEST_CASE("complete beta product form matches lgamma") {
    for (int g : {1, 2, 7, 30}) {
        for (double s : {0.5, 1.0, 2.34375, 11.25}) {
            const double ref = std::exp(std::lgamma(s) + std::lgamma(g + 1.0) -
                                        std::lgamma(s + g + 1.0));
            CHECK(to_double(detail::beta_complete_dd(g, s)) ==
                  doctest::Approx(ref).epsilon(1e-13));
        }
    }
    // B(3, 2) = 1/12
    CHECK(to_double(detail::beta_complete_dd(1, 3.0)) ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-15));
}

TEST_CASE("incomplete beta at z = 1 equals the complete beta") {
    for (int g : {2, 9}) {
        for (double s : {1.5, 4.0}) {
            CHECK(incomplete_beta_poly(g, s, 1.0) ==
                  doctest::Approx(to_double(detail::beta_complete_dd(g, s)))
                      .epsilon(1e-14));
        }
    }
}
