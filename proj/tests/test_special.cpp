#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ulam/quadrature.hpp"
#include "ulam/special.hpp"

using namespace ulam;

TEST_CASE("ball volumes and sphere areas") {
    CHECK(ball_volume(1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(ball_volume(2) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(ball_volume(3) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-15));
    CHECK(sphere_area(1) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
    CHECK(sphere_area(2) == doctest::Approx(4.0 * kPi).epsilon(1e-15));
    CHECK(sphere_area(0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("coordinate second moment and the d gamma = kappa identity") {
    // gamma_1 = int_{-1}^{1} p^2 dp = 2/3
    CHECK(coordinate_second_moment(1) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    // d * gamma_{d-2} = kappa_{d-2} for the dimensions in play
    for (int d = 3; d <= 8; ++d) {
        CHECK(d * coordinate_second_moment(d - 2) ==
              doctest::Approx(ball_volume(d - 2)).epsilon(1e-14));
    }
}

TEST_CASE("cap fraction against direct quadrature") {
    for (int m : {2, 3, 4}) {
        for (double c : {-0.8, -0.3, 0.0, 0.25, 0.9}) {
            const double denom = integrate_gl(
                [&](double u) { return std::pow(1.0 - u * u, 0.5 * (m - 1)); },
                -1.0, 1.0, 64);
            const double num = integrate_gl(
                [&](double u) { return std::pow(1.0 - u * u, 0.5 * (m - 1)); },
                -1.0, c, 64);
            CHECK(ball_cap_fraction(m, c) ==
                  doctest::Approx(num / denom).epsilon(1e-9));
        }
    }
}

TEST_CASE("cap coordinate moment closed form") {
    const int m = 3;
    const double c = 0.4;
    const double direct = integrate_gl(
        [&](double u) {
            return u * ball_volume(m - 1) * std::pow(1.0 - u * u, 0.5 * (m - 1));
        },
        -1.0, c, 96);
    CHECK(ball_cap_coordinate_moment(m, c) ==
          doctest::Approx(direct).epsilon(1e-11));
}

TEST_CASE("symmetric power integral") {
    CHECK(symmetric_power_integral(2.0) ==
          doctest::Approx(16.0 / 15.0).epsilon(1e-14));
    CHECK(symmetric_power_integral(1.5) ==
          doctest::Approx(3.0 * kPi / 8.0).epsilon(1e-14));
    CHECK(symmetric_power_integral(0.5) ==
          doctest::Approx(kPi / 2.0).epsilon(1e-14));
}
