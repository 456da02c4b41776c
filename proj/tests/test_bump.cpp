#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ulam/bump.hpp"
#include "ulam/errors.hpp"

using namespace ulam;

TEST_CASE("peak normalization at the support midpoint") {
    const Bump h = make_bump(0.05, 1e-4, 8);
    const double mid = 1.0 - 1.5 * 0.05;
    CHECK(h(mid) == doctest::Approx(1e-4).epsilon(1e-15));
    CHECK(h.derivative(mid, 1) == doctest::Approx(0.0).epsilon(1e-18));
}

TEST_CASE("exact zero outside the support, including derivatives") {
    const Bump h = make_bump(0.05, 1e-4, 8);
    CHECK(h(1.0 - 0.05) == 0.0);
    CHECK(h.derivative(1.0 - 0.05, 1) == 0.0);
    CHECK(h(0.5) == 0.0);
    CHECK(h.derivative(1.0, 3) == 0.0);
    CHECK(h(1.0 - 2 * 0.05) == 0.0);
}

TEST_CASE("closed form cross-check in extended precision") {
    const double tau = 0.05, A = 1e-4;
    const Bump h = make_bump(tau, A, 8);
    const double s = 0.925;  // the support midpoint for tau = 0.05
    const long double mid = 1.0L - 1.5L * 0.05L;
    const long double halfwidth = 0.05L / 2.0L;
    const long double u = (static_cast<long double>(s) - mid) / halfwidth;
    const long double ref =
        static_cast<long double>(A) * expl(1.0L) * expl(-1.0L / (1.0L - u * u));
    CHECK(h(s) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-14));

    // an off-peak point as well
    const double s2 = 0.91;
    const long double u2 = (static_cast<long double>(s2) - mid) / halfwidth;
    const long double ref2 =
        static_cast<long double>(A) * expl(1.0L) * expl(-1.0L / (1.0L - u2 * u2));
    CHECK(h(s2) == doctest::Approx(static_cast<double>(ref2)).epsilon(1e-13));
}

TEST_CASE("jet derivatives agree with finite differences") {
    const Bump h = make_bump(0.05, 1e-4, 8);
    const double s = 0.915;
    const double step = 1e-4;
    const double fd1 = (h(s + step) - h(s - step)) / (2 * step);
    CHECK(h.derivative(s, 1) == doctest::Approx(fd1).epsilon(1e-6));
    const double fd2 = (h(s + step) - 2 * h(s) + h(s - step)) / (step * step);
    CHECK(h.derivative(s, 2) == doctest::Approx(fd2).epsilon(1e-5));
}

TEST_CASE("asymmetry requires a nonvanishing first derivative") {
    const Bump h = make_bump(0.05, 1e-4, 8);
    CHECK(h.max_abs_derivative(1) > 0.0);
    CHECK(h.ck_norm(2) > h.ck_norm(1));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(make_bump(0.3, 1e-4, 8), ParameterError);
    CHECK_THROWS_AS(make_bump(0.05, 0.0, 8), ParameterError);
    CHECK_THROWS_AS(make_bump(-0.01, 1e-4, 8), ParameterError);
}
