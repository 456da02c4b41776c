#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "ulam/profile.hpp"

using namespace ulam;

namespace {
std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}
}  // namespace

TEST_CASE("ball profile evaluates the semicircle") {
    const ProfileBody ball = ProfileBody::ball(3);
    CHECK(ball.R1() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ball.R2() == doctest::Approx(1.0).epsilon(1e-15));
    for (double t : {-0.99, -0.6, -0.25, 0.0, 0.37, 0.708, 0.999}) {
        CHECK(ball.f(t) == doctest::Approx(std::sqrt(1 - t * t)).epsilon(1e-12));
    }
    CHECK(ball.fprime(0.5) == doctest::Approx(-0.5 / std::sqrt(0.75)).epsilon(1e-10));
    CHECK(ball.concavity_margin() > 0.45);
}

TEST_CASE("ball chart closed forms") {
    const ProfileBody ball = ProfileBody::ball(4);
    const Bump none;  // zero bump
    const SlopeChart c = chart_from_profile(ball, none, {0.0, 1.0, 2.0});
    CHECK(c.x[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.y[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.x[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(c.y[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(c.x[2] == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-12));
    // residual of the chart equations at the root
    CHECK(chart_residual(c, ball) < 1e-12);
    // derivatives match the closed form -s (1+s^2)^{-3/2}
    CHECK(c.yp[1] == doctest::Approx(-1.0 / std::pow(2.0, 1.5)).epsilon(1e-9));
    CHECK(c.xp[2] == doctest::Approx(-2.0 / std::pow(5.0, 1.5)).epsilon(1e-9));
}

TEST_CASE("identity assembly: ball chart back to the semicircle") {
    const ProfileBody ball = ProfileBody::ball(3);
    const Bump none;
    SlopeChart c = chart_from_profile(ball, none, linspace(0.85, 1.0, 257));
    const ProfileBody re = profile_from_charts(c, std::nullopt, 3, 0.0, 0.0);
    double worst = 0.0;
    for (double t : linspace(-0.999, 0.999, 401))
        worst = std::max(worst, std::abs(re.f(t) - std::sqrt(1 - t * t)));
    CHECK(worst < 1e-10);
}

TEST_CASE("chart round trip on the sampled nodes") {
    const ProfileBody ball = ProfileBody::ball(3);
    const Bump bump = make_bump(0.05, 1e-5, 8);
    const auto grid = linspace(0.85, 1.0, 513);
    SlopeChart c = chart_from_profile(ball, bump, grid);
    // with a bump the chart of the ball still satisfies its equations
    CHECK(chart_residual(c, ball) < 1e-12);

    // round trip: assemble a body from the chart, chart it again
    const ProfileBody body = profile_from_charts(c, std::nullopt, 3, 0.05, 1e-5);
    SlopeChart c2 = chart_from_profile(body, bump, grid);
    double worst = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
        worst = std::max(worst, std::abs(c.x[i] - c2.x[i]));
        worst = std::max(worst, std::abs(c.y[i] - c2.y[i]));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("tangent line through the tip is accepted as the endpoint") {
    const ProfileBody ball = ProfileBody::ball(3);
    const Bump none;
    const SlopeChart c = chart_from_profile(ball, none, {0.0});
    CHECK(c.x[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.xp[0] == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("concavity margin shrinks with amplitude but stays positive") {
    const ProfileBody ball = ProfileBody::ball(3);
    const auto grid = linspace(0.85, 1.0, 769);
    auto margin_for = [&](double A) {
        const Bump b = make_bump(0.05, A, 8);
        SlopeChart c = chart_from_profile(ball, b, grid);
        return profile_from_charts(c, std::nullopt, 3, 0.05, A)
            .concavity_margin();
    };
    const double m0 = ProfileBody::ball(3).concavity_margin();
    const double m1 = margin_for(1e-5);
    const double m2 = margin_for(2e-5);
    CHECK(m1 > 1e-6);
    CHECK(m2 > 1e-6);
    // doubling the amplitude must not flip the sign at working amplitudes
    CHECK(m2 > 0.0);
    CHECK(std::abs(m1 - m0) < 0.2);
}
