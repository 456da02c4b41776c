#pragma once

#include <array>
#include <functional>
#include <vector>

#include "ulam/bump.hpp"
#include "ulam/profile.hpp"

namespace ulam {

using Vec4 = std::array<double, 4>;

/// Z_o(s): the unit-ball chart state (x_o, y_o, x_o', y_o').
Vec4 ball_state(double s);

/// The backward system for even dimension d = 2n, obtained by
/// differentiating the volume-moment condition n+1 times and the section
/// centroid condition n times in the slope and rewriting the moving-limit
/// integrals as Volterra integrals over [s, 1]:
///     G(s, Z(s)) = int_s^1 Theta(s, sigma, Z(sigma)) dsigma + Xi(s).
/// High-order slope derivatives are evaluated with Taylor jets.
class EvenSystem {
public:
    EvenSystem(int dim, const Bump& bump);

    int dim() const { return dim_; }
    int order() const { return n_; }
    const Bump& bump() const { return bump_; }
    double const_ijn() const { return const_; }
    double s_lo() const { return 1.0 - 3.0 * bump_.tau(); }

    Vec4 G(double s, const Vec4& Z) const;
    Vec4 Theta(double s, double sigma, const Vec4& Zsigma) const;
    Vec4 Xi(double s) const;

    /// 2x2 block dG(3,4)/d(x',y'), row-major {a11,a12,a21,a22}.
    std::array<double, 4> jacobian_A(double s, double x, double y) const;

    /// Residual of the full system at slope s given a chart state function,
    /// with the Volterra integral done adaptively (test/diagnostic path).
    Vec4 residual(double s, const std::function<Vec4(double)>& Zfun) const;

private:
    int dim_, n_;
    Bump bump_;
    double const_;
    int len_;  // jet length n+2

    double row3_kernel(double s, double sigma_t, double C) const;
    double row4_kernel(double s, double sigma_t, double C) const;
};

EvenSystem assemble_even_system(int dim, const Bump& bump);

/// Marched chart state on a descending slope grid.
struct StateZ {
    std::vector<double> s;   // descending, s.front() == 1
    std::vector<Vec4> Z;
    double max_dev_ball = 0.0;      // ||Z - Z_o|| over the whole grid
    double max_dev_tail = 0.0;      // ||Z - Z_o|| on [1-tau, 1]
    double max_newton_residual = 0.0;
};

/// Newton-marches the system backward from Z(1) = Z_o(1); the Volterra
/// integral uses composite Simpson over already-computed nodes. Throws
/// ConstructionError on Newton failure or near-singular Jacobian.
StateZ march_backward(const EvenSystem& sys, const std::vector<double>& s_grid);

struct ReturnReport {
    double max_chart_deviation = 0.0;  // vs the ball chart on [1-3t, 1-2t]
    double max_evenmom_residual = 0.0;
    double max_oddk_residual = 0.0;
};

/// Verifies that the marched solution returns to the semicircle below the
/// bump support, with the two closed-form moment identities (order n) as
/// the mechanism check.
ReturnReport check_return_to_circle(const StateZ& state, double tau, int n);

struct EvenBuild {
    ProfileBody body;
    SlopeChart chart;
    StateZ state;
    Bump bump;
    double amplitude = 0.0;
    double concavity = 0.0;
    double grid_doubling_dev = 0.0;
    double devenm_residual = 0.0;
    ReturnReport ret;
    int backoff_steps = 0;
};

/// Full pipeline. When auto_amplitude is set the starting amplitude is
/// halved until the march converges, the solution returns to the circle,
/// and the assembled profile is strictly concave with margin > 1e-6.
EvenBuild build_even_body(int dim, double tau, double amplitude,
                          bool auto_amplitude, int grid_n = 2048);

/// Uniform descending grid on [1-3tau, 1] with grid_n intervals.
std::vector<double> even_march_grid(double tau, int grid_n);

}  // namespace ulam
