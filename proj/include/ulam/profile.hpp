#pragma once

#include <optional>
#include <vector>

#include "ulam/bump.hpp"

namespace ulam {

/// Cubic Hermite interpolant on a uniform grid (value + first derivative
/// at every node). Evaluation is exact for data sampled from a constant.
class HermiteSpline {
public:
    HermiteSpline() = default;
    HermiteSpline(double lo, double hi, std::vector<double> value,
                  std::vector<double> slope);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double operator()(double u) const;
    double derivative(double u) const;

private:
    double lo_ = 0.0, hi_ = 1.0, du_ = 1.0;
    std::vector<double> v_, d_;
};

/// Polar chart of a body of revolution: right radius R(alpha) and left
/// radius r(alpha) sampled on a grid of polar angles alpha in [0, pi/2],
/// where the boundary point at angle alpha on the right is
/// (R cos a, R sin a) in the profile plane and (-r cos a, r sin a) on the
/// left. Derivative columns are optional (rebuilt by finite differences
/// when absent, e.g. after JSON round trips).
struct PolarChart {
    std::vector<double> alpha;
    std::vector<double> R, r;
    std::vector<double> dR, dr;  // dR/dalpha, dr/dalpha; may be empty
};

/// Body of revolution about the x1-axis with a strictly concave profile f
/// on [-R1, R2]. Internally the boundary is stored as the two polar-radius
/// splines of PolarChart on a uniform angle grid; this parametrization is
/// smooth through the profile tips where f itself has square-root
/// behavior.
class ProfileBody {
public:
    ProfileBody() = default;

    static ProfileBody ball(int dim);
    static ProfileBody from_polar(int dim, const PolarChart& chart,
                                  double tau, double amplitude);

    int dim() const { return dim_; }
    double tau() const { return tau_; }
    double amplitude() const { return amplitude_; }
    double R1() const { return left_(0.0); }   // left support end (t = -R1)
    double R2() const { return right_(0.0); }  // right support end

    double f(double t) const;
    double fprime(double t) const;

    /// Radial function: radius at polar angle alpha in [0, pi/2];
    /// side +1 means the half-space {x1 > 0}, -1 the other.
    double radial(int side, double alpha) const;
    double radial_derivative(int side, double alpha) const;

    /// Polar chart resampled on the internal uniform grid.
    PolarChart polar_chart() const;

    /// Profile samples [(t, f)] on the angle-induced grid, t ascending.
    std::vector<std::pair<double, double>> profile_samples() const;

    /// Strict-concavity margin: min over interior node triples of minus
    /// the second divided difference of f. Positive for convex bodies.
    double concavity_margin() const;

private:
    int dim_ = 3;
    double tau_ = 0.0, amplitude_ = 0.0;
    HermiteSpline right_, left_;

    double invert_abscissa(const HermiteSpline& sp, double target) const;
};

/// Slope chart of a body: intersection abscissae x(s) > 0, y(s) > 0 of the
/// cutting line t -> s t + h(s) with the lower and upper profile graphs,
///   f(y(s)) = s y(s) + h(s),      f(-x(s)) = s x(s) - h(s),
/// together with their s-derivatives. Outside the sampled range the chart
/// evaluates the unit-ball closed form x = y = 1/sqrt(1+s^2).
struct SlopeChart {
    std::vector<double> s, x, y, xp, yp;  // ascending in s
    Bump bump;

    double eval_x(double slope) const;
    double eval_y(double slope) const;
    double eval_xp(double slope) const;
    double eval_yp(double slope) const;
};

/// Solves the chart equations per grid node by safeguarded root-finding on
/// the body profile; derivatives by implicit differentiation.
SlopeChart chart_from_profile(const ProfileBody& body, const Bump& bump,
                              const std::vector<double>& s_grid);

/// Assembles a ProfileBody from a slope chart and, when present, a polar
/// chart for the low-angle part of the boundary. Angles at or above the
/// chart's sampled range use the unit-ball closed form. `polar_seam_tan`
/// is the slope below which the polar chart takes precedence.
ProfileBody profile_from_charts(const SlopeChart& chart,
                                const std::optional<PolarChart>& polar,
                                int dim, double tau, double amplitude,
                                double polar_seam_tan = 0.0);

/// max over chart nodes of the defxy residuals against the body profile.
double chart_residual(const SlopeChart& chart, const ProfileBody& body);

/// Unit-ball closed forms.
inline double ball_chart(double s) { return 1.0 / std::sqrt(1.0 + s * s); }
inline double ball_chart_derivative(double s) {
    return -s / std::pow(1.0 + s * s, 1.5);
}

}  // namespace ulam
