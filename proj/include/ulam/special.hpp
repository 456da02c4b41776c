#pragma once

namespace ulam {

inline constexpr double kPi = 3.14159265358979323846;

/// Volume of the unit m-ball, kappa_m = pi^(m/2)/Gamma(m/2+1).
double ball_volume(int m);

/// Surface area of the unit m-sphere S^m in R^(m+1).
double sphere_area(int m);

/// gamma_m = int_{B^m} p_j^2 dp = kappa_m/(m+2)  (any fixed coordinate j).
double coordinate_second_moment(int m);

/// Regularized incomplete beta I_x(a,b).
double betainc_reg(double a, double b, double x);

/// Volume fraction of the unit m-ball lying in {coordinate <= c}, c in [-1,1].
double ball_cap_fraction(int m, double c);

/// Integral of the coordinate over the same region of the unit m-ball,
/// int_{B^m cap {p_m <= c}} p_m dp = -kappa_{m-1} (1-c^2)^((m+1)/2) / (m+1).
double ball_cap_coordinate_moment(int m, double c);

/// int_{-1}^{1} (1-u^2)^p du for real p > -1.
double symmetric_power_integral(double p);

}  // namespace ulam
