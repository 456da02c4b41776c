#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace ulam {

/// Gauss-Legendre nodes and weights on [-1,1], cached per order.
const std::vector<double>& gl_nodes(int n);
const std::vector<double>& gl_weights(int n);

/// Fixed-order Gauss-Legendre on [a,b].
template <class F>
double integrate_gl(F&& f, double a, double b, int n) {
    const auto& x = gl_nodes(n);
    const auto& w = gl_weights(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += w[i] * f(mid + half * x[i]);
    return s * half;
}

/// Adaptive Gauss-Kronrod 7-15 with interval bisection.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol = 1e-12,
                          double abs_tol = 1e-14, int max_depth = 48);

/// Integral of f over [a,b] where the integrand behaves like
/// (t-a)^(p/2) and (b-t)^(p/2) at the ends (half-integer powers).
/// Substitutes t = a + v^2 / t = b - v^2 on the two halves, which makes
/// the integrand smooth, then integrates adaptively.
double integrate_sqrt_endpoints(const std::function<double(double)>& f,
                                double a, double b, double rel_tol = 1e-12,
                                double abs_tol = 1e-14);

/// Gauss-Chebyshev approximation of int_0^1 f(u)/sqrt(u(1-u)) du.
template <class F>
double integrate_chebyshev01(F&& f, int n) {
    // nodes u_i = (1+cos theta_i)/2 with theta_i = (2i-1)pi/(2n), weight pi/n
    static const double kPi = 3.14159265358979323846;
    double s = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double th = (2 * i - 1) * kPi / (2 * n);
        s += f(0.5 * (1.0 + std::cos(th)));
    }
    return s * kPi / n;
}

}  // namespace ulam
