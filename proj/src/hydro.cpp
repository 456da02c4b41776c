#include "ulam/hydro.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ulam/errors.hpp"
#include "ulam/quadrature.hpp"
#include "ulam/special.hpp"

namespace ulam {

namespace {

// Integrate w(u) du over the full profile, parameterized by the polar
// angle on each side so the integrand stays smooth through the tips.
// fn(u, f) is the per-slice weight.
template <class F>
double axis_integral(const ProfileBody& body, F&& fn, double rel_tol = 1e-12) {
    auto side = [&](int sgn) {
        auto g = [&](double a) {
            const double R = body.radial(sgn, a);
            const double dR = body.radial_derivative(sgn, a);
            const double f = R * std::sin(a);
            const double du = R * std::sin(a) - dR * std::cos(a);
            const double u = sgn >= 0 ? R * std::cos(a) : -R * std::cos(a);
            return fn(u, f) * du;
        };
        return integrate_adaptive(g, 0.0, 0.5 * kPi, rel_tol, 1e-15);
    };
    return side(+1) + side(-1);
}

}  // namespace

double body_volume(const ProfileBody& body) {
    const double kd1 = ball_volume(body.dim() - 1);
    return axis_integral(body, [&](double, double f) {
        return kd1 * std::pow(f, body.dim() - 1);
    });
}

double body_centroid_x1(const ProfileBody& body) {
    const double kd1 = ball_volume(body.dim() - 1);
    const double num = axis_integral(body, [&](double u, double f) {
        return kd1 * u * std::pow(f, body.dim() - 1);
    });
    return num / body_volume(body);
}

double volume_below(const ProfileBody& body, const CutPlane& plane) {
    const int d = body.dim();
    const double kd1 = ball_volume(d - 1);
    const double xi1 = plane.xi1, xid = plane.xid, t = plane.t;
    if (xid == 0.0) {
        // vertical plane: slices included iff u on the correct side
        const double u0 = t / xi1;
        return axis_integral(body, [&](double u, double f) {
            const bool in = xi1 > 0 ? (u <= u0) : (u >= u0);
            return in ? kd1 * std::pow(f, d - 1) : 0.0;
        });
    }
    return axis_integral(body, [&](double u, double f) {
        if (f <= 0.0) return 0.0;
        double c = (t - xi1 * u) / (xid * f);
        if (xid < 0.0) c = -c;  // region flips to {x_d >= ...}
        double frac = ball_cap_fraction(d - 1, c);
        if (xid < 0.0) frac = 1.0 - frac;
        return kd1 * std::pow(f, d - 1) * frac;
    });
}

namespace {

// In-plane section geometry: along the unit direction iota orthogonal to
// xi inside the x1-xd plane, the point at in-plane coordinate w is
// x1(w) = t xi1 - w xid, xd(w) = t xid + w xi1, and the slice there is a
// (d-2)-ball of squared radius g(w) = f(x1)^2 - xd^2.
struct SectionFrame {
    const ProfileBody* body;
    double xi1, xid, t;

    double x1(double w) const { return t * xi1 - w * xid; }
    double xd(double w) const { return t * xid + w * xi1; }
    double g(double w) const {
        const double u = x1(w);
        if (u < -body->R1() || u > body->R2()) return -1.0;
        const double f = body->f(u);
        const double z = xd(w);
        return f * f - z * z;
    }
};

// The set {g > 0} is an interval by convexity; locate it by coarse scan
// plus bisection.
std::pair<double, double> section_extent(const SectionFrame& fr) {
    const double R1 = fr.body->R1(), R2 = fr.body->R2();
    const double wspan = std::hypot(R1 + R2, 2.0 * std::max(R1, R2)) + 1.0;
    const int n = 512;
    double best_w = 0.0, best_g = -1.0;
    for (int i = 0; i <= n; ++i) {
        const double w = -wspan + 2.0 * wspan * i / n;
        const double g = fr.g(w);
        if (g > best_g) {
            best_g = g;
            best_w = w;
        }
    }
    if (best_g <= 0.0)
        throw GeometryError("section_extent: plane misses the body interior");
    auto bisect = [&](double inside, double outside) {
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (inside + outside);
            if (fr.g(mid) > 0.0)
                inside = mid;
            else
                outside = mid;
            if (std::abs(outside - inside) < 1e-14) break;
        }
        return 0.5 * (inside + outside);
    };
    const double w_lo = bisect(best_w, best_w - 2.0 * wspan);
    const double w_hi = bisect(best_w, best_w + 2.0 * wspan);
    return {w_lo, w_hi};
}

}  // namespace

double section_area(const ProfileBody& body, const CutPlane& plane) {
    const int d = body.dim();
    SectionFrame fr{&body, plane.xi1, plane.xid, plane.t};
    const auto [w_lo, w_hi] = section_extent(fr);
    const double p = 0.5 * (d - 2);
    auto integrand = [&](double w) {
        const double g = fr.g(w);
        return g > 0.0 ? std::pow(g, p) : 0.0;
    };
    return ball_volume(d - 2) *
           integrate_sqrt_endpoints(integrand, w_lo, w_hi, 1e-12, 1e-15);
}

CutPlane cut_at_volume(const ProfileBody& body, double beta, double delta,
                       double rel_tol) {
    const double vol = body_volume(body);
    if (!(delta > 0.0 && delta < vol))
        throw ParameterError("cut_at_volume: delta outside (0, vol)");
    const double xi1 = std::cos(beta), xid = std::sin(beta);

    // support range of p.xi over the body
    double t_min = 1e300, t_max = -1e300;
    const int n = 1024;
    for (int i = 0; i <= n; ++i) {
        const double a = 0.5 * kPi * i / n;
        for (int sgn : {+1, -1}) {
            const double R = body.radial(sgn, a);
            const double u = sgn * R * std::cos(a), f = R * std::sin(a);
            const double lo = u * xi1 - f * std::abs(xid);
            const double hi = u * xi1 + f * std::abs(xid);
            t_min = std::min(t_min, lo);
            t_max = std::max(t_max, hi);
        }
    }

    CutPlane plane{xi1, xid, 0.0};
    double lo = t_min, hi = t_max;
    double t = 0.5 * (lo + hi);
    const double tol = rel_tol * vol;
    for (int it = 0; it < 200; ++it) {
        plane.t = t;
        const double v = volume_below(body, plane) - delta;
        if (std::abs(v) < tol) return plane;
        if (v < 0)
            lo = t;
        else
            hi = t;
        double next = 0.5 * (lo + hi);
        if (it >= 4) {
            // Newton refinement with the section area as the derivative
            const double a = section_area(body, plane);
            if (a > 0.0) {
                const double nt = t - v / a;
                if (nt > lo && nt < hi) next = nt;
            }
        }
        t = next;
    }
    throw NumericalError("cut_at_volume: bisection did not converge");
}

SectionMoments section_centroid_and_moments(const ProfileBody& body,
                                            const CutPlane& plane) {
    if (!plane.has_slope_form())
        throw GeometryError(
            "section_centroid_and_moments: plane has no slope form");
    const int d = body.dim();
    const double s = plane.slope(), c = plane.offset();
    const double p = 0.5 * (d - 2);

    // positivity interval of f(t)^2 - (s t + c)^2 along the axis
    SectionFrame fr{&body, plane.xi1, plane.xid, plane.t};
    const auto [w_lo, w_hi] = section_extent(fr);
    double t_lo = fr.x1(w_lo), t_hi = fr.x1(w_hi);
    if (t_lo > t_hi) std::swap(t_lo, t_hi);

    auto weight = [&](double t) {
        const double f = body.f(t);
        const double L = s * t + c;
        const double g = f * f - L * L;
        return g > 0.0 ? std::pow(g, p) : 0.0;
    };

    const double m0 = integrate_sqrt_endpoints(weight, t_lo, t_hi, 1e-13, 1e-300);
    if (m0 <= 0.0)
        throw GeometryError("section_centroid_and_moments: empty section");
    const double floor1 = 1e-15 * m0 * (std::abs(t_lo) + std::abs(t_hi) + 1.0);
    const double m1 = integrate_sqrt_endpoints(
        [&](double t) { return t * weight(t); }, t_lo, t_hi, 1e-13, floor1);
    const double tbar = m1 / m0;

    SectionMoments out;
    out.kappa = ball_volume(d - 2);
    out.gamma = coordinate_second_moment(d - 2);
    out.centroid_first = tbar;
    const double one_s2 = 1.0 + s * s;
    out.area = out.kappa * std::sqrt(one_s2) * m0;
    out.I1 = out.kappa * std::pow(one_s2, 1.5) *
             integrate_sqrt_endpoints(
                 [&](double t) { return (t - tbar) * (t - tbar) * weight(t); },
                 t_lo, t_hi, 1e-12, 1e-300);
    out.Iperp = out.gamma * std::sqrt(one_s2) *
                integrate_sqrt_endpoints(
                    [&](double t) {
                        const double f = body.f(t);
                        const double L = s * t + c;
                        const double g = f * f - L * L;
                        return g > 0.0 ? std::pow(g, 0.5 * d) : 0.0;
                    },
                    t_lo, t_hi, 1e-12, 1e-300);
    return out;
}

SectionMoments section_moments_intrinsic(const ProfileBody& body,
                                         const CutPlane& plane, int n_quad) {
    const int d = body.dim();
    SectionFrame fr{&body, plane.xi1, plane.xid, plane.t};
    const auto [w_lo, w_hi] = section_extent(fr);
    const double om = sphere_area(d - 3);  // |S^{d-3}| boundary of the slice

    // slice mass and second moment by explicit radial quadrature
    auto slice_mass = [&](double w) {
        const double g = fr.g(w);
        if (g <= 0.0) return 0.0;
        const double rad = std::sqrt(g);
        return integrate_gl(
            [&](double rho) { return om * std::pow(rho, d - 3); }, 0.0, rad,
            n_quad / 2);
    };
    auto slice_perp_moment = [&](double w) {
        const double g = fr.g(w);
        if (g <= 0.0) return 0.0;
        const double rad = std::sqrt(g);
        return integrate_gl(
            [&](double rho) {
                return om * std::pow(rho, d - 3) * rho * rho / (d - 2);
            },
            0.0, rad, n_quad / 2);
    };

    const double m0 =
        integrate_sqrt_endpoints(slice_mass, w_lo, w_hi, 1e-12, 1e-300);
    if (m0 <= 0.0)
        throw GeometryError("section_moments_intrinsic: empty section");
    const double floorw = 1e-15 * m0 * (std::abs(w_lo) + std::abs(w_hi) + 1.0);
    const double m1 = integrate_sqrt_endpoints(
        [&](double w) { return w * slice_mass(w); }, w_lo, w_hi, 1e-12, floorw);
    const double wbar = m1 / m0;

    SectionMoments out;
    out.kappa = ball_volume(d - 2);
    out.gamma = coordinate_second_moment(d - 2);
    out.area = m0;
    out.centroid_first = fr.x1(wbar);
    out.I1 = integrate_sqrt_endpoints(
        [&](double w) { return (w - wbar) * (w - wbar) * slice_mass(w); }, w_lo,
        w_hi, 1e-12, 1e-300);
    out.Iperp = integrate_sqrt_endpoints(slice_perp_moment, w_lo, w_hi, 1e-12,
                                         1e-300);
    return out;
}

std::pair<double, double> submerged_centroid(const ProfileBody& body,
                                             const CutPlane& plane) {
    const int d = body.dim();
    const double v = volume_below(body, plane);
    const double vol = body_volume(body);
    if (!(v > 1e-12 * vol) || !(v < vol * (1.0 + 1e-12)))
        throw GeometryError("submerged_centroid: degenerate cap");
    const double kd1 = ball_volume(d - 1);
    const double xi1 = plane.xi1, xid = plane.xid, t = plane.t;

    double m_axis, m_vert;
    if (xid == 0.0) {
        const double u0 = t / xi1;
        m_axis = axis_integral(body, [&](double u, double f) {
            const bool in = xi1 > 0 ? (u <= u0) : (u >= u0);
            return in ? kd1 * u * std::pow(f, d - 1) : 0.0;
        });
        m_vert = 0.0;
    } else {
        m_axis = axis_integral(body, [&](double u, double f) {
            if (f <= 0.0) return 0.0;
            double c = (t - xi1 * u) / (xid * f);
            if (xid < 0.0) c = -c;
            double frac = ball_cap_fraction(d - 1, c);
            if (xid < 0.0) frac = 1.0 - frac;
            return kd1 * u * std::pow(f, d - 1) * frac;
        });
        m_vert = axis_integral(body, [&](double u, double f) {
            if (f <= 0.0) return 0.0;
            double c = (t - xi1 * u) / (xid * f);
            double m;
            if (xid > 0.0) {
                m = ball_cap_coordinate_moment(d - 1, c);
            } else {
                // region {x_d >= c f}; reflect
                m = -ball_cap_coordinate_moment(d - 1, -c);
            }
            return std::pow(f, d) * m;
        });
    }
    return {m_axis / v, m_vert / v};
}

std::pair<double, double> characteristic_point(const Bump& bump, double s) {
    const double h = bump(s), hp = bump.derivative(s, 1);
    return {-hp, -s * hp + h};
}

std::pair<double, double> plane_intersection(const CutPlane& a,
                                             const CutPlane& b) {
    const double det = a.xi1 * b.xid - a.xid * b.xi1;
    if (std::abs(det) < 1e-300)
        throw GeometryError("plane_intersection: parallel planes");
    const double u = (a.t * b.xid - a.xid * b.t) / det;
    const double v = (a.xi1 * b.t - a.t * b.xi1) / det;
    return {u, v};
}

std::pair<std::pair<double, double>, double> characteristic_point_estimate(
    const ProfileBody& body, double beta, double delta, double dtheta) {
    auto estimate = [&](double dth) {
        const CutPlane base = cut_at_volume(body, beta, delta);
        const CutPlane plus = cut_at_volume(body, beta + dth, delta);
        const CutPlane minus = cut_at_volume(body, beta - dth, delta);
        const auto mp = plane_intersection(base, plus);
        const auto mm = plane_intersection(base, minus);
        return std::pair<double, double>{0.5 * (mp.first + mm.first),
                                         0.5 * (mp.second + mm.second)};
    };
    const auto p1 = estimate(dtheta);
    const auto p2 = estimate(0.5 * dtheta);
    // centered estimates carry O(dtheta^2) error; Richardson halving
    const std::pair<double, double> limit{(4.0 * p2.first - p1.first) / 3.0,
                                          (4.0 * p2.second - p1.second) / 3.0};
    const double err = std::hypot(p2.first - p1.first, p2.second - p1.second) / 3.0;
    return {limit, err};
}

}  // namespace ulam
