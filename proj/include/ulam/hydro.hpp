#pragma once

#include <vector>

#include "ulam/bump.hpp"
#include "ulam/profile.hpp"

namespace ulam {

/// Hyperplane {p . xi = t} with xi a unit vector in the x1-xd plane,
/// xi = (xi1, 0, ..., 0, xid). When xid != 0 the same plane has the slope
/// form x_d = slope * x_1 + offset with slope = -xi1/xid, offset = t/xid.
struct CutPlane {
    double xi1 = 0.0, xid = 1.0;
    double t = 0.0;

    bool has_slope_form() const { return xid != 0.0; }
    double slope() const { return -xi1 / xid; }
    double offset() const { return t / xid; }

    static CutPlane from_angle(double beta, double t) {
        return CutPlane{std::cos(beta), std::sin(beta), t};
    }
    static CutPlane from_slope(double s, double offset) {
        const double n = std::sqrt(1.0 + s * s);
        // normal (s,0,...,-1)/n, so x_d = s x_1 + offset maps to t = -offset/n
        return CutPlane{s / n, -1.0 / n, -offset / n};
    }
};

/// Moments of inertia of a section about codimension-1 planes through its
/// center of mass: I1 about the plane orthogonal to the rotation trace,
/// Iperp about planes containing it.
struct SectionMoments {
    double I1 = 0.0;
    double Iperp = 0.0;
    double centroid_first = 0.0;  // x1-coordinate of the section centroid
    double area = 0.0;            // (d-1)-volume of the section
    double kappa = 0.0;           // kappa_{d-2}
    double gamma = 0.0;           // gamma_{d-2}
};

/// Total volume of the body, kappa_{d-1} * int f^{d-1}.
double body_volume(const ProfileBody& body);

/// Centroid of the whole body; lies on the axis, so only x1 is nonzero.
double body_centroid_x1(const ProfileBody& body);

/// vol_d(K intersect {p.xi <= t}).
double volume_below(const ProfileBody& body, const CutPlane& plane);

/// (d-1)-volume of the section K intersect {p.xi = t}.
double section_area(const ProfileBody& body, const CutPlane& plane);

/// Plane orthogonal to xi cutting volume delta off the body.
CutPlane cut_at_volume(const ProfileBody& body, double beta, double delta,
                       double rel_tol = 1e-11);

/// Paper-route section quantities for planes in slope form: 1D integrals of
/// (f^2 - L^2)-powers over [-x(s), y(s)] with the dimensional prefactors.
SectionMoments section_centroid_and_moments(const ProfileBody& body,
                                            const CutPlane& plane);

/// Independent route: 2D tensor-product quadrature over the section
/// parameterized by (in-plane abscissa, slice radius); no closed-form
/// slice integrals. Used as the oracle for the route above and for
/// direction sweeps (valid for every direction including vertical cuts).
SectionMoments section_moments_intrinsic(const ProfileBody& body,
                                         const CutPlane& plane,
                                         int n_quad = 96);

/// Centroid of the submerged part K intersect {p.xi <= t}; components
/// orthogonal to the x1-xd plane vanish by symmetry, so the result is
/// (c1, cd) in that plane.
std::pair<double, double> submerged_centroid(const ProfileBody& body,
                                             const CutPlane& plane);

/// Characteristic point of the family x_d = s x_1 + h(s): the limit of
/// intersections of neighboring planes, (-h'(s), 0, ..., 0, -s h'(s)+h(s)).
std::pair<double, double> characteristic_point(const Bump& bump, double s);

/// Finite-difference estimate of the characteristic point of the
/// constant-volume family at direction angle beta: intersects the cutting
/// planes for nearby rotated directions and Richardson-extrapolates
/// dtheta -> 0. Returns ((c1, cd), error_estimate).
std::pair<std::pair<double, double>, double> characteristic_point_estimate(
    const ProfileBody& body, double beta, double delta, double dtheta);

/// In-plane intersection point of two cutting planes (both in the
/// x1-xd pencil).
std::pair<double, double> plane_intersection(const CutPlane& a,
                                             const CutPlane& b);

}  // namespace ulam
