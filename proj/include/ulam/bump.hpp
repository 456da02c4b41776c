#pragma once

#include "ulam/taylor.hpp"

namespace ulam {

/// Smooth compactly supported perturbation of the cutting-plane family:
/// the planes are x_d = s x_1 + h(s) and h is the standard mollifier
///   h(s) = A * e * exp(-1/(1-u^2)),  u = (s - mid)/halfwidth,
/// supported on [1-2*tau, 1-tau] with peak value A at the midpoint.
/// Jets (value plus derivatives of any order up to Jet::kMaxLen-1) are
/// exact, which the backward solvers rely on.
class Bump {
public:
    Bump() : tau_(0.0), amplitude_(0.0), order_(0), a_(0), b_(0) {}
    Bump(double tau, double amplitude, int order);

    double tau() const { return tau_; }
    double amplitude() const { return amplitude_; }
    int order() const { return order_; }
    double support_lo() const { return a_; }
    double support_hi() const { return b_; }
    bool zero() const { return amplitude_ == 0.0; }

    /// Taylor jet of h at s (identically-zero jet outside the open support).
    Jet jet(double s, int len) const;

    double operator()(double s) const { return jet(s, 1).value(); }
    double derivative(double s, int k) const {
        return jet(s, k + 1).derivative(k);
    }

    /// max over the support of |h^(k)| (scanned on a fine grid).
    double max_abs_derivative(int k) const;

    /// C^k norm: sum of the max-norms of h^(0..k).
    double ck_norm(int k) const;

private:
    double tau_, amplitude_;
    int order_;
    double a_, b_;  // support endpoints
};

/// Factory with the parameter validation described for the CLI.
Bump make_bump(double tau, double amplitude, int order);

}  // namespace ulam
