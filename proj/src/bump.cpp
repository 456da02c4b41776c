#include "ulam/bump.hpp"

#include <cmath>
#include <stdexcept>

#include "ulam/errors.hpp"

namespace ulam {

Bump::Bump(double tau, double amplitude, int order)
    : tau_(tau), amplitude_(amplitude), order_(order) {
    a_ = 1.0 - 2.0 * tau;
    b_ = 1.0 - tau;
}

Jet Bump::jet(double s, int len) const {
    if (amplitude_ == 0.0 || s <= a_ || s >= b_) return Jet::constant(0.0, len);
    const double mid = 0.5 * (a_ + b_);
    const double halfwidth = 0.5 * (b_ - a_);
    // u = (s-mid)/halfwidth as a jet in s
    Jet u = (Jet::variable(s, len) - mid) / halfwidth;
    Jet w = 1.0 - u * u;          // > 0 strictly inside the support
    Jet arg = Jet::constant(-1.0, len) / w;
    // peak normalization: h(mid) = amplitude
    const double scale = amplitude_ * std::exp(1.0);
    return scale * exp(arg);
}

double Bump::max_abs_derivative(int k) const {
    if (amplitude_ == 0.0) return 0.0;
    const int n = 4001;
    double m = 0.0;
    for (int i = 1; i < n; ++i) {
        const double s = a_ + (b_ - a_) * i / n;
        m = std::max(m, std::abs(derivative(s, k)));
    }
    return m;
}

double Bump::ck_norm(int k) const {
    double s = 0.0;
    for (int m = 0; m <= k; ++m) s += max_abs_derivative(m);
    return s;
}

Bump make_bump(double tau, double amplitude, int order) {
    if (!(tau > 0.0 && tau < 0.25))
        throw ParameterError("make_bump: tau must lie in (0, 1/4)");
    if (!(amplitude > 0.0))
        throw ParameterError("make_bump: amplitude must be positive");
    if (order < 1 || order > Jet::kMaxLen - 1)
        throw ParameterError("make_bump: unsupported derivative order");
    return Bump(tau, amplitude, order);
}

}  // namespace ulam
