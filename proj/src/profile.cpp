#include "ulam/profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ulam/errors.hpp"
#include "ulam/special.hpp"

namespace ulam {

namespace {
constexpr int kPolarNodes = 4096;  // uniform angle grid size (intervals)
constexpr double kRootTol = 1e-13;
}  // namespace

HermiteSpline::HermiteSpline(double lo, double hi, std::vector<double> value,
                             std::vector<double> slope)
    : lo_(lo), hi_(hi), v_(std::move(value)), d_(std::move(slope)) {
    du_ = (hi_ - lo_) / (v_.size() - 1);
}

double HermiteSpline::operator()(double u) const {
    const int n = static_cast<int>(v_.size());
    double p = (u - lo_) / du_;
    int i = static_cast<int>(std::floor(p));
    i = std::clamp(i, 0, n - 2);
    const double t = p - i;
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    const double h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t);
    const double h11 = t * t * (t - 1);
    return h00 * v_[i] + h10 * du_ * d_[i] + h01 * v_[i + 1] +
           h11 * du_ * d_[i + 1];
}

double HermiteSpline::derivative(double u) const {
    const int n = static_cast<int>(v_.size());
    double p = (u - lo_) / du_;
    int i = static_cast<int>(std::floor(p));
    i = std::clamp(i, 0, n - 2);
    const double t = p - i;
    const double g00 = 6 * t * (t - 1);
    const double g10 = (1 - t) * (1 - 3 * t);
    const double g01 = -g00;
    const double g11 = t * (3 * t - 2);
    return (g00 * v_[i] + g01 * v_[i + 1]) / du_ + g10 * d_[i] +
           g11 * d_[i + 1];
}

ProfileBody ProfileBody::ball(int dim) {
    if (dim < 3) throw ParameterError("ProfileBody: dim must be >= 3");
    ProfileBody b;
    b.dim_ = dim;
    std::vector<double> ones(kPolarNodes + 1, 1.0), zeros(kPolarNodes + 1, 0.0);
    b.right_ = HermiteSpline(0.0, 0.5 * kPi, ones, zeros);
    b.left_ = HermiteSpline(0.0, 0.5 * kPi, ones, zeros);
    return b;
}

ProfileBody ProfileBody::from_polar(int dim, const PolarChart& chart,
                                    double tau, double amplitude) {
    if (dim < 3) throw ParameterError("ProfileBody: dim must be >= 3");
    const int n = static_cast<int>(chart.alpha.size());
    if (n < 4 || chart.R.size() != chart.alpha.size() ||
        chart.r.size() != chart.alpha.size())
        throw ParameterError("ProfileBody: malformed polar chart");

    // Resample onto the internal uniform grid when needed.
    auto build = [&](const std::vector<double>& val,
                     const std::vector<double>& der) {
        std::vector<double> v(kPolarNodes + 1), d(kPolarNodes + 1);
        const bool uniform =
            n == kPolarNodes + 1 && std::abs(chart.alpha.front()) < 1e-15 &&
            std::abs(chart.alpha.back() - 0.5 * kPi) < 1e-12;
        if (uniform && !der.empty()) {
            return HermiteSpline(0.0, 0.5 * kPi, val, der);
        }
        if (uniform) {
            // derivatives by 6th-order central differences, one-sided at ends
            const double da = 0.5 * kPi / kPolarNodes;
            for (int i = 0; i <= kPolarNodes; ++i) v[i] = val[i];
            for (int i = 0; i <= kPolarNodes; ++i) {
                if (i >= 3 && i + 3 <= kPolarNodes) {
                    d[i] = (45.0 * (val[i + 1] - val[i - 1]) -
                            9.0 * (val[i + 2] - val[i - 2]) +
                            (val[i + 3] - val[i - 3])) /
                           (60.0 * da);
                } else if (i + 1 <= kPolarNodes && i >= 1) {
                    d[i] = (val[i + 1] - val[i - 1]) / (2.0 * da);
                } else if (i == 0) {
                    d[i] = (-3 * val[0] + 4 * val[1] - val[2]) / (2 * da);
                } else {
                    d[i] = (3 * val[i] - 4 * val[i - 1] + val[i - 2]) / (2 * da);
                }
            }
            return HermiteSpline(0.0, 0.5 * kPi, v, d);
        }
        // generic monotone alpha grid: locate and interpolate cubically
        for (int i = 0; i <= kPolarNodes; ++i) {
            const double a = 0.5 * kPi * i / kPolarNodes;
            auto it = std::upper_bound(chart.alpha.begin(), chart.alpha.end(), a);
            int j = std::clamp(
                static_cast<int>(it - chart.alpha.begin()) - 1, 0, n - 2);
            const double t =
                (a - chart.alpha[j]) / (chart.alpha[j + 1] - chart.alpha[j]);
            if (!der.empty()) {
                const double h = chart.alpha[j + 1] - chart.alpha[j];
                const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
                const double h10 = t * (1 - t) * (1 - t);
                const double h01 = t * t * (3 - 2 * t);
                const double h11 = t * t * (t - 1);
                v[i] = h00 * val[j] + h10 * h * der[j] + h01 * val[j + 1] +
                       h11 * h * der[j + 1];
                const double g00 = 6 * t * (t - 1);
                const double g10 = (1 - t) * (1 - 3 * t);
                const double g11 = t * (3 * t - 2);
                d[i] = (g00 * val[j] - g00 * val[j + 1]) / h + g10 * der[j] +
                       g11 * der[j + 1];
            } else {
                v[i] = val[j] + t * (val[j + 1] - val[j]);
                d[i] = (val[j + 1] - val[j]) /
                       (chart.alpha[j + 1] - chart.alpha[j]);
            }
        }
        return HermiteSpline(0.0, 0.5 * kPi, v, d);
    };

    ProfileBody b;
    b.dim_ = dim;
    b.tau_ = tau;
    b.amplitude_ = amplitude;
    b.right_ = build(chart.R, chart.dR);
    b.left_ = build(chart.r, chart.dr);
    return b;
}

double ProfileBody::invert_abscissa(const HermiteSpline& sp,
                                    double target) const {
    // solve sp(a) cos a = target for a in [0, pi/2]; the map is monotone
    // decreasing for near-ball bodies.
    double lo = 0.0, hi = 0.5 * kPi;
    const double t_lo = sp(lo);  // value at alpha=0 equals the support end
    if (target >= t_lo) return 0.0;
    if (target <= 0.0 && std::abs(target) < 1e-300) return 0.5 * kPi;
    double a = std::acos(std::clamp(target / t_lo, -1.0, 1.0));
    for (int it = 0; it < 80; ++it) {
        const double R = sp(a);
        const double g = R * std::cos(a) - target;
        if (g > 0)
            lo = a;
        else
            hi = a;
        const double dg = sp.derivative(a) * std::cos(a) - R * std::sin(a);
        double step = (dg != 0.0) ? g / dg : 0.0;
        double next = a - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - a) < kRootTol) return next;
        a = next;
    }
    return a;
}

double ProfileBody::f(double t) const {
    if (t >= 0.0) {
        const double a = invert_abscissa(right_, t);
        return right_(a) * std::sin(a);
    }
    const double a = invert_abscissa(left_, -t);
    return left_(a) * std::sin(a);
}

double ProfileBody::fprime(double t) const {
    if (t >= 0.0) {
        const double a = invert_abscissa(right_, t);
        const double R = right_(a), dR = right_.derivative(a);
        const double num = dR * std::sin(a) + R * std::cos(a);
        const double den = dR * std::cos(a) - R * std::sin(a);
        if (std::abs(den) < 1e-300) return -1e300;
        return num / den;
    }
    const double a = invert_abscissa(left_, -t);
    const double R = left_(a), dR = left_.derivative(a);
    const double num = dR * std::sin(a) + R * std::cos(a);
    const double den = dR * std::cos(a) - R * std::sin(a);
    if (std::abs(den) < 1e-300) return 1e300;
    return -num / den;
}

double ProfileBody::radial(int side, double alpha) const {
    return side >= 0 ? right_(alpha) : left_(alpha);
}

double ProfileBody::radial_derivative(int side, double alpha) const {
    return side >= 0 ? right_.derivative(alpha) : left_.derivative(alpha);
}

PolarChart ProfileBody::polar_chart() const {
    PolarChart c;
    c.alpha.resize(kPolarNodes + 1);
    c.R.resize(kPolarNodes + 1);
    c.r.resize(kPolarNodes + 1);
    c.dR.resize(kPolarNodes + 1);
    c.dr.resize(kPolarNodes + 1);
    for (int i = 0; i <= kPolarNodes; ++i) {
        const double a = 0.5 * kPi * i / kPolarNodes;
        c.alpha[i] = a;
        c.R[i] = right_(a);
        c.r[i] = left_(a);
        c.dR[i] = right_.derivative(a);
        c.dr[i] = left_.derivative(a);
    }
    return c;
}

std::vector<std::pair<double, double>> ProfileBody::profile_samples() const {
    std::vector<std::pair<double, double>> out;
    out.reserve(2 * kPolarNodes + 1);
    for (int i = 0; i <= kPolarNodes; ++i) {
        const double a = 0.5 * kPi * i / kPolarNodes;  // left: alpha ascending
        const double r = left_(a);
        out.emplace_back(-r * std::cos(a), r * std::sin(a));
    }
    for (int i = kPolarNodes - 1; i >= 0; --i) {
        const double a = 0.5 * kPi * i / kPolarNodes;
        const double R = right_(a);
        out.emplace_back(R * std::cos(a), R * std::sin(a));
    }
    return out;
}

double ProfileBody::concavity_margin() const {
    const auto pts = profile_samples();
    double margin = 1e300;
    for (size_t i = 1; i + 1 < pts.size(); ++i) {
        const double t0 = pts[i - 1].first, t1 = pts[i].first,
                     t2 = pts[i + 1].first;
        const double f0 = pts[i - 1].second, f1 = pts[i].second,
                     f2 = pts[i + 1].second;
        const double dd =
            ((f2 - f1) / (t2 - t1) - (f1 - f0) / (t1 - t0)) / (t2 - t0);
        margin = std::min(margin, -dd);
    }
    return margin;
}

namespace {

double hermite_eval(const std::vector<double>& s, const std::vector<double>& v,
                    const std::vector<double>& d, double q, bool deriv) {
    const int n = static_cast<int>(s.size());
    auto it = std::upper_bound(s.begin(), s.end(), q);
    int i = std::clamp(static_cast<int>(it - s.begin()) - 1, 0, n - 2);
    const double h = s[i + 1] - s[i];
    const double t = (q - s[i]) / h;
    if (!deriv) {
        const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
        const double h10 = t * (1 - t) * (1 - t);
        const double h01 = t * t * (3 - 2 * t);
        const double h11 = t * t * (t - 1);
        return h00 * v[i] + h10 * h * d[i] + h01 * v[i + 1] + h11 * h * d[i + 1];
    }
    const double g00 = 6 * t * (t - 1);
    const double g10 = (1 - t) * (1 - 3 * t);
    const double g11 = t * (3 * t - 2);
    return (g00 * v[i] - g00 * v[i + 1]) / h + g10 * d[i] + g11 * d[i + 1];
}

}  // namespace

double SlopeChart::eval_x(double slope) const {
    if (s.empty() || slope < s.front() || slope > s.back())
        return ball_chart(slope);
    return hermite_eval(s, x, xp, slope, false);
}
double SlopeChart::eval_y(double slope) const {
    if (s.empty() || slope < s.front() || slope > s.back())
        return ball_chart(slope);
    return hermite_eval(s, y, yp, slope, false);
}
double SlopeChart::eval_xp(double slope) const {
    if (s.empty() || slope < s.front() || slope > s.back())
        return ball_chart_derivative(slope);
    return hermite_eval(s, x, xp, slope, true);
}
double SlopeChart::eval_yp(double slope) const {
    if (s.empty() || slope < s.front() || slope > s.back())
        return ball_chart_derivative(slope);
    return hermite_eval(s, y, yp, slope, true);
}

SlopeChart chart_from_profile(const ProfileBody& body, const Bump& bump,
                              const std::vector<double>& s_grid) {
    SlopeChart c;
    c.bump = bump;
    c.s = s_grid;
    std::sort(c.s.begin(), c.s.end());
    const int n = static_cast<int>(c.s.size());
    c.x.resize(n);
    c.y.resize(n);
    c.xp.resize(n);
    c.yp.resize(n);
    const double R1 = body.R1(), R2 = body.R2();

    for (int i = 0; i < n; ++i) {
        const double s = c.s[i];
        const double h = bump(s), hp = bump.derivative(s, 1);

        // upper intersection: f(t) - (s t + h) = 0 on [0, R2]
        auto upper = [&](double t) { return body.f(t) - (s * t + h); };
        auto upper_d = [&](double t) { return body.fprime(t) - s; };
        // lower intersection: f(-t) - (s t - h) = 0 on [0, R1]
        auto lower = [&](double t) { return body.f(-t) - (s * t - h); };
        auto lower_d = [&](double t) { return -body.fprime(-t) - s; };

        auto solve = [&](auto&& fn, auto&& dfn, double hi) {
            double lo = 0.0;
            const double flo = fn(lo), fhi = fn(hi);
            if (flo < 0.0)
                throw GeometryError(
                    "chart_from_profile: no transversal intersection at s=" +
                    std::to_string(s));
            if (fhi >= 0.0) {
                // line passes at or below the tip: root at the support end
                if (fhi < 1e-12) return hi;
                throw GeometryError(
                    "chart_from_profile: line misses the profile at s=" +
                    std::to_string(s));
            }
            double t = hi / std::sqrt(1.0 + s * s);
            for (int it = 0; it < 100; ++it) {
                const double g = fn(t);
                if (g > 0)
                    lo = t;
                else
                    hi = t;
                const double dg = dfn(t);
                double next = (std::isfinite(dg) && dg != 0.0) ? t - g / dg
                                                               : 0.5 * (lo + hi);
                if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
                if (std::abs(next - t) < kRootTol) return next;
                t = next;
            }
            return t;
        };

        const double y = solve(upper, upper_d, R2);
        const double x = solve(lower, lower_d, R1);
        c.y[i] = y;
        c.x[i] = x;

        const double fpy = body.fprime(y);
        const double fpx = body.fprime(-x);
        c.yp[i] = (std::abs(fpy) > 1e12) ? 0.0 : (y + hp) / (fpy - s);
        c.xp[i] = (std::abs(fpx) > 1e12) ? 0.0 : -(x - hp) / (fpx + s);
    }
    return c;
}

double chart_residual(const SlopeChart& chart, const ProfileBody& body) {
    double res = 0.0;
    for (size_t i = 0; i < chart.s.size(); ++i) {
        const double s = chart.s[i];
        const double h = chart.bump(s);
        res = std::max(res, std::abs(body.f(chart.y[i]) - (s * chart.y[i] + h)));
        res = std::max(res,
                       std::abs(body.f(-chart.x[i]) - (s * chart.x[i] - h)));
    }
    return res;
}

ProfileBody profile_from_charts(const SlopeChart& chart,
                                const std::optional<PolarChart>& polar,
                                int dim, double tau, double amplitude,
                                double polar_seam_tan) {
    PolarChart out;
    const int N = kPolarNodes;
    out.alpha.resize(N + 1);
    out.R.resize(N + 1);
    out.r.resize(N + 1);
    out.dR.resize(N + 1);
    out.dr.resize(N + 1);

    // Angle ranges covered by the sampled chart (right and left sides).
    const Bump& bump = chart.bump;
    auto right_angle = [&](double s) {
        const double y = chart.eval_y(s);
        return std::atan2(s * y + bump(s), y);
    };
    auto left_angle = [&](double s) {
        const double x = chart.eval_x(s);
        return std::atan2(s * x - bump(s), x);
    };
    const bool have_chart = !chart.s.empty();
    const double s_lo = have_chart ? chart.s.front() : 0.0;
    const double s_hi = have_chart ? chart.s.back() : 0.0;

    // Invert angle(s)=a for s by bisection+Newton on [s_lo, s_hi].
    auto invert = [&](auto&& ang, double a) {
        double lo = s_lo, hi = s_hi;
        double s = std::tan(a);
        s = std::clamp(s, lo, hi);
        for (int it = 0; it < 80; ++it) {
            const double g = ang(s) - a;
            if (g < 0)
                lo = s;
            else
                hi = s;
            const double eps = 1e-7;
            const double d =
                (ang(std::min(s + eps, s_hi)) - ang(std::max(s - eps, s_lo))) /
                (std::min(s + eps, s_hi) - std::max(s - eps, s_lo));
            double next = (d != 0.0) ? s - g / d : 0.5 * (lo + hi);
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            if (std::abs(next - s) < 1e-14) return next;
            s = next;
        }
        return s;
    };

    // Chart-derived polar values at angle a; falls back to the unit ball
    // outside the sampled slope range.
    auto from_chart_right = [&](double a, double& R, double& dR) {
        if (!have_chart || a >= right_angle(s_hi) || a <= right_angle(s_lo)) {
            R = 1.0;
            dR = 0.0;
            return;
        }
        const double s = invert(right_angle, a);
        const double y = chart.eval_y(s), yp = chart.eval_yp(s);
        const double h = bump(s), hp = bump.derivative(s, 1);
        const double T = y, F = s * y + h;
        const double Tp = yp, Fp = y + s * yp + hp;
        R = std::sqrt(T * T + F * F);
        const double dRds = (T * Tp + F * Fp) / R;
        const double dads = (Fp * T - F * Tp) / (T * T + F * F);
        dR = dRds / dads;
    };
    auto from_chart_left = [&](double a, double& r, double& dr) {
        if (!have_chart || a >= left_angle(s_hi) || a <= left_angle(s_lo)) {
            r = 1.0;
            dr = 0.0;
            return;
        }
        const double s = invert(left_angle, a);
        const double x = chart.eval_x(s), xp = chart.eval_xp(s);
        const double h = bump(s), hp = bump.derivative(s, 1);
        const double T = x, F = s * x - h;
        const double Tp = xp, Fp = x + s * xp - hp;
        r = std::sqrt(T * T + F * F);
        const double drds = (T * Tp + F * Fp) / r;
        const double dads = (Fp * T - F * Tp) / (T * T + F * F);
        dr = drds / dads;
    };

    // Optional low-angle polar input, interpolated on its own grid.
    auto polar_eval = [&](const std::vector<double>& val,
                          const std::vector<double>& der, double a, double& v,
                          double& d) {
        const auto& pa = polar->alpha;
        const int n = static_cast<int>(pa.size());
        auto it = std::upper_bound(pa.begin(), pa.end(), a);
        int j = std::clamp(static_cast<int>(it - pa.begin()) - 1, 0, n - 2);
        const double h = pa[j + 1] - pa[j];
        const double t = (a - pa[j]) / h;
        if (!der.empty()) {
            const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
            const double h10 = t * (1 - t) * (1 - t);
            const double h01 = t * t * (3 - 2 * t);
            const double h11 = t * t * (t - 1);
            v = h00 * val[j] + h10 * h * der[j] + h01 * val[j + 1] +
                h11 * h * der[j + 1];
            const double g00 = 6 * t * (t - 1);
            const double g10 = (1 - t) * (1 - 3 * t);
            const double g11 = t * (3 * t - 2);
            d = (g00 * val[j] - g00 * val[j + 1]) / h + g10 * der[j] +
                g11 * der[j + 1];
        } else {
            v = val[j] + t * (val[j + 1] - val[j]);
            d = (val[j + 1] - val[j]) / h;
        }
    };

    const double a_seam = std::atan(polar_seam_tan);
    for (int i = 0; i <= N; ++i) {
        const double a = 0.5 * kPi * i / N;
        out.alpha[i] = a;
        if (polar && a <= a_seam) {
            polar_eval(polar->R, polar->dR, a, out.R[i], out.dR[i]);
            polar_eval(polar->r, polar->dr, a, out.r[i], out.dr[i]);
        } else {
            from_chart_right(a, out.R[i], out.dR[i]);
            from_chart_left(a, out.r[i], out.dr[i]);
        }
    }
    return ProfileBody::from_polar(dim, out, tau, amplitude);
}

}  // namespace ulam
