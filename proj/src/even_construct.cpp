#include "ulam/even_construct.hpp"

#include <algorithm>
#include <cmath>

#include "ulam/errors.hpp"
#include "ulam/quadrature.hpp"
#include "ulam/special.hpp"
#include "ulam/taylor.hpp"

namespace ulam {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Solve a small dense linear system in place (partial pivoting).
void solve4(std::array<std::array<double, 4>, 4>& a, Vec4& b) {
    for (int c = 0; c < 4; ++c) {
        int p = c;
        for (int r = c + 1; r < 4; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        std::swap(a[c], a[p]);
        std::swap(b[c], b[p]);
        if (std::abs(a[c][c]) < 1e-300)
            throw NumericalError("march: singular Newton system");
        for (int r = c + 1; r < 4; ++r) {
            const double m = a[r][c] / a[c][c];
            for (int k = c; k < 4; ++k) a[r][k] -= m * a[c][k];
            b[r] -= m * b[c];
        }
    }
    for (int c = 3; c >= 0; --c) {
        for (int k = c + 1; k < 4; ++k) b[c] -= a[c][k] * b[k];
        b[c] /= a[c][c];
    }
}

}  // namespace

Vec4 ball_state(double s) {
    const double r = 1.0 / std::sqrt(1.0 + s * s);
    const double dr = -s * r * r * r;
    return {r, r, dr, dr};
}

EvenSystem::EvenSystem(int dim, const Bump& bump) : dim_(dim), bump_(bump) {
    if (dim < 4 || dim % 2 != 0)
        throw ParameterError("EvenSystem: dim must be even and >= 4");
    n_ = dim / 2;
    len_ = n_ + 2;
    if (len_ > Jet::kMaxLen)
        throw ParameterError("EvenSystem: dimension too large for jet order");
    const_ = symmetric_power_integral(n_);
}

EvenSystem assemble_even_system(int dim, const Bump& bump) {
    return EvenSystem(dim, bump);
}

Vec4 EvenSystem::G(double s, const Vec4& Z) const {
    const double x = Z[0], y = Z[1], xp = Z[2], yp = Z[3];
    const auto A = jacobian_A(s, x, y);
    return {x, y, A[0] * xp + A[1] * yp, A[2] * xp + A[3] * yp};
}

std::array<double, 4> EvenSystem::jacobian_A(double s, double x,
                                             double y) const {
    const double h = bump_(s), hp = bump_.derivative(s, 1);
    // L dL/ds at the two endpoints of the section
    const double wl = (-s * x + h) * (-x + hp);
    const double wu = (s * y + h) * (y + hp);
    const double c3 = std::pow(-2.0, n_) * factorial(n_);
    const double c4 = std::pow(-2.0, n_ - 1) * factorial(n_ - 1);
    return {c3 * std::pow(wl, n_), c3 * std::pow(wu, n_),
            c4 * std::pow(wl, n_ - 1) * (-x + hp),
            c4 * std::pow(wu, n_ - 1) * (y + hp)};
}

double EvenSystem::row3_kernel(double s, double t, double C) const {
    // (n+1)-st slope derivative of (C^2 - L(s,t)^2)^n
    Jet L = Jet::variable(s, len_) * t + bump_.jet(s, len_);
    Jet g = Jet::constant(C * C, len_) - L * L;
    return pow_int(g, n_).derivative(n_ + 1);
}

double EvenSystem::row4_kernel(double s, double t, double C) const {
    // n-th slope derivative of (C^2 - L(s,t)^2)^{n-1} dL/ds(s,t)
    Jet hj = bump_.jet(s, len_);
    Jet L = Jet::variable(s, len_) * t + hj;
    Jet g = Jet::constant(C * C, len_) - L * L;
    Jet dLds = hj.derivative_jet() + t;
    return (pow_int(g, n_ - 1) * dLds).derivative(n_);
}

Vec4 EvenSystem::Theta(double s, double sigma, const Vec4& Zs) const {
    const double x = Zs[0], y = Zs[1], xp = Zs[2], yp = Zs[3];
    const double hs = bump_(sigma);
    const double Cl = -sigma * x + hs;  // L(sigma, -x)
    const double Cu = sigma * y + hs;   // L(sigma, y)
    const double r3 =
        row3_kernel(s, -x, Cl) * xp + row3_kernel(s, y, Cu) * yp;
    const double r4 =
        row4_kernel(s, -x, Cl) * xp + row4_kernel(s, y, Cu) * yp;
    return {-xp, -yp, r3, r4};
}

Vec4 EvenSystem::Xi(double s) const {
    const double e = 1.0 / std::sqrt(2.0);  // x_o(1) = y_o(1)
    // fixed-interval integrals over [-x_o(1), y_o(1)]; the integrands are
    // polynomials in t, so fixed Gauss-Legendre is exact
    const int nq = 2 * n_ + 6;
    const double xi1 = integrate_gl(
        [&](double t) {
            Jet L = Jet::variable(s, len_) * t + bump_.jet(s, len_);
            Jet g = Jet::constant(1.0 - t * t, len_) - L * L;
            return pow_int(g, n_).derivative(n_ + 1);
        },
        -e, e, nq);
    const double xi2 = integrate_gl(
        [&](double t) {
            Jet hj = bump_.jet(s, len_);
            Jet L = Jet::variable(s, len_) * t + hj;
            Jet g = Jet::constant(1.0 - t * t, len_) - L * L;
            Jet dLds = hj.derivative_jet() + t;
            return (pow_int(g, n_ - 1) * dLds).derivative(n_);
        },
        -e, e, nq);
    // (d/ds)^{n+1} of const / sqrt(1+s^2)
    Jet sj = Jet::variable(s, len_);
    const double rhs =
        (Jet::constant(const_, len_) / sqrt(1.0 + sj * sj)).derivative(n_ + 1);
    return {e, e, -xi1 + rhs, -xi2};
}

Vec4 EvenSystem::residual(double s,
                          const std::function<Vec4(double)>& Zfun) const {
    Vec4 total = Xi(s);
    for (int row = 0; row < 4; ++row) {
        const double integral = integrate_adaptive(
            [&](double sigma) { return Theta(s, sigma, Zfun(sigma))[row]; }, s,
            1.0, 1e-12, 1e-15);
        total[row] += integral;
    }
    const Vec4 g = G(s, Zfun(s));
    return {g[0] - total[0], g[1] - total[1], g[2] - total[2], g[3] - total[3]};
}

std::vector<double> even_march_grid(double tau, int grid_n) {
    std::vector<double> s(grid_n + 1);
    const double lo = 1.0 - 3.0 * tau;
    for (int i = 0; i <= grid_n; ++i)
        s[i] = 1.0 + (lo - 1.0) * double(i) / grid_n;
    return s;
}

namespace {

// Composite quadrature weights for int_{s_i}^{s_0} F dsigma on a uniform
// descending grid, indexed by node j = 0..i: Simpson when the interval
// count is even, Simpson plus a 3/8 block at the newest nodes when odd.
std::vector<double> volterra_weights(int i) {
    std::vector<double> w(i + 1, 0.0);
    if (i == 0) return w;
    if (i == 1) {
        w[0] = w[1] = 0.5;
        return w;
    }
    if (i % 2 == 1) {
        if (i == 3) {
            w[0] = w[3] = 3.0 / 8.0;
            w[1] = w[2] = 9.0 / 8.0;
            return w;
        }
        // 3/8 block on the three newest intervals (j = i-3..i)
        w[i] += 3.0 / 8.0;
        w[i - 1] += 9.0 / 8.0;
        w[i - 2] += 9.0 / 8.0;
        w[i - 3] += 3.0 / 8.0;
    }
    // Simpson on the remaining even number of intervals
    const int last = (i % 2 == 1) ? i - 3 : i;
    if (last >= 2) {
        w[0] += 1.0 / 3.0;
        w[last] += 1.0 / 3.0;
        for (int j = 1; j < last; ++j)
            w[j] += (j % 2 == 1) ? 4.0 / 3.0 : 2.0 / 3.0;
    }
    return w;
}

}  // namespace

StateZ march_backward(const EvenSystem& sys, const std::vector<double>& s_grid) {
    const int N = static_cast<int>(s_grid.size()) - 1;
    if (N < 2 || s_grid.front() != 1.0)
        throw ParameterError("march_backward: grid must descend from s = 1");
    const double step = s_grid[0] - s_grid[1];

    StateZ st;
    st.s = s_grid;
    st.Z.resize(N + 1);
    st.Z[0] = ball_state(1.0);

    const double tau = sys.bump().tau();
    for (int i = 1; i <= N; ++i) {
        const double s = s_grid[i];
        const auto w = volterra_weights(i);

        // Part of the Volterra integral from already-fixed nodes.
        Vec4 fixed = sys.Xi(s);
        for (int j = 0; j < i; ++j) {
            if (w[j] == 0.0) continue;
            const Vec4 th = sys.Theta(s, s_grid[j], st.Z[j]);
            for (int r = 0; r < 4; ++r) fixed[r] += step * w[j] * th[r];
        }
        const double wi = step * w[i];

        auto residual = [&](const Vec4& Z) {
            const Vec4 g = sys.G(s, Z);
            const Vec4 th = sys.Theta(s, s, Z);
            Vec4 r;
            for (int k = 0; k < 4; ++k) r[k] = g[k] - wi * th[k] - fixed[k];
            return r;
        };

        // initial guess: previous deviation from the ball carried forward
        const Vec4 zo = ball_state(s);
        const Vec4 zo_prev = ball_state(s_grid[i - 1]);
        Vec4 Z;
        for (int k = 0; k < 4; ++k)
            Z[k] = zo[k] + (st.Z[i - 1][k] - zo_prev[k]);

        bool done = false;
        for (int it = 0; it < 40; ++it) {
            const Vec4 r = residual(Z);
            double rn = 0.0;
            for (double v : r) rn = std::max(rn, std::abs(v));
            if (rn < 1e-12) {
                st.max_newton_residual = std::max(st.max_newton_residual, rn);
                done = true;
                break;
            }
            std::array<std::array<double, 4>, 4> J;
            for (int c = 0; c < 4; ++c) {
                Vec4 Zp = Z;
                const double eps = 1e-7 * std::max(1.0, std::abs(Z[c]));
                Zp[c] += eps;
                const Vec4 rp = residual(Zp);
                for (int rr = 0; rr < 4; ++rr) J[rr][c] = (rp[rr] - r[rr]) / eps;
            }
            Vec4 delta = r;
            solve4(J, delta);
            for (int k = 0; k < 4; ++k) Z[k] -= delta[k];
            double dn = 0.0;
            for (double v : delta) dn = std::max(dn, std::abs(v));
            if (dn < 1e-14) {
                const Vec4 rf = residual(Z);
                double rfn = 0.0;
                for (double v : rf) rfn = std::max(rfn, std::abs(v));
                if (rfn < 2e-12) {
                    st.max_newton_residual = std::max(st.max_newton_residual, rfn);
                    done = true;
                }
                break;
            }
        }
        if (!done)
            throw ConstructionError("march", "Newton did not converge", s);

        st.Z[i] = Z;
        double dev = 0.0;
        for (int k = 0; k < 4; ++k) dev = std::max(dev, std::abs(Z[k] - zo[k]));
        st.max_dev_ball = std::max(st.max_dev_ball, dev);
        if (s >= 1.0 - tau) st.max_dev_tail = std::max(st.max_dev_tail, dev);
    }
    return st;
}

ReturnReport check_return_to_circle(const StateZ& state, double tau, int n) {
    ReturnReport rep;
    const double lo = 1.0 - 3.0 * tau, hi = 1.0 - 2.0 * tau;
    for (size_t i = 0; i < state.s.size(); ++i) {
        const double s = state.s[i];
        if (s < lo - 1e-14 || s > hi + 1e-14) continue;
        const double xo = ball_chart(s);
        const double x = state.Z[i][0], y = state.Z[i][1];
        rep.max_chart_deviation =
            std::max(rep.max_chart_deviation,
                     std::max(std::abs(x - xo), std::abs(y - xo)));
        // closed-form antiderivatives of the two surviving moments
        const double evenmom =
            (std::pow(y, 2 * n + 1) + std::pow(x, 2 * n + 1)) / (2 * n + 1) -
            2.0 * std::pow(xo, 2 * n + 1) / (2 * n + 1);
        const double oddk =
            (std::pow(y, 2 * n) - std::pow(x, 2 * n)) / (2.0 * n);
        rep.max_evenmom_residual =
            std::max(rep.max_evenmom_residual, std::abs(evenmom));
        rep.max_oddk_residual = std::max(rep.max_oddk_residual, std::abs(oddk));
    }
    return rep;
}

namespace {

SlopeChart snapped_chart(const StateZ& state, const Bump& bump) {
    SlopeChart c;
    c.bump = bump;
    const int N = static_cast<int>(state.s.size());
    c.s.resize(N);
    c.x.resize(N);
    c.y.resize(N);
    c.xp.resize(N);
    c.yp.resize(N);
    for (int i = 0; i < N; ++i) {
        const int j = N - 1 - i;  // ascending in s
        const double s = state.s[j];
        c.s[i] = s;
        if (s <= bump.support_lo() + 1e-14 || s >= bump.support_hi() - 1e-14) {
            c.x[i] = c.y[i] = ball_chart(s);
            c.xp[i] = c.yp[i] = ball_chart_derivative(s);
        } else {
            c.x[i] = state.Z[j][0];
            c.y[i] = state.Z[j][1];
            c.xp[i] = state.Z[j][2];
            c.yp[i] = state.Z[j][3];
        }
    }
    return c;
}

double devenm_ladder_residual(const ProfileBody& body, double s_lo, int n) {
    // moment identities int f^{2j} t^{2(n-1-j)+1} dt = (ball value),
    // j = 1..n-1, over the middle interval [-x(s_lo), y(s_lo)]
    const double xb = ball_chart(s_lo);
    double worst = 0.0;
    for (int j = 1; j <= n - 1; ++j) {
        const int tpow = 2 * (n - 1 - j) + 1;
        auto lhs = [&](double t) {
            return std::pow(body.f(t) * body.f(t), j) * std::pow(t, tpow);
        };
        auto rhs = [&](double t) {
            return std::pow(1.0 - t * t, j) * std::pow(t, tpow);
        };
        const double a = integrate_adaptive(lhs, -xb, xb, 1e-13, 1e-15);
        const double b = integrate_adaptive(rhs, -xb, xb, 1e-13, 1e-15);
        worst = std::max(worst, std::abs(a - b));
    }
    return worst;
}

}  // namespace

EvenBuild build_even_body(int dim, double tau, double amplitude,
                          bool auto_amplitude, int grid_n) {
    if (dim < 4 || dim % 2 != 0)
        throw ParameterError("build_even_body: dim must be even and >= 4");
    if (!(tau > 0.0 && tau < 0.25))
        throw ParameterError("build_even_body: tau outside (0, 1/4)");
    const int n = dim / 2;

    double A = amplitude;
    std::string last_fail = "unset";
    for (int attempt = 0; attempt < 16; ++attempt) {
        const Bump bump = make_bump(tau, A, n + 2);
        const EvenSystem sys = assemble_even_system(dim, bump);
        try {
            StateZ st = march_backward(sys, even_march_grid(tau, grid_n));
            StateZ st2 = march_backward(sys, even_march_grid(tau, 2 * grid_n));
            double dd = 0.0;
            for (size_t i = 0; i < st.s.size(); ++i)
                for (int k = 0; k < 4; ++k)
                    dd = std::max(dd, std::abs(st.Z[i][k] - st2.Z[2 * i][k]));
            if (dd > 1e-9) {
                last_fail = "grid refinement disagreement";
                throw ConstructionError("march", last_fail, dd);
            }
            if (st.max_dev_tail > 1e-10) {
                last_fail = "state leaves the ball on [1-tau, 1]";
                throw ConstructionError("march", last_fail, st.max_dev_tail);
            }
            const ReturnReport rep = check_return_to_circle(st2, tau, n);
            if (rep.max_chart_deviation > 1e-8) {
                last_fail = "no return to the semicircle";
                throw ConstructionError("march", last_fail,
                                        rep.max_chart_deviation);
            }

            EvenBuild out;
            out.chart = snapped_chart(st2, bump);
            out.body = profile_from_charts(out.chart, std::nullopt, dim, tau, A);
            out.state = std::move(st2);
            out.bump = bump;
            out.amplitude = A;
            out.grid_doubling_dev = dd;
            out.ret = rep;
            out.backoff_steps = attempt;
            out.concavity = out.body.concavity_margin();
            if (out.concavity <= 1e-6) {
                last_fail = "concavity margin too small";
                throw ConstructionError("assembly", last_fail, out.concavity);
            }
            out.devenm_residual =
                devenm_ladder_residual(out.body, sys.s_lo(), n);
            if (out.devenm_residual > 1e-9) {
                last_fail = "moment ladder residual too large";
                throw ConstructionError("assembly", last_fail,
                                        out.devenm_residual);
            }
            return out;
        } catch (const ConstructionError& e) {
            last_fail = e.what();
            if (!auto_amplitude) throw;
            A *= 0.5;
        }
    }
    throw ConstructionError("build_even_body",
                            "amplitude back-off exhausted: " + last_fail);
}

}  // namespace ulam
