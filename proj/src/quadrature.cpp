#include "ulam/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ulam {

namespace {

struct GlRule {
    std::vector<double> x, w;
};

// Newton iteration on P_n with the standard three-term recurrence.
GlRule make_gl(int n) {
    GlRule r;
    r.x.resize(n);
    r.w.resize(n);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    return r;
}

const GlRule& gl_rule(int n) {
    static std::map<int, GlRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gl(n)).first;
    return it->second;
}

// Gauss-Kronrod 7-15 abscissae/weights (positive half).
const double kGkX[8] = {0.991455371120813, 0.949107912342759,
                        0.864864423359769, 0.741531185599394,
                        0.586087235467691, 0.405845151377397,
                        0.207784955007898, 0.0};
const double kGkWk[8] = {0.022935322010529, 0.063092092629979,
                         0.104790010322250, 0.140653259715525,
                         0.169004726639267, 0.190350578064785,
                         0.204432940075298, 0.209482141084728};
const double kGkWg[4] = {0.129484966168870, 0.279705391489277,
                         0.381830050505119, 0.417959183673469};

void gk15(const std::function<double(double)>& f, double a, double b,
          double& result, double& err) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double k15 = 0.0, g7 = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = half * kGkX[i];
        double v;
        if (i == 7) {
            v = f(mid);
            k15 += kGkWk[7] * v;
            g7 += kGkWg[3] * v;
        } else {
            v = f(mid - dx) + f(mid + dx);
            k15 += kGkWk[i] * v;
            if (i % 2 == 1) g7 += kGkWg[i / 2] * v;
        }
    }
    result = k15 * half;
    err = std::abs((k15 - g7) * half);
}

double adaptive_rec(const std::function<double(double)>& f, double a, double b,
                    double tol, int depth, int max_depth, int& budget) {
    double r, e;
    gk15(f, a, b, r, e);
    if (e <= tol || depth >= max_depth || budget <= 0) return r;
    budget -= 2;
    const double mid = 0.5 * (a + b);
    return adaptive_rec(f, a, mid, 0.5 * tol, depth + 1, max_depth, budget) +
           adaptive_rec(f, mid, b, 0.5 * tol, depth + 1, max_depth, budget);
}

}  // namespace

const std::vector<double>& gl_nodes(int n) { return gl_rule(n).x; }
const std::vector<double>& gl_weights(int n) { return gl_rule(n).w; }

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol, double abs_tol,
                          int max_depth) {
    if (a == b) return 0.0;
    double r0, e0;
    gk15(f, a, b, r0, e0);
    const double tol = std::max(abs_tol, rel_tol * std::abs(r0));
    if (e0 <= tol) return r0;
    int budget = 20000;
    return adaptive_rec(f, a, b, tol, 0, max_depth, budget);
}

double integrate_sqrt_endpoints(const std::function<double(double)>& f,
                                double a, double b, double rel_tol,
                                double abs_tol) {
    if (!(b > a)) return 0.0;
    const double mid = 0.5 * (a + b);
    const double va = std::sqrt(mid - a), vb = std::sqrt(b - mid);
    auto left = [&](double v) { return 2.0 * v * f(a + v * v); };
    auto right = [&](double v) { return 2.0 * v * f(b - v * v); };
    return integrate_adaptive(left, 0.0, va, rel_tol, abs_tol) +
           integrate_adaptive(right, 0.0, vb, rel_tol, abs_tol);
}

}  // namespace ulam
