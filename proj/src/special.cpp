#include "ulam/special.hpp"

#include <cmath>
#include <stdexcept>

namespace ulam {

double ball_volume(int m) {
    if (m < 0) throw std::invalid_argument("ball_volume: negative dimension");
    if (m == 0) return 1.0;
    return std::pow(kPi, 0.5 * m) / std::tgamma(0.5 * m + 1.0);
}

double sphere_area(int m) {
    // |S^m| = (m+1) kappa_{m+1}
    return (m + 1) * ball_volume(m + 1);
}

double coordinate_second_moment(int m) { return ball_volume(m) / (m + 2); }

namespace {

// Continued fraction for the incomplete beta function (Lentz).
double betacf(double a, double b, double x) {
    const int kMaxIter = 300;
    const double eps = 1e-16, fpmin = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0, d = 1.0 - qab * x / qap;
    if (std::abs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    return h;
}

}  // namespace

double betainc_reg(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double lnfront = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
    const double front = std::exp(lnfront);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double ball_cap_fraction(int m, double c) {
    if (c <= -1.0) return 0.0;
    if (c >= 1.0) return 1.0;
    const double p = 0.5 * (m + 1);
    return betainc_reg(p, p, 0.5 * (1.0 + c));
}

double ball_cap_coordinate_moment(int m, double c) {
    if (c <= -1.0) return 0.0;
    const double cc = std::min(c, 1.0);
    const double one_minus = 1.0 - cc * cc;
    return -ball_volume(m - 1) * std::pow(one_minus, 0.5 * (m + 1)) / (m + 1);
}

double symmetric_power_integral(double p) {
    // int_{-1}^1 (1-u^2)^p du = B(p+1, 1/2) = sqrt(pi) Gamma(p+1)/Gamma(p+3/2)
    return std::sqrt(kPi) * std::exp(std::lgamma(p + 1.0) -
                                     std::lgamma(p + 1.5));
}

}  // namespace ulam
