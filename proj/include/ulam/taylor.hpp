#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>

namespace ulam {

/// Truncated Taylor jet of a smooth function at a fixed expansion point.
///
/// A Jet of length m stores coefficients c[0..m-1] of
///   f(s0 + e) = sum_k c[k] e^k + O(e^m),
/// so c[k] = f^(k)(s0)/k!. Arithmetic on jets propagates derivatives
/// exactly (forward-mode AD on a single scalar variable). The length is a
/// runtime parameter bounded by kMaxLen; all operands of a binary op must
/// have equal length.
class Jet {
public:
    static constexpr int kMaxLen = 14;

    Jet() : n_(1) { c_[0] = 0.0; }

    static Jet constant(double v, int len) {
        Jet j(len);
        j.c_[0] = v;
        return j;
    }

    /// The identity function s at expansion point s0.
    static Jet variable(double s0, int len) {
        Jet j(len);
        j.c_[0] = s0;
        if (len > 1) j.c_[1] = 1.0;
        return j;
    }

    explicit Jet(int len) : n_(len) {
        assert(len >= 1 && len <= kMaxLen);
        c_.fill(0.0);
    }

    int length() const { return n_; }
    double operator[](int k) const { return c_[k]; }
    double& operator[](int k) { return c_[k]; }

    double value() const { return c_[0]; }

    /// k-th derivative at the expansion point: k! * c[k].
    double derivative(int k) const {
        double f = 1.0;
        for (int i = 2; i <= k; ++i) f *= i;
        return c_[k] * f;
    }

    Jet operator-() const {
        Jet r(n_);
        for (int k = 0; k < n_; ++k) r.c_[k] = -c_[k];
        return r;
    }

    friend Jet operator+(const Jet& a, const Jet& b) {
        assert(a.n_ == b.n_);
        Jet r(a.n_);
        for (int k = 0; k < a.n_; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        assert(a.n_ == b.n_);
        Jet r(a.n_);
        for (int k = 0; k < a.n_; ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        assert(a.n_ == b.n_);
        Jet r(a.n_);
        for (int k = 0; k < a.n_; ++k) {
            double s = 0.0;
            for (int j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
            r.c_[k] = s;
        }
        return r;
    }

    friend Jet operator+(const Jet& a, double b) {
        Jet r = a;
        r.c_[0] += b;
        return r;
    }
    friend Jet operator+(double b, const Jet& a) { return a + b; }
    friend Jet operator-(const Jet& a, double b) { return a + (-b); }
    friend Jet operator-(double b, const Jet& a) { return (-a) + b; }
    friend Jet operator*(const Jet& a, double b) {
        Jet r(a.n_);
        for (int k = 0; k < a.n_; ++k) r.c_[k] = a.c_[k] * b;
        return r;
    }
    friend Jet operator*(double b, const Jet& a) { return a * b; }
    friend Jet operator/(const Jet& a, double b) { return a * (1.0 / b); }

    /// Division a/b, requires b[0] != 0.
    friend Jet operator/(const Jet& a, const Jet& b) {
        assert(a.n_ == b.n_);
        Jet r(a.n_);
        const double inv = 1.0 / b.c_[0];
        for (int k = 0; k < a.n_; ++k) {
            double s = a.c_[k];
            for (int j = 0; j < k; ++j) s -= r.c_[j] * b.c_[k - j];
            r.c_[k] = s * inv;
        }
        return r;
    }

    /// Truncated composition-free derivative of the jet as a function:
    /// returns the jet of f', one coefficient shorter conceptually but
    /// kept at the same length with a trailing zero.
    Jet derivative_jet() const {
        Jet r(n_);
        for (int k = 0; k + 1 < n_; ++k) r.c_[k] = (k + 1) * c_[k + 1];
        r.c_[n_ - 1] = 0.0;
        return r;
    }

private:
    std::array<double, kMaxLen> c_{};
    int n_;
};

inline Jet sqrt(const Jet& a) {
    assert(a[0] > 0.0);
    Jet r(a.length());
    r[0] = std::sqrt(a[0]);
    const double inv2r0 = 0.5 / r[0];
    for (int k = 1; k < a.length(); ++k) {
        double s = a[k];
        for (int j = 1; j < k; ++j) s -= r[j] * r[k - j];
        r[k] = s * inv2r0;
    }
    return r;
}

inline Jet exp(const Jet& a) {
    Jet r(a.length());
    r[0] = std::exp(a[0]);
    for (int k = 1; k < a.length(); ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += j * a[j] * r[k - j];
        r[k] = s / k;
    }
    return r;
}

inline Jet pow_int(const Jet& a, int p) {
    assert(p >= 0);
    Jet r = Jet::constant(1.0, a.length());
    Jet base = a;
    while (p > 0) {
        if (p & 1) r = r * base;
        base = base * base;
        p >>= 1;
    }
    return r;
}

/// a^e for real e, requires a[0] > 0. Uses r' a = e r a'.
inline Jet pow_real(const Jet& a, double e) {
    assert(a[0] > 0.0);
    Jet r(a.length());
    r[0] = std::pow(a[0], e);
    for (int k = 1; k < a.length(); ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j)
            s += (e * j - (k - j)) * a[j] * r[k - j];
        r[k] = s / (k * a[0]);
    }
    return r;
}

}  // namespace ulam
