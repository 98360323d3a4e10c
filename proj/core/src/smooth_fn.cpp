#include "liouville/smooth_fn.hpp"

#include <cmath>
#include <utility>

namespace liouville {

SmoothFn1D constant_fn(double c) {
    return {[c](double) { return c; },
            [](double) { return 0.0; },
            [](double) { return 0.0; },
            [](double) { return 0.0; }};
}

SmoothFn1D monomial(int n) {
    auto pow_or_zero = [](double t, int p) { return p < 0 ? 0.0 : std::pow(t, p); };
    return {[n, pow_or_zero](double t) { return pow_or_zero(t, n); },
            [n, pow_or_zero](double t) { return n * pow_or_zero(t, n - 1); },
            [n, pow_or_zero](double t) { return n * (n - 1) * pow_or_zero(t, n - 2); },
            [n, pow_or_zero](double t) { return n * (n - 1) * (n - 2) * pow_or_zero(t, n - 3); }};
}

SmoothFn1D polynomial(std::vector<double> coeffs) {
    // Horner evaluation of the polynomial differentiated `order` times.
    auto horner = [coeffs](double t, int order) {
        double acc = 0.0;
        for (int i = static_cast<int>(coeffs.size()) - 1; i >= order; --i) {
            double fac = 1.0;
            for (int j = 0; j < order; ++j) fac *= static_cast<double>(i - j);
            acc = acc * t + fac * coeffs[static_cast<std::size_t>(i)];
        }
        return acc;
    };
    return {[horner](double t) { return horner(t, 0); },
            [horner](double t) { return horner(t, 1); },
            [horner](double t) { return horner(t, 2); },
            [horner](double t) { return horner(t, 3); }};
}

SmoothFn1D exp_scaled(double amp, double rate) {
    auto d = [amp, rate](double t, int order) {
        return amp * std::pow(rate, order) * std::exp(rate * t);
    };
    return {[d](double t) { return d(t, 0); },
            [d](double t) { return d(t, 1); },
            [d](double t) { return d(t, 2); },
            [d](double t) { return d(t, 3); }};
}

SmoothFn1D exp_quadratic(double a2, double a1, double a0) {
    // E = exp(w), w = a2 t^2 + a1 t + a0:
    //   E'  = w' E, E'' = (w'' + w'^2) E, E''' = (3 w' w'' + w'^3) E.
    auto w = [a2, a1, a0](double t) { return (a2 * t + a1) * t + a0; };
    auto w1 = [a2, a1](double t) { return 2.0 * a2 * t + a1; };
    const double w2 = 2.0 * a2;
    return {[w](double t) { return std::exp(w(t)); },
            [w, w1](double t) { return w1(t) * std::exp(w(t)); },
            [w, w1, w2](double t) { return (w2 + w1(t) * w1(t)) * std::exp(w(t)); },
            [w, w1, w2](double t) {
                const double a = w1(t);
                return (3.0 * a * w2 + a * a * a) * std::exp(w(t));
            }};
}

SmoothFn1D atan_scaled(double beta) {
    // f = atan(b t): f' = b/(1+s^2), f'' = -2 s b^2/(1+s^2)^2,
    // f''' = b^3 (6 s^2 - 2)/(1+s^2)^3 with s = b t.
    return {[beta](double t) { return std::atan(beta * t); },
            [beta](double t) {
                const double s = beta * t;
                return beta / (1.0 + s * s);
            },
            [beta](double t) {
                const double s = beta * t;
                const double q = 1.0 + s * s;
                return -2.0 * s * beta * beta / (q * q);
            },
            [beta](double t) {
                const double s = beta * t;
                const double q = 1.0 + s * s;
                return beta * beta * beta * (6.0 * s * s - 2.0) / (q * q * q);
            }};
}

SmoothFn1D shifted(SmoothFn1D f, double shift) {
    return {[f = f.eval, shift](double t) { return f(t + shift); },
            [f = f.d1, shift](double t) { return f(t + shift); },
            [f = f.d2, shift](double t) { return f(t + shift); },
            [f = f.d3, shift](double t) { return f(t + shift); }};
}

SmoothFn1D plus_const(SmoothFn1D f, double c) {
    return {[f = f.eval, c](double t) { return f(t) + c; }, f.d1, f.d2, f.d3};
}

SmoothFn1D scaled(SmoothFn1D f, double c) {
    return {[f = f.eval, c](double t) { return c * f(t); },
            [f = f.d1, c](double t) { return c * f(t); },
            [f = f.d2, c](double t) { return c * f(t); },
            [f = f.d3, c](double t) { return c * f(t); }};
}

}  // namespace liouville
