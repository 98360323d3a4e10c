#pragma once

#include <functional>
#include <vector>

namespace liouville {

/// An analytic function of one variable bundled with its first three
/// derivatives. Group generators, solution building blocks and invariance
/// tests all need derivative access without finite-difference noise, so the
/// derivatives are carried explicitly rather than approximated.
struct SmoothFn1D {
    std::function<double(double)> eval;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
    std::function<double(double)> d3;

    double operator()(double t) const { return eval(t); }
};

/// f(t) = c.
SmoothFn1D constant_fn(double c);

/// f(t) = t^n for n >= 0.
SmoothFn1D monomial(int n);

/// f(t) = coeffs[0] + coeffs[1] t + ... (low-to-high degree).
SmoothFn1D polynomial(std::vector<double> coeffs);

/// f(t) = amp * exp(rate * t).
SmoothFn1D exp_scaled(double amp, double rate);

/// f(t) = exp(a2 t^2 + a1 t + a0).
SmoothFn1D exp_quadratic(double a2, double a1, double a0);

/// f(t) = atan(beta * t).
SmoothFn1D atan_scaled(double beta);

/// g(t) = f(t + shift).
SmoothFn1D shifted(SmoothFn1D f, double shift);

/// g(t) = f(t) + c.
SmoothFn1D plus_const(SmoothFn1D f, double c);

/// g(t) = c * f(t).
SmoothFn1D scaled(SmoothFn1D f, double c);

}  // namespace liouville
