#pragma once
//
// Test-only numerical oracles, independent of the code under test:
//  - adaptive Simpson quadrature for complex-valued integrands,
//  - the direct-integral form of the per-gain spatial Laplace exponent,
//    which the closed-form evaluation must reproduce,
//  - Richardson-extrapolated central differences for checking analytic
//    derivatives of scalar functions.
//
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "pbcov/netmodel.hpp"

namespace oracle {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

namespace detail {

template <typename F>
Complex simpson_rec(F& f, double a, double b, Complex fa, Complex fm, Complex fb,
                    Complex whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const Complex flm = f(lm);
    const Complex frm = f(rm);
    const Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const Complex delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

} // namespace detail

// Adaptive Simpson on [a, b]; eps is an absolute tolerance for the whole
// interval.  The integrands used here are smooth, so the classic
// error-splitting recursion is plenty.
template <typename F>
Complex simpson(F&& f, double a, double b, double eps = 1e-12, int depth = 48) {
    const double m = 0.5 * (a + b);
    const Complex fa = f(a);
    const Complex fm = f(m);
    const Complex fb = f(b);
    const Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_rec(f, a, b, fa, fm, fb, whole, eps, depth);
}

// Spatial Laplace exponent of one beacon/interferer gain state by direct
// quadrature over the disk:
//   T(w) = -2 pi [ (1 - (1 + w r_near^-aL / m)^-m) r_near^2 / 2
//                  + int_{r_near}^{r_min} (1 - (1 + w r^-aL / m)^-m) r dr
//                  + int_{r_min}^{r_max}  (1 - 1/(1 + w beta r^-aN)) r dr ]
// using the Nakagami-m (LOS) and Rayleigh (NLOS) fading Laplace factors
// directly.  A unit-density field then contributes exp(T(w)) to the
// transform, which is what the closed form under test computes.
inline Complex t_quad(Complex w, const pbcov::NetworkParams& p, double eps = 1e-10) {
    const double mm = static_cast<double>(p.m);
    const double beta = p.beta();
    auto los = [&](double r) {
        return (1.0 - std::pow(1.0 + w * std::pow(r, -p.alpha_L) / mm, -mm)) * r;
    };
    auto nlos = [&](double r) {
        return (1.0 - 1.0 / (1.0 + w * beta * std::pow(r, -p.alpha_N))) * r;
    };
    const Complex nearfield =
        (1.0 - std::pow(1.0 + w * std::pow(p.r_near, -p.alpha_L) / mm, -mm)) * 0.5 *
        p.r_near * p.r_near;
    return -2.0 * kPi *
           (nearfield + simpson(los, p.r_near, p.r_min, eps) +
            simpson(nlos, p.r_min, p.r_max, eps));
}

// Central-difference stencil of order `order` (all O(h^2)).
inline long double stencil(const std::function<long double(long double)>& f,
                           long double x, int order, long double h) {
    switch (order) {
    case 1:
        return (f(x + h) - f(x - h)) / (2.0L * h);
    case 2:
        return (f(x + h) - 2.0L * f(x) + f(x - h)) / (h * h);
    case 3:
        return (f(x + 2.0L * h) - 2.0L * f(x + h) + 2.0L * f(x - h) - f(x - 2.0L * h)) /
               (2.0L * h * h * h);
    case 4:
        return (f(x + 2.0L * h) - 4.0L * f(x + h) + 6.0L * f(x) - 4.0L * f(x - h) +
                f(x - 2.0L * h)) /
               (h * h * h * h);
    default:
        return f(x); // order 0
    }
}

// Richardson extrapolation of the O(h^2) stencils: `levels` halvings of h
// remove the h^2, h^4, ... error terms.  Long double accumulation keeps the
// subtraction noise below the extrapolated truncation error for the step
// sizes used in the tests.
inline double richardson_derivative(const std::function<long double(long double)>& f,
                                    double x, int order, double h0, int levels = 3) {
    std::vector<long double> d(static_cast<std::size_t>(levels));
    long double h = h0;
    for (int k = 0; k < levels; ++k) {
        d[static_cast<std::size_t>(k)] = stencil(f, x, order, h);
        h *= 0.5L;
    }
    long double pow4 = 4.0L;
    for (int j = 1; j < levels; ++j) {
        for (int k = levels - 1; k >= j; --k)
            d[static_cast<std::size_t>(k)] =
                (pow4 * d[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(k - 1)]) /
                (pow4 - 1.0L);
        pow4 *= 4.0L;
    }
    return static_cast<double>(d[static_cast<std::size_t>(levels - 1)]);
}

} // namespace oracle
