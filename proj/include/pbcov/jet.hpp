#pragma once
//
// Truncated Taylor ("jet") arithmetic over real coefficients.  A Jet of
// order L carries f(x0) and the scaled derivatives f^(j)(x0)/j! for
// j = 1..L; arithmetic on Jets propagates all of them exactly (to roundoff),
// which is how the analysis obtains high-order derivatives of the
// interference Laplace exponent without finite differencing.
//
#include <array>
#include <cstddef>

namespace pbcov::specfun {

class Jet {
public:
    // Orders above this are never needed: the derivative order is bounded by
    // the Nakagami shape minus one, and shapes beyond 8 are rejected at
    // parameter validation.
    static constexpr int kMaxOrder = 8;

    // Jet of the identity function x at x0: coefficients (x0, 1, 0, ...).
    static Jet variable(double x0, int order);
    // Jet of the constant v: coefficients (v, 0, ...).
    static Jet constant(double v, int order);

    int order() const { return order_; }
    double operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
    double& operator[](int j) { return c_[static_cast<std::size_t>(j)]; }
    double value() const { return c_[0]; }

    Jet operator+(const Jet& o) const;
    Jet operator-(const Jet& o) const;
    Jet operator*(const Jet& o) const;   // Cauchy product, truncated
    Jet operator*(double k) const;
    Jet operator+(double k) const;
    Jet operator-(double k) const;
    friend Jet operator*(double k, const Jet& j) { return j * k; }
    friend Jet operator-(double k, const Jet& j);

    // Composition: given outer coefficients f[j] = F^(j)(u0)/j! at u0 equal
    // to this jet's value, returns the jet of F(u(x)).  Horner evaluation in
    // the zero-constant part of u.
    static Jet compose(const std::array<double, kMaxOrder + 1>& f, const Jet& u);

private:
    int order_ = 0;
    std::array<double, kMaxOrder + 1> c_{};
};

// u^alpha for real alpha; requires u.value() > 0.
Jet pow(const Jet& u, double alpha);
// 1/u; requires u.value() != 0.
Jet recip(const Jet& u);
// e^u.
Jet exp(const Jet& u);

// Jet of 2F1(a, b; c; z(x)) through a Jet-valued argument z.  The outer
// coefficients come from the contiguous derivative relation
// d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1,b+1;c+1;z), so each coefficient is one
// scalar 2F1 evaluation at z.value().  Requires z.value() real (off-cut).
Jet hyp2f1_jet(double a, double b, double c, const Jet& z);

} // namespace pbcov::specfun
