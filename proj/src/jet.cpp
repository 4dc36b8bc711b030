#include "pbcov/jet.hpp"

#include <cmath>
#include <stdexcept>

#include "pbcov/specfun.hpp"

namespace pbcov::specfun {

namespace {

void check_same_order(const Jet& a, const Jet& b) {
    if (a.order() != b.order())
        throw std::logic_error("Jet: mixed orders in arithmetic");
}

void check_order(int order) {
    if (order < 0 || order > Jet::kMaxOrder)
        throw std::domain_error("Jet: order out of range");
}

} // namespace

Jet Jet::variable(double x0, int order) {
    check_order(order);
    Jet j;
    j.order_ = order;
    j.c_[0] = x0;
    if (order >= 1)
        j.c_[1] = 1.0;
    return j;
}

Jet Jet::constant(double v, int order) {
    check_order(order);
    Jet j;
    j.order_ = order;
    j.c_[0] = v;
    return j;
}

Jet Jet::operator+(const Jet& o) const {
    check_same_order(*this, o);
    Jet r = *this;
    for (int i = 0; i <= order_; ++i)
        r.c_[static_cast<std::size_t>(i)] += o.c_[static_cast<std::size_t>(i)];
    return r;
}

Jet Jet::operator-(const Jet& o) const {
    check_same_order(*this, o);
    Jet r = *this;
    for (int i = 0; i <= order_; ++i)
        r.c_[static_cast<std::size_t>(i)] -= o.c_[static_cast<std::size_t>(i)];
    return r;
}

Jet Jet::operator*(const Jet& o) const {
    check_same_order(*this, o);
    Jet r;
    r.order_ = order_;
    for (int i = 0; i <= order_; ++i) {
        double acc = 0.0;
        for (int j = 0; j <= i; ++j)
            acc += c_[static_cast<std::size_t>(j)] * o.c_[static_cast<std::size_t>(i - j)];
        r.c_[static_cast<std::size_t>(i)] = acc;
    }
    return r;
}

Jet Jet::operator*(double k) const {
    Jet r = *this;
    for (int i = 0; i <= order_; ++i)
        r.c_[static_cast<std::size_t>(i)] *= k;
    return r;
}

Jet Jet::operator+(double k) const {
    Jet r = *this;
    r.c_[0] += k;
    return r;
}

Jet Jet::operator-(double k) const {
    Jet r = *this;
    r.c_[0] -= k;
    return r;
}

Jet operator-(double k, const Jet& j) {
    Jet r = j * -1.0;
    r[0] += k;
    return r;
}

Jet Jet::compose(const std::array<double, kMaxOrder + 1>& f, const Jet& u) {
    // Horner in du = u - u0: powers of du reach coefficient index L at
    // most, so the truncated Cauchy products stay exact in the jet sense.
    Jet du = u;
    du.c_[0] = 0.0;
    Jet w = Jet::constant(f[static_cast<std::size_t>(u.order_)], u.order_);
    for (int j = u.order_ - 1; j >= 0; --j) {
        w = w * du;
        w.c_[0] += f[static_cast<std::size_t>(j)];
    }
    return w;
}

Jet pow(const Jet& u, double alpha) {
    if (!(u.value() > 0.0))
        throw std::domain_error("Jet pow: requires a positive value part");
    std::array<double, Jet::kMaxOrder + 1> f{};
    f[0] = std::pow(u.value(), alpha);
    double fac = 1.0;
    for (int j = 1; j <= u.order(); ++j) {
        fac *= (alpha - (j - 1)) / j;
        f[static_cast<std::size_t>(j)] = fac * std::pow(u.value(), alpha - j);
    }
    return Jet::compose(f, u);
}

Jet recip(const Jet& u) {
    if (u.value() == 0.0)
        throw std::domain_error("Jet recip: zero value part");
    std::array<double, Jet::kMaxOrder + 1> f{};
    double p = 1.0 / u.value();
    f[0] = p;
    for (int j = 1; j <= u.order(); ++j) {
        p *= -1.0 / u.value();  // d^j/du^j u^-1 / j! = (-1)^j u^-(j+1)
        f[static_cast<std::size_t>(j)] = p;
    }
    return Jet::compose(f, u);
}

Jet exp(const Jet& u) {
    std::array<double, Jet::kMaxOrder + 1> f{};
    const double e0 = std::exp(u.value());
    double fac = 1.0;
    for (int j = 0; j <= u.order(); ++j) {
        f[static_cast<std::size_t>(j)] = e0 / fac;
        fac *= static_cast<double>(j + 1);
    }
    return Jet::compose(f, u);
}

Jet hyp2f1_jet(double a, double b, double c, const Jet& z) {
    // Outer Taylor coefficients via d/dz F(a,b;c;z) = (ab/c) F(a+1,b+1;c+1;z),
    // applied j times; each coefficient is one scalar evaluation.
    std::array<double, Jet::kMaxOrder + 1> f{};
    double pre = 1.0;
    double fac = 1.0;
    for (int j = 0; j <= z.order(); ++j) {
        const Complex v = gauss_2f1(a + j, b + j, c + j, Complex(z.value(), 0.0));
        f[static_cast<std::size_t>(j)] = pre * v.real() / fac;
        pre *= (a + j) * (b + j) / (c + j);
        fac *= static_cast<double>(j + 1);
    }
    return Jet::compose(f, z);
}

} // namespace pbcov::specfun
