#include "pbcov/specfun.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace pbcov::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Series/iteration cutoffs.  The argument shapes this library actually
// produces converge in well under a hundred terms; the caps only bound
// pathological inputs.
constexpr int kMaxSeriesTerms = 2000;
constexpr double kSeriesEps = 1.0e-16;

std::string describe(const char* fn, double a, double b, double c, Complex z) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s(a=%g, b=%g, c=%g, z=%g%+gi)", fn, a, b, c,
                  z.real(), z.imag());
    return buf;
}

bool near_integer(double x, double tol = 1.0e-9) {
    return std::abs(x - std::round(x)) < tol;
}

// Maclaurin series sum_n (a)_n (b)_n / ((c)_n n!) z^n.  Caller guarantees
// |z| is small enough for geometric decay.
Complex series_2f1(double a, double b, double c, Complex z) {
    Complex sum = 1.0;
    Complex term = 1.0;
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
        if (c + n == 0.0)
            throw no_convergence(describe("gauss_2f1: c is a nonpositive integer", a, b, c, z));
        term *= (a + n) * (b + n) / ((c + n) * (1.0 + n)) * z;
        sum += term;
        if (std::abs(term) < kSeriesEps * (1.0 + std::abs(sum)))
            return sum;
        // terminating polynomial case (a or b a nonpositive integer)
        if (term == Complex(0.0))
            return sum;
    }
    throw no_convergence(describe("gauss_2f1: series did not converge", a, b, c, z));
}

// F(1, beta; beta+1; z) for |z| >= 1.4, z off [1, inf).  This is
// beta * Phi-like inverse-argument expansion: the exact identity
//   F(1, beta; beta+1; z) = beta [ pi (-z)^-beta / sin(pi beta)
//                                  + sum_{j>=1} z^-j / (j - beta) ]
// where the j = p term and the sine term form a removable pair when beta
// approaches a positive integer p; near that point both are replaced by
// their joint expansion in eps = beta - p to avoid catastrophic
// cancellation.
Complex inverse_base(double beta, Complex z) {
    const long p = std::lround(beta);
    const double eps = beta - static_cast<double>(p);
    const Complex zi = 1.0 / z;

    Complex total = 0.0;
    Complex term = 1.0;
    for (int j = 1; j < kMaxSeriesTerms; ++j) {
        term *= zi;
        if (j == p && p >= 1)
            continue;  // handled jointly with the sine factor below
        total += term / (static_cast<double>(j) - beta);
        if (std::abs(term) < kSeriesEps * (1.0 + std::abs(total)))
            break;
    }

    if (p >= 1 && std::abs(eps) < 1.0e-5) {
        // z^-p [ -L + eps (L^2/2 + pi^2/6) - eps^2 (L^3/6 + pi^2 L / 6) ],
        // L = Log(-z): the eps-expansion of pi(-z)^-beta/sin(pi beta)
        // plus z^-p/(p - beta).
        const Complex L = std::log(-z);
        const Complex pair = -L + eps * (L * L / 2.0 + kPi * kPi / 6.0)
                             - eps * eps * (L * L * L / 6.0 + kPi * kPi * L / 6.0);
        return beta * (std::pow(z, -static_cast<double>(p)) * pair + total);
    }

    const Complex sine = kPi * std::pow(-z, -beta) / std::sin(kPi * beta);
    if (p >= 1)
        total += std::pow(zi, static_cast<double>(p)) / (static_cast<double>(p) - beta);
    return beta * (sine + total);
}

// F(a, b; b+1; z) for positive integer a, via the base function at
// (1, b-a+1) and the contiguous recursion
//   F(j+1, b-a+j+1; b-a+j+2; z)
//     = (b-a+j+1)/(j z) [ (1-z)^-j - F(j, b-a+j; b-a+j+1; z) ]
// which raises both parameters together back up to (a, b).
Complex inverse_ladder(long a, double b, Complex z) {
    Complex f = inverse_base(b - static_cast<double>(a) + 1.0, z);
    for (long j = 1; j < a; ++j) {
        const double bj = b - static_cast<double>(a) + static_cast<double>(j) + 1.0;
        f = bj / (static_cast<double>(j) * z) *
            (std::pow(1.0 - z, -static_cast<double>(j)) - f);
    }
    return f;
}

// Generic inverse-argument formula (Abramowitz & Stegun 15.3.7), usable
// when b - a is not an integer and neither c-a nor c-b hits a pole.
Complex inverse_generic(double a, double b, double c, Complex z) {
    const double g1 = std::tgamma(c) * std::tgamma(b - a) / (std::tgamma(b) * std::tgamma(c - a));
    const double g2 = std::tgamma(c) * std::tgamma(a - b) / (std::tgamma(a) * std::tgamma(c - b));
    if (!std::isfinite(g1) || !std::isfinite(g2))
        throw no_convergence(describe("gauss_2f1: gamma pole in inversion formula", a, b, c, z));
    const Complex zi = 1.0 / z;
    const Complex f1 = series_2f1(a, 1.0 - c + a, 1.0 - b + a, zi);
    const Complex f2 = series_2f1(b, 1.0 - c + b, 1.0 - a + b, zi);
    return g1 * std::pow(-z, -a) * f1 + g2 * std::pow(-z, -b) * f2;
}

} // namespace

double ln_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("ln_gamma: requires x > 0");
    return std::lgamma(x);
}

double upper_incomplete_gamma(double a, double x) {
    if (!(a > 0.0))
        throw std::domain_error("upper_incomplete_gamma: requires a > 0");
    if (!(x >= 0.0))
        throw std::domain_error("upper_incomplete_gamma: requires x >= 0");
    if (x == 0.0)
        return std::exp(ln_gamma(a));

    const double lg = ln_gamma(a);
    if (x < a + 1.0) {
        // Lower regularized series P(a,x), then Gamma(a,x) = (1-P) Gamma(a).
        double term = 1.0 / a;
        double sum = term;
        for (int n = 1; n < kMaxSeriesTerms; ++n) {
            term *= x / (a + n);
            sum += term;
            if (std::abs(term) < std::abs(sum) * kSeriesEps) {
                const double p = sum * std::exp(-x + a * std::log(x) - lg);
                return std::exp(lg) * (1.0 - p);
            }
        }
        throw no_convergence("upper_incomplete_gamma: series did not converge");
    }

    // Modified Lentz evaluation of the continued fraction for Q(a,x).
    const double tiny = std::numeric_limits<double>::min() / kSeriesEps;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxSeriesTerms; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kSeriesEps)
            return std::exp(-x + a * std::log(x)) * h;
    }
    throw no_convergence("upper_incomplete_gamma: continued fraction did not converge");
}

Complex gauss_2f1(double a, double b, double c, Complex z) {
    if (z.imag() == 0.0 && z.real() >= 1.0)
        throw std::domain_error(describe("gauss_2f1: z on the branch cut", a, b, c, z));
    if (z == Complex(0.0) || a == 0.0 || b == 0.0)
        return 1.0;

    if (std::abs(z) <= 0.85)
        return series_2f1(a, b, c, z);

    // Pfaff: F(a,b;c;z) = (1-z)^-a F(a, c-b; c; z/(z-1)), which maps the
    // left half of the plane into the unit disk.
    const Complex w = z / (z - 1.0);
    if (std::abs(w) <= 0.85)
        return std::pow(1.0 - z, -a) * series_2f1(a, c - b, c, w);

    if (std::abs(z) >= 1.4) {
        if (near_integer(c - b - 1.0) && near_integer(a) && a >= 1.0)
            return inverse_ladder(std::lround(a), b, z);
        if (!near_integer(b - a))
            return inverse_generic(a, b, c, z);
    }

    throw no_convergence(describe("gauss_2f1: argument outside supported regions", a, b, c, z));
}

DerivativeStack assemble_exp_derivatives(const DerivativeStack& g_derivs) {
    if (g_derivs.values.empty())
        throw std::domain_error("assemble_exp_derivatives: empty derivative stack");

    const int order = g_derivs.order();
    DerivativeStack h;
    h.values.resize(g_derivs.values.size());

    const Complex h0 = std::exp(g_derivs.values[0]);
    if (!std::isfinite(h0.real()) || !std::isfinite(h0.imag()))
        throw no_convergence("assemble_exp_derivatives: exp(g) overflowed");
    h.values[0] = h0;

    // h = exp(g) satisfies h' = g' h, so Leibniz on the product gives
    //   h^(n) = sum_{k=0}^{n-1} C(n-1, k) g^(n-k) h^(k),
    // the complete-Bell-polynomial recursion.
    for (int n = 1; n <= order; ++n) {
        Complex acc = 0.0;
        double binom = 1.0;  // C(n-1, k), updated multiplicatively
        for (int k = 0; k <= n - 1; ++k) {
            acc += binom * g_derivs.values[static_cast<std::size_t>(n - k)] *
                   h.values[static_cast<std::size_t>(k)];
            binom *= static_cast<double>(n - 1 - k) / static_cast<double>(k + 1);
        }
        h.values[static_cast<std::size_t>(n)] = acc;
    }
    return h;
}

} // namespace pbcov::specfun
