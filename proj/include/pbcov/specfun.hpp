#pragma once
//
// Special functions needed by the coverage analysis: log-gamma, the upper
// incomplete gamma function, the Gauss hypergeometric function 2F1 for
// complex argument, and the Faa di Bruno / Bell-polynomial assembly of
// derivatives of exp(g) from derivatives of g.
//
#include <complex>
#include <stdexcept>
#include <vector>

namespace pbcov::specfun {

using Complex = std::complex<double>;

// Thrown when an iterative evaluation fails to converge or an intermediate
// quantity over/underflows past recovery.  Distinct from std::domain_error,
// which signals arguments outside a function's domain.
class no_convergence : public std::runtime_error {
public:
    explicit no_convergence(const std::string& what) : std::runtime_error(what) {}
};

// ln Gamma(x) for x > 0.  Relative error <= 1e-12 over the range used here.
double ln_gamma(double x);

// Upper incomplete gamma Gamma(a, x) = integral_x^inf t^(a-1) e^-t dt,
// a > 0, x >= 0.  Series for x < a+1, Lentz continued fraction otherwise.
double upper_incomplete_gamma(double a, double x);

// Gauss hypergeometric 2F1(a, b; c; z) for real parameters and complex z
// off the branch cut [1, inf).  Evaluation strategy:
//   |z| <= 0.85                      Maclaurin series
//   |z/(z-1)| <= 0.85                Pfaff transformation + series
//   |z| >= 1.4, c = b+1, a integer   inverse-argument expansion of the
//                                    base F(1, beta; beta+1; z) plus an
//                                    upward recursion in a (the only
//                                    shapes the coverage model produces)
//   otherwise                        inverse-argument formula when the
//                                    parameter differences permit it
// Throws std::domain_error on the cut, no_convergence if no branch applies.
Complex gauss_2f1(double a, double b, double c, Complex z);

// Ordered derivatives of a scalar function at a point: values[j] holds the
// j-th derivative, j = 0..L (values[0] is the function value).
struct DerivativeStack {
    std::vector<Complex> values;

    int order() const { return static_cast<int>(values.size()) - 1; }
};

// Given g, g', ..., g^(L) at a point, returns exp(g) and its derivatives up
// to order L via the recursion h^(n) = sum_k C(n-1, k) g^(n-k) h^(k) with
// h = exp(g); this is the complete-Bell-polynomial form of Faa di Bruno's
// formula specialised to the exponential.  Throws no_convergence if exp(g)
// overflows.
DerivativeStack assemble_exp_derivatives(const DerivativeStack& g_derivs);

} // namespace pbcov::specfun
