#pragma once

// Real-argument special functions used by every profile and constant in the
// library: Gamma, Riemann/Hurwitz zeta, incomplete gamma, the W-Whittaker
// function, half-integer K-Bessel, non-positive-order polylogarithms.
//
// All routines are deterministic pure maps on doubles.  Accuracy targets come
// from EvalConfig (default 1e-12 relative); everything here is desk-scale.

#include "skewlift/common.hpp"

namespace skewlift::specfun {

// Euler Gamma via a 15-term Lanczos approximation, reflection for s < 1/2.
// Throws PoleError at s in {0,-1,-2,...}.
double gamma(double s);

// 1/Gamma(s); returns 0 at the poles of Gamma.
double reciprocal_gamma(double s);

// log |Gamma(s)| for s > 0.
double log_gamma(double s);

// Riemann zeta for s > 1 (Euler-Maclaurin).  DomainError for s <= 1.
double riemann_zeta(double s, const EvalConfig& cfg = {});

// Hurwitz zeta(s, a) = sum_{n>=0} (n+a)^{-s} for s > 1, a in (0, 1].
double hurwitz_zeta(double s, double a, const EvalConfig& cfg = {});

// erfc with ~1e-14 relative accuracy (series for small x, continued fraction
// for large, switch at x = 2).
double erfc(double x);

// Upper incomplete gamma Gamma(s, x) for x > 0 and s integer or half-integer.
// Seeded at Gamma(1,x) = e^{-x} and Gamma(1/2,x) = sqrt(pi) erfc(sqrt(x));
// upward recurrence Gamma(s+1,x) = s Gamma(s,x) + x^s e^{-x}, downward
// Gamma(s,x) = (Gamma(s+1,x) - x^s e^{-x}) / s.
double upper_incomplete_gamma(double s, double x);

// Kummer U(a, b, x) for a >= 0, x > 0 via the Laplace integral
//   U(a,b,x) = Gamma(a)^{-1} int_0^inf e^{-xt} t^{a-1} (1+t)^{b-a-1} dt,
// U(0,b,x) = 1.  Adaptive composite Gauss-Legendre with panel doubling.
double kummer_u(double a, double b, double x, const EvalConfig& cfg = {});

// W-Whittaker function W_{kappa,mu}(x) = e^{-x/2} x^{mu+1/2} U(a, 1+2mu, x),
// a = mu - kappa + 1/2 >= 0, x > 0.
double whittaker_w(double kappa, double mu, double x, const EvalConfig& cfg = {});

// log of W_{kappa,mu}(x) (the function is positive for the parameter ranges
// used here); keeps huge arguments representable.
double log_whittaker_w(double kappa, double mu, double x, const EvalConfig& cfg = {});

// K_{n+1/2}(x), closed form
//   sqrt(pi/(2x)) e^{-x} sum_{j=0}^n (n+j)! / (j! (n-j)!) (2x)^{-j}.
double bessel_k_half(int n, double x);

// Li_s(h) for s <= 0 via Li_0(h) = h/(1-h) and Li_{s-1} = h d/dh Li_s
// (rational closed form with Eulerian-number coefficients).
cplx polylog_nonpositive(int s, cplx h);

// Rising factorial a (a+1) ... (a+n-1); empty product = 1.
double pochhammer(double a, int n);

}  // namespace skewlift::specfun
