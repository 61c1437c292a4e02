// Special functions backing the correlation kernels: complex log-gamma and
// digamma, Gauss 2F1 at nonpositive real argument, integer-order Bessel J,
// the Airy function, Kummer U and the Whittaker W function.
//
// Everything is self-contained (series, recurrences, quadrature); no
// external special-function library is involved, so results are
// reproducible bit for bit under a fixed PrecisionPolicy.
#pragma once

#include <complex>
#include <functional>

namespace zm {

struct PrecisionPolicy {
  double target_rel_error = 1e-12;
  int max_terms = 10000;
  int quadrature_nodes = 512;

  static PrecisionPolicy from_env();  // honors ZMEASURE_PRECISION
};

using Complex = std::complex<double>;

// Principal branch; throws at nonpositive integers.
Complex log_gamma(Complex z);
double log_gamma_real(double x);  // x > 0

struct SignedLogGamma {
  double log_abs;
  int sign;  // 0 at a pole (so 1/Gamma = 0)
};
SignedLogGamma signed_log_gamma(double x);  // any real x

Complex digamma(Complex z);
double digamma_real(double x);

// F(a,b;c;w) for real w <= 0, via the Pfaff transform
//   F(a,b;c;w) = (1-w)^{-a} F(a, c-b; c; w/(w-1)),
// whose series argument xi = w/(w-1) lies in [0,1).  Throws when c is a
// nonpositive integer or xi > 0.95.
Complex gauss_2f1(Complex a, Complex b, Complex c, double w,
                  const PrecisionPolicy& pol = {});

// Plain power series, |w| < 1; used as an independent route in tests.
Complex gauss_2f1_series(Complex a, Complex b, Complex c, double w,
                         const PrecisionPolicy& pol = {});

struct ValueWithCDeriv {
  Complex value;
  Complex dc;  // partial derivative with respect to c
};
// Value and d/dc, needed for diagonal kernel values on the lattice.
ValueWithCDeriv gauss_2f1_with_dc(Complex a, Complex b, Complex c, double w,
                                  const PrecisionPolicy& pol = {});

// J_m(x), integer m >= 0, x >= 0.  Ascending series where it is
// cancellation-safe, Miller backward recurrence otherwise.
double bessel_j(int m, double x, const PrecisionPolicy& pol = {});

struct AiryValue {
  double ai;   // A(x)
  double aip;  // A'(x)
};
// Maclaurin series with extended-precision accumulation on |x| <= 8,
// asymptotic expansions beyond; |x| <= 20.
AiryValue airy(double x, const PrecisionPolicy& pol = {});

// Kummer U(a,b,x), x > 0.  Integral representation for a > 0, downward
// recurrence in a otherwise; closed Laguerre form at nonpositive integer a.
double hypergeometric_u(double a, double b, double x,
                        const PrecisionPolicy& pol = {});

// W_{kappa,mu}(x) = e^{-x/2} x^{mu+1/2} U(mu-kappa+1/2, 1+2mu, x).
// Enforces the documented domain mu - kappa + 1/2 > 0.
double whittaker_w(double kappa, double mu, double x,
                   const PrecisionPolicy& pol = {});
// Same value without the domain gate (recurrence continuation); the
// Whittaker kernel needs parameters outside the integral-representation
// domain.
double whittaker_w_ext(double kappa, double mu, double x,
                       const PrecisionPolicy& pol = {});

// Composite adaptive Gauss-Legendre on [a,b].
double adaptive_gauss_legendre(const std::function<double(double)>& f, double a,
                               double b, double rel_tol, int max_depth = 14);

}  // namespace zm
