#pragma once

// Independent reference computations.  None of these call into the library's
// numerical code paths; they use the plainest formula that reaches the
// required accuracy.

#include <complex>
#include <vector>

#include "zetalab/zero_catalog.hpp"

namespace oracle {

using Complex = std::complex<double>;

/// zeta(s) and zeta'(s) by direct summation to N plus four Euler-Maclaurin
/// tail terms, N = max(2000, 20 |t|).  Valid for sigma > 0, s != 1.
struct ZetaPair {
  Complex value;
  Complex derivative;
};
ZetaPair zeta(Complex s);

/// Riemann-Siegel theta from its Stirling expansion (t >= 10).
double theta(double t);

/// Re(e^{i theta(t)} zeta(1/2 + it)).
double hardy_z(double t);

/// Root of hardy_z in [lo, hi] by plain bisection (sign change required).
double bisect_zero(double lo, double hi);

/// Lambda(n) by trial division.
double mangoldt(long n);

/// sum_{2 <= n <= x^2} Lambda_x(n) n^{-s}, optionally divided by log n,
/// written straight from the piecewise definition.
Complex dirichlet(Complex s, double x, bool over_log_n);

/// (x/Phi)^a sum_{k=0}^{floor((sigma_A - a) log Phi)} (x^2/Phi)^{(k+1)/log Phi}.
double f_a(double x, double phi, double a, double sigma_A);

/// Zeros of the catalog inside A(x, t): |t - gamma| <= min(t/2, x^{3(beta-1/2)}/sqrt(log x)).
std::vector<zetalab::NontrivialZero> neighborhood(const zetalab::ZeroCatalog& c, double x,
                                                  double t);

/// |sum over rho in A, |beta - 1/2| >= a, |s - rho| > delta_x of
/// (x^{2(rho-s)} - x^{rho-s}) / ((rho-s)^2 log x)|.
double zero1_lhs(const zetalab::ZeroCatalog& c, double t, double x, double a, double sigma);

/// sum over |t - gamma| <= 1, beta >= sigma, |s - rho| > delta_x of Re(-1/(s - rho)).
double zero_real_lhs(const zetalab::ZeroCatalog& c, double t, double x, double sigma);

}  // namespace oracle
