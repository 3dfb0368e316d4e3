#pragma once

// Evaluation of zeta(s), zeta'/zeta(s), the branch of log zeta(s) obtained by
// horizontal continuation from Re s = 2, the Riemann-Siegel Z and theta
// functions, and the argument function S(t).
//
// Region: 0.4 <= sigma <= 3, |t| <= 1e6.  Euler-Maclaurin summation is used
// for every sigma when |t| <= 1e4; above that height values on the critical
// line come from the Riemann-Siegel formula with corrections C0, C1, C2.

#include <complex>
#include <optional>
#include <string_view>

namespace zetalab {

class ZeroCatalog;

using Complex = std::complex<double>;

inline constexpr double kSigmaMin = 0.4;
inline constexpr double kSigmaMax = 3.0;
inline constexpr double kTFloor = 14.0;
inline constexpr double kTMax = 1.0e6;
inline constexpr double kEulerMaclaurinMaxT = 1.0e4;
inline constexpr double kDefaultZeroGuard = 1.0e-3;

enum class EvalMethod { euler_maclaurin, riemann_siegel, dirichlet_tail };

std::string_view to_string(EvalMethod method);

/// A point sigma + i t of the evaluation region.
///
/// `min_zero_distance` is the distance from s to the nearest catalogued zero;
/// it stays empty until `with_zero_distance` fills it.
struct EvalPoint {
  double sigma = 2.0;
  double t = 0.0;
  std::optional<double> min_zero_distance;

  /// Validates 0.4 <= sigma <= 3 and |t| <= 1e6; throws DomainError otherwise.
  static EvalPoint make(double sigma, double t);

  Complex s() const { return {sigma, t}; }
  EvalPoint conj() const { return {sigma, -t, min_zero_distance}; }
  EvalPoint with_zero_distance(const ZeroCatalog& catalog) const;
};

/// Value with an additive truncation-plus-rounding error estimate.
struct EvalResult {
  Complex value;
  double abs_error_bound = 0.0;
  EvalMethod method = EvalMethod::euler_maclaurin;
};

/// zeta(s).
EvalResult zeta(const EvalPoint& s);

/// zeta(s) and zeta'(s) from one Euler-Maclaurin pass.
struct ZetaAndDerivative {
  EvalResult value;
  EvalResult derivative;
};
ZetaAndDerivative zeta_with_derivative(const EvalPoint& s);

/// Partial Dirichlet series sum_{n <= n_terms} n^{-s} with the integral tail
/// bound; requires sigma > 1.  Independent of the Euler-Maclaurin path.
EvalResult zeta_dirichlet_tail(const EvalPoint& s, long n_terms);

/// Riemann-Siegel theta(t) = arg Gamma(1/4 + it/2) - (t/2) log pi, t >= 7.
double theta_rs(double t);

/// theta_rs'(t).
double theta_rs_derivative(double t);

/// Z(t) = exp(i theta(t)) zeta(1/2 + it) for t >= 14 (value is real).
EvalResult riemann_siegel_Z(double t);

/// Z(t) without the t >= 14 floor; used by the zero scanner for window
/// samples just outside a user range.  Requires t >= 7.
EvalResult hardy_z_unchecked(double t);

struct LogZetaOptions {
  double zero_guard = kDefaultZeroGuard;
  double max_step = 0.05;
  double min_step = 1.0e-9;
  /// Largest accepted change of arg zeta between consecutive path nodes.
  double max_arg_step = 0.35;
};

/// log zeta(s) continued along the segment 2 + it -> sigma + it, principal
/// at 2 + it.  Throws NearZeroError when s is within `zero_guard` of a
/// catalogued zero and BranchTrackError when the path cannot be certified.
/// Requires |t| >= 14.
EvalResult log_zeta(const EvalPoint& s, const ZeroCatalog& catalog,
                    const LogZetaOptions& options = {});

/// zeta'/zeta(s).  The catalog overload enforces the zero guard.
EvalResult zeta_log_deriv(const EvalPoint& s);
EvalResult zeta_log_deriv(const EvalPoint& s, const ZeroCatalog& catalog,
                          double zero_guard = kDefaultZeroGuard);

/// S(t) = Im log zeta(1/2 + it) / pi.
double s_of_t(double t, const ZeroCatalog& catalog,
              const LogZetaOptions& options = {});

}  // namespace zetalab
