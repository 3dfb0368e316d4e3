#pragma once

// Numerical checks of the local decomposition of log zeta(s) into a sum
// over nearby zeros plus a smoothed prime sum, the Littlewood-type ratios
// on the critical line, and the intermediate zero-sum estimates.

#include <string>
#include <vector>

#include "zetalab/explicit_formula.hpp"
#include "zetalab/sizdc.hpp"
#include "zetalab/zero_catalog.hpp"

namespace zetalab {

enum class DecompositionCase { upper, lower };

std::string_view to_string(DecompositionCase c);

struct DecompositionReport {
  double t = 0.0;
  double x = 0.0;
  double sigma = 0.0;
  double a = 0.0;
  double delta_x = 0.0;
  double sigma_1 = 0.0;  ///< 1/2 + a + delta_x (sigma_x when a = delta_x)
  DecompositionCase kase = DecompositionCase::upper;

  /// upper: sum log|(s - rho)/(delta_x + i(t - gamma))| over |s - rho| <= delta_x;
  /// lower: sum log|(s - rho)/(s_1 - rho)| over |t - gamma| <= delta_x.
  double near_zero_log_sum = 0.0;
  long near_zero_count = 0;
  /// lower only: sum log|(s_1 - rho)/(delta_x + i(t - gamma))| over |s_1 - rho| <= delta_x.
  double shifted_zero_terms = 0.0;
  long shifted_zero_count = 0;
  Complex dirichlet_term;  ///< sum Lambda_x(n) / (n^w log n), w = s or s_1
  Complex lhs_log_zeta;
  Complex residual;  ///< lhs minus every right-side term above

  double y_bound = 0.0;  ///< upper: Y_a(sigma); lower: (sigma_1 - sigma)(1 + a/delta_x)^2 E_a + Y_a(sigma_1)
  double ratio = 0.0;    ///< |residual| / y_bound
  BoundQuantities bounds;  ///< evaluated at sigma (upper) or sigma_1 (lower)

  double sigma_A = 0.5;
  double L = 0.0;
  long neighborhood_size = 0;
  std::string sizdc;
  std::string catalog_id;
  std::vector<std::string> flags;
};

/// a = delta_x.  Requires 14 <= t, 3 <= x <= min(e^{Psi(t/2)}, t^2),
/// sigma in [1/2, 2], and t at least 1e-3 from every catalogued ordinate.
DecompositionReport verify_theorem1(double t, double x, double sigma, const ZeroCatalog& catalog,
                                    const SizdcParams& sizdc);

/// General shift 1/Psi(t/2) <= a <= 1 and 3 <= x <= t^2.
DecompositionReport verify_theorem2(double t, double x, double a, double sigma,
                                    const ZeroCatalog& catalog, const SizdcParams& sizdc);

struct LittlewoodRow {
  double t = 0.0;
  double t_requested = 0.0;
  bool repelled = false;  ///< moved away from a zero ordinate
  double log_abs_zeta = 0.0;
  double s_t = 0.0;
  double littlewood_ratio = 0.0;  ///< log|zeta(1/2+it)| log log t / log t
  double s_ratio = 0.0;           ///< |S(t)| log log t / log t
};

struct CorollaryReport {
  double t = 0.0;
  double eps0 = 0.0;
  double x = 0.0;              ///< (log(t/2))^{eps0/4}
  double shift = 0.0;          ///< 8 / (eps0 log log t)
  double near_radius = 0.0;    ///< 1 / log log t
  double near_zero_log_sum = 0.0;
  long near_zero_count = 0;
  Complex lhs_log_zeta;
  Complex residual;
  double y_bound = 0.0;        ///< log t / log log t
  double ratio = 0.0;
  LittlewoodRow row;
  std::string sizdc;           ///< the parameter set the statement assumes
  std::vector<std::string> flags;
};

/// Smoothing length the statement ties to eps0 at height t.
double corollary_x(double t, double eps0);

/// eps0 for which corollary_x(t, eps0) == x.
double effective_eps0(double t, double x);

/// HypothesisError when corollary_x(t, eps0) < 3.
CorollaryReport verify_corollary(double t, double eps0, const ZeroCatalog& catalog);

struct LittlewoodScan {
  double eps0 = 0.0;
  std::vector<LittlewoodRow> rows;
  double max_littlewood_ratio = 0.0;
  double max_s_ratio = 0.0;
};

inline constexpr double kOrdinateGuard = 1.0e-3;

/// n_points evenly spaced on [t_min, t_max]; points closer than 1e-3 to an
/// ordinate are pushed just outside the guard and marked.
LittlewoodScan littlewood_scan(double t_min, double t_max, int n_points, double eps0,
                               const ZeroCatalog& catalog);

enum class ProofBound { near, zero1, zero_real, near_critical, prop1, prop_uncon };

std::string_view to_string(ProofBound b);
ProofBound parse_proof_bound(std::string_view name);

struct BoundInputs {
  double t = 100.0;
  double x = 10.0;
  double a = 0.5;
  double sigma = 2.0;
};

struct BoundCheckReport {
  ProofBound lemma = ProofBound::near;
  BoundInputs inputs;
  double lhs_value = 0.0;
  double bound_value = 0.0;
  double ratio = 0.0;
  /// Direct sums split by the case analysis of the estimate.
  Terms branch_sums;
  std::vector<std::pair<std::string, long>> branch_counts;
  std::vector<std::string> flags;
};

/// Left side summed directly over catalogued zeros; bound from the
/// explicit-formula quantities.  HypothesisError names a violated hypothesis.
BoundCheckReport check_proof_bound(ProofBound lemma, const BoundInputs& in,
                                   const ZeroCatalog& catalog, const SizdcParams& sizdc);

}  // namespace zetalab
