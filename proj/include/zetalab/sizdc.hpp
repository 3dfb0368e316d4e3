#pragma once

// Short-interval zero density condition with parameters (l, v, Phi, Psi):
//
//   N(sigma, T, l(T)) <= l(T) v(T) (log T) Phi(T)^{1/2 - sigma}
//
// for sigma >= 1/2 + 1/Psi(T).  Parameter functions come from a small
// closed family and are evaluated as even functions of t.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zetalab/zero_catalog.hpp"

namespace zetalab {

enum class Family { constant, zero, one, power_log, recip_loglog, scaled_loglog, recip };

struct FunctionSpec {
  Family family = Family::one;
  double arg = 0.0;  // c for constant / scaled_loglog / recip, alpha for power_log
  double t_min = 14.0;

  static FunctionSpec constant(double c) { return {Family::constant, c}; }
  static FunctionSpec zero() { return {Family::zero}; }
  static FunctionSpec one() { return {Family::one}; }
  static FunctionSpec power_log(double alpha) { return {Family::power_log, alpha}; }
  static FunctionSpec recip_loglog() { return {Family::recip_loglog}; }
  static FunctionSpec scaled_loglog(double c) { return {Family::scaled_loglog, c}; }
  static FunctionSpec recip(double c) { return {Family::recip, c}; }

  /// `family[:arg]` as accepted by the parameter grammar.
  std::string to_string() const;

  friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;
};

/// Value at |t|; throws DomainError when |t| < t_min.
double eval_spec(const FunctionSpec& f, double t);

enum class Monotonicity { constant, weakly_increasing, weakly_decreasing, mixed };

std::string_view to_string(Monotonicity m);

/// Shape of f on the 100-point logarithmic grid over [t_min, 1e6].
Monotonicity monotonicity_on_grid(const FunctionSpec& f);

/// 100 log-spaced points on [14, 1e6].
std::vector<double> hypothesis_grid();

struct SizdcParams {
  FunctionSpec l = FunctionSpec::one();
  FunctionSpec v = FunctionSpec::one();
  FunctionSpec phi = FunctionSpec::constant(3.0);
  FunctionSpec psi = FunctionSpec::constant(10.0);

  /// `l=..;v=..;phi=..;psi=..`
  std::string to_string() const;

  friend bool operator==(const SizdcParams&, const SizdcParams&) = default;
};

/// Parses `key=family[:arg]` pairs joined by `;`.  All four keys are
/// required, each once.  Throws FormatError with a grammar hint.
SizdcParams parse_sizdc_params(std::string_view text);

inline constexpr std::string_view kSizdcGrammar =
    "expected l=F;v=F;phi=F;psi=F with F one of const:c, zero, one, "
    "power_log:alpha, recip_loglog, scaled_loglog:c, recip:c";

/// The structural requirements on (l, v, Phi, Psi): l, v nonnegative and
/// weakly decreasing; Phi, Psi at least 3 and weakly increasing.  They are
/// tested on the hypothesis grid and reported, not enforced.
struct HypothesisCheck {
  bool l_ok = true;
  bool v_ok = true;
  bool phi_ok = true;
  bool psi_ok = true;
  std::vector<std::string> notes;
  bool all_ok() const { return l_ok && v_ok && phi_ok && psi_ok; }
};

HypothesisCheck check_hypotheses(const SizdcParams& params);

enum class SigmaSpacing {
  phi_slices,  ///< sigma_floor + j / log Phi(T), j = 0 .. n_sigma - 1, capped at 1
  uniform,     ///< n_sigma points evenly spread over [sigma_floor, 1]
};

struct SizdcGrid {
  double T_a = 100.0;
  double T_b = 1.0e4;
  int n_T = 10;
  int n_sigma = 8;
  SigmaSpacing spacing = SigmaSpacing::phi_slices;
};

struct SizdcRow {
  double T = 0.0;
  double sigma = 0.0;
  double sigma_floor = 0.0;  ///< 1/2 + 1/Psi(T)
  double window = 0.0;       ///< l(T)
  long lhs_count = 0;
  double rhs_bound = 0.0;
  double ratio = 0.0;  ///< lhs / rhs, 0 when both vanish, +inf when only rhs does
  bool satisfied = true;
};

struct SizdcReport {
  SizdcParams params;
  SizdcGrid grid;
  std::vector<SizdcRow> rows;
  double max_ratio = 0.0;
  bool all_satisfied = true;
  /// Grid heights whose sigma domain [1/2 + 1/Psi(T), 1] is empty.
  std::vector<double> empty_sigma_domain;
  HypothesisCheck hypotheses;
  std::string catalog_id;
  bool hypothesis_catalog = false;

  const SizdcRow* first_violation() const;
};

/// Evaluates the density inequality over the (T, sigma) grid.  Beyond
/// sigma = 1 both sides are trivial, so sigma is capped there.  Requires the
/// catalog to cover [T_a, T_b + max l(T)] unless it is in hypothesis mode.
SizdcReport check_sizdc(const ZeroCatalog& catalog, const SizdcParams& params,
                        const SizdcGrid& grid);

/// v = 0: the condition then says no zero lies right of the sigma floor.
SizdcParams rh_case();

struct LindelofCase {
  SizdcParams params;
  /// False when v does not visibly decay on the grid (a constant, say);
  /// v = o(1) is asymptotic, so this is a flag rather than an error.
  bool decays = false;
};

/// l = 1, Phi = const(phi_const), Psi = const(psi_const), v = v_decay.
/// Throws MonotonicityError when v_decay is not weakly decreasing.
LindelofCase lindelof_case(const FunctionSpec& v_decay, double phi_const = 3.0,
                           double psi_const = 10.0);

}  // namespace zetalab
