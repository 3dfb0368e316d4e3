#pragma once

// Smoothed prime sums and the bound quantities built from the zeros near a
// height t: the neighborhood A(x, t) with sigma_A and L, the switch tau(a),
// and the composite majorants F_a, G_a, Y_a, E_a.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "zetalab/sizdc.hpp"
#include "zetalab/zero_catalog.hpp"

namespace zetalab {

inline constexpr double kMaxSmoothingX = 1.0e3;

/// Prime-power factorizations n = p^k for 1 <= n <= limit, from a sieve.
class VonMangoldtTable {
 public:
  struct PrimePower {
    long p = 0;  ///< 0 when n is not a prime power
    int k = 0;
  };

  explicit VonMangoldtTable(long limit);

  /// Table covering at least `limit`, shared between callers.
  static std::shared_ptr<const VonMangoldtTable> shared(long limit);

  long limit() const { return static_cast<long>(entries_.size()) - 1; }
  PrimePower factor(long n) const;

  /// Lambda(n) = log p when n = p^k, else 0.
  double operator()(long n) const;

 private:
  std::vector<PrimePower> entries_;
};

/// Lambda(n) for n <= x, Lambda(n) log(x^2/n)/log x for x <= n <= x^2,
/// 0 beyond.  Requires n >= 1 and 3 <= x <= 1e3.
double lambda_x(long n, double x);

enum class DirichletWeight { plain, over_log_n };

/// sum_{2 <= n <= x^2} Lambda_x(n) n^{-s}, optionally divided by log n.
/// Summed in increasing n.
Complex dirichlet_sum(Complex s, double x, DirichletWeight weight);

struct SmoothingParams {
  double x = 3.0;
  double delta_x = 0.0;
  double a = 0.0;
  double sigma_1 = 0.0;

  /// Requires 3 <= x <= 1e3 and 0 < a <= 1.
  static SmoothingParams make(double x, double a);
  /// a = delta_x.
  static SmoothingParams natural(double x);
};

/// Radius min{t/2, x^{3(beta - 1/2)} / sqrt(log x)} of the neighborhood.
double neighborhood_radius(double beta, double x, double t);

struct ZeroNeighborhood {
  double x = 0.0;
  double t = 0.0;
  std::vector<NontrivialZero> members;
  double sigma_A = 0.5;
  double L = 0.0;
  /// A is empty: sigma_A = 1/2 and L = delta_x stand in, and tau is forced to 0.
  bool empty_sentinel = false;
  std::string catalog_id;
};

/// Zeros within their own radius of t.  Requires t >= 14, 3 <= x <= 1e3,
/// and catalog coverage of [t - R, t + R] with R the largest possible
/// radius (clipped below at 14, where zeros start).
ZeroNeighborhood build_neighborhood(const ZeroCatalog& catalog, double x, double t);

using Terms = std::vector<std::pair<std::string, double>>;

struct BoundQuantities {
  int tau = 0;
  double F_a = 0.0;
  double G_a = 0.0;
  double Y_a = 0.0;
  double E_a = 0.0;
  Terms y_terms;
  Terms e_terms;
  double phi_half_t = 0.0;       ///< Phi(t/2)
  double dirichlet_abs = 0.0;    ///< |sum Lambda_x(n) n^{-s_1}|
  long f_upper_index = -1;       ///< floor((sigma_A - a) log Phi), -1 for an empty F sum
};

/// Parameter function at t/2 (allowed down to t/2 = 7).
double eval_at_half(FunctionSpec f, double t);

/// Evaluates tau(a), F_a, G_a, Y_a(sigma), E_a.  Requires sigma in [1/2, 3]
/// (the lower-case error term needs Y_a at sigma_1, which can pass 2),
/// 1/Psi(t/2) <= a <= 1 (DomainError), and Phi(t/2) > 1 (HypothesisError).
BoundQuantities bound_quantities(const ZeroNeighborhood& nbhd, const SmoothingParams& params,
                                 const SizdcParams& sizdc, double sigma, double t);

struct Lemma1Result {
  Complex rhs;
  double tail_bound = 0.0;  ///< majorant for zeros with |gamma| > cutoff
  double eval_error = 0.0;  ///< floating-point and zeta'/zeta error estimate
  Complex log_deriv_term;   ///< -zeta'/zeta(s)
  Complex pole_term;
  Complex zero_sum;         ///< over catalogued rho and conjugates, |gamma| <= cutoff
  Complex trivial_sum;
  long zeros_used = 0;
};

/// Right side of the smoothed explicit formula for sum_{n <= x^2} Lambda_x(n) n^{-s}.
/// Requires cutoff > |t| and a catalog complete on [14, cutoff].
Lemma1Result lemma1_rhs(Complex s, double x, const ZeroCatalog& catalog, double gamma_cutoff);

/// Upper bound for N(u): theta(u)/pi + 1 + 0.112 log u + 0.278 log log u + 2.51.
double n_upper_bound(double u);

}  // namespace zetalab
