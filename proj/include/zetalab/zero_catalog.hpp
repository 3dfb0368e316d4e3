#pragma once

// Nontrivial zeros: scanning and certification on the critical line,
// counting queries, synthetic ensembles, and the zero cache file.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zetalab/zeta_core.hpp"

namespace zetalab {

enum class Provenance { computed, synthetic };

std::string_view to_string(Provenance p);

struct NontrivialZero {
  double beta = 0.5;
  double gamma = 0.0;
  int multiplicity = 1;
  Provenance provenance = Provenance::computed;

  Complex rho() const { return {beta, gamma}; }
  friend bool operator==(const NontrivialZero&, const NontrivialZero&) = default;
};

/// Closed interval [lo, hi] of ordinates in which the catalog is complete.
struct CertifiedRange {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const CertifiedRange&, const CertifiedRange&) = default;
};

/// Computed-only catalogs are `certified`; anything containing synthetic
/// zeros is `hypothesis` mode and never backs a certified statement.
enum class CatalogMode { certified, hypothesis };

/// Immutable, ascending list of zeros with gamma > 0.  Conjugates -gamma
/// are implied.  Ordinates are held at the 12-decimal stored precision.
class ZeroCatalog {
 public:
  ZeroCatalog() = default;

  /// Throws OrderingError unless gammas are strictly ascending, and
  /// DomainError on invalid beta / gamma / multiplicity values.
  ZeroCatalog(std::vector<NontrivialZero> zeros,
              std::optional<CertifiedRange> range);

  const std::vector<NontrivialZero>& zeros() const { return zeros_; }
  std::size_t size() const { return zeros_.size(); }
  bool empty() const { return zeros_.empty(); }

  const std::optional<CertifiedRange>& certified_range() const {
    return range_;
  }
  CatalogMode mode() const {
    return has_synthetic_ ? CatalogMode::hypothesis : CatalogMode::certified;
  }
  bool has_synthetic() const { return has_synthetic_; }
  bool has_computed() const { return has_computed_; }

  /// True when [lo, hi] lies in the certified range.
  bool covers(double lo, double hi) const;

  /// Throws UncertifiedRangeError when a certified-mode catalog does not
  /// cover [lo, hi].  Hypothesis-mode catalogs are accepted as-is.
  void require_covered(double lo, double hi, std::string_view what) const;

  /// Zeros with lo <= gamma <= hi.
  std::span<const NontrivialZero> in_window(double lo, double hi) const;

  /// min |t - gamma| over stored ordinates (+inf when empty).
  double nearest_ordinate_distance(double t) const;

  /// min |s - rho| over stored zeros and their conjugates.
  double nearest_zero_distance(Complex s) const;

  /// Stable content hash of the serialized catalog.
  std::string id() const;

  friend bool operator==(const ZeroCatalog& a, const ZeroCatalog& b) {
    return a.zeros_ == b.zeros_ && a.range_ == b.range_;
  }

 private:
  std::vector<NontrivialZero> zeros_;
  std::optional<CertifiedRange> range_;
  bool has_synthetic_ = false;
  bool has_computed_ = false;
};

/// Round a value to the 12-decimal precision of the cache file.
double to_stored_precision(double v);

// ---------------------------------------------------------------- scanning

struct ScanOptions {
  /// Maximum number of sample-density doublings (2^6 = 64x).
  int max_doublings = 6;
  /// Turing window length in units of the local Gram spacing.
  double turing_window_gram_spacings = 20.0;
  /// Bracket width at which refinement stops before the final secant step.
  double refine_width = 1.0e-9;
};

enum class CountMethod { turing, argument_principle };

std::string_view to_string(CountMethod m);

/// How N(T) was pinned at one end of a scanned range.
struct EndpointCount {
  double t = 0.0;
  long count = 0;
  CountMethod method = CountMethod::turing;
  double lower = 0.0;  ///< lower bound on N(t) before rounding
  double upper = 0.0;  ///< upper bound on N(t) before rounding
};

struct ScanDiagnostics {
  EndpointCount lower_end;
  EndpointCount upper_end;
  long z_evaluations = 0;
  int doublings_used = 0;
  long gram_points = 0;
  long bad_gram_points = 0;
};

struct ScanResult {
  ZeroCatalog catalog;
  ScanDiagnostics diagnostics;
};

/// All zeros with t_min <= gamma <= t_max, refined and certified complete.
/// Requires 14 <= t_min < t_max <= 1e6.  Throws CertificationError naming
/// the offending Gram block when the count cannot be closed.
ZeroCatalog scan_zeros(double t_min, double t_max,
                       const ScanOptions& options = {});
ScanResult scan_zeros_detailed(double t_min, double t_max,
                               const ScanOptions& options = {});

/// n-th Gram point: theta_rs(g_n) = n pi, n >= -1.
double gram_point(long n);

// ---------------------------------------------------------------- counting

/// N(sigma, T, h): zeros with beta >= sigma and T <= gamma <= T + h.
struct CountQuery {
  double sigma = 0.5;
  double T = 0.0;
  double h = 1.0;
};

/// Sum of multiplicities over the query window.  Certified-mode catalogs
/// require [T, T + h] inside the certified range.
long count_short_interval(const ZeroCatalog& catalog, const CountQuery& q);

/// N(T): zeros with 0 < gamma <= T, with multiplicity.  Requires T <= T1
/// and a certified range starting below the first zero.
long n_of_t(const ZeroCatalog& catalog, double T);

// --------------------------------------------------------------- synthetic

/// Merge synthetic zeros into a copy of the catalog; result is in
/// hypothesis mode.  A gamma equal to an existing one with the same beta
/// raises the multiplicity; with a different beta it is an OrderingError.
ZeroCatalog inject_synthetic(const ZeroCatalog& catalog,
                             std::span<const NontrivialZero> zeros);

/// Deterministic random off-line ensemble: `count` zeros with beta uniform
/// in [beta_lo, beta_hi] and gamma uniform in [t_lo, t_hi].
std::vector<NontrivialZero> random_offline_zeros(std::uint64_t seed, int count,
                                                 double t_lo, double t_hi,
                                                 double beta_lo,
                                                 double beta_hi);

// --------------------------------------------------------------------- io

/// Cache file text: header `zetalab-zeros v1; certified=<T0>:<T1>;
/// count=<n>` then `gamma beta multiplicity provenance` per line.
std::string format_catalog(const ZeroCatalog& catalog);
ZeroCatalog parse_catalog(std::string_view text);

void save_catalog(const ZeroCatalog& catalog, const std::filesystem::path& path);
ZeroCatalog load_catalog(const std::filesystem::path& path);

}  // namespace zetalab
