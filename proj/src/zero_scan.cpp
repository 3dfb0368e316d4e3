// Zero scanning on the critical line: Gram-point sampling with Rosser-block
// subdivision, bracket refinement, and a certified count N(T) at both ends
// of the range (Turing's method, or the argument principle at low height).

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "numeric_detail.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/zero_catalog.hpp"

namespace zetalab {

namespace {

using detail::kPi;

// Below this height the integral bound for S(t) used by Turing's method
// has not been established.
constexpr double kTuringFloor = 168.0 * kPi;
constexpr long kNotGram = LONG_MIN;

double lambert_w0(double x) {
  double w = x > 2.718281828459045 ? std::log(x) - std::log(std::log(x)) : std::log1p(x);
  for (int i = 0; i < 40; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double step = f / (ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0));
    w -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
  }
  return w;
}

double theta_ld(double t) {
  return static_cast<double>(detail::theta_rs_ld(static_cast<long double>(t)));
}

double gram_spacing(double t) { return 2.0 * kPi / std::log(t / (2.0 * kPi)); }

struct Sample {
  double t;
  double z;
  long gram;  // Gram index, or kNotGram
};

int sign_of(double z) { return z < 0.0 ? -1 : 1; }

struct Bracket {
  double a, b, za, zb;
};

// Brent's zeroin on a sign-change bracket, stopped once the bracket is no
// wider than `width`, followed by one secant step across the final bracket.
template <class F>
double refine_root(Bracket br, double width, F&& f) {
  double a = br.a, b = br.b, fa = br.za, fb = br.zb;
  double c = a, fc = fa, d = b - a, e = d;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 200; ++iter) {
    if ((fb > 0 && fc > 0) || (fb < 0 && fc < 0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * eps * std::abs(b) + 0.5 * width;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) break;
    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc, r = fb / fc;
        p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0) q = -q; else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = e = m;
      }
    } else {
      d = e = m;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : (m > 0 ? tol : -tol);
    fb = f(b);
  }
  if (fb == 0.0 || fc == fb) return b;
  const double x = b - fb * (c - b) / (fc - fb);
  return (x - b) * (x - c) <= 0.0 ? x : b;
}

class Scanner {
 public:
  explicit Scanner(const ScanOptions& opt) : opt_(opt) {}

  double z_at(double t) {
    evals_.fetch_add(1, std::memory_order_relaxed);
    return hardy_z_unchecked(t).value.real();
  }

  void add(std::vector<double> ts, std::vector<long> grams = {}) {
    if (grams.empty()) grams.assign(ts.size(), kNotGram);
    std::vector<Sample> fresh(ts.size());
    const long n = static_cast<long>(ts.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) fresh[i] = Sample{ts[i], z_at(ts[i]), grams[i]};
    std::sort(fresh.begin(), fresh.end(), [](auto& x, auto& y) { return x.t < y.t; });
    std::vector<Sample> merged;
    merged.reserve(samples_.size() + fresh.size());
    std::merge(samples_.begin(), samples_.end(), fresh.begin(), fresh.end(),
               std::back_inserter(merged), [](auto& x, auto& y) { return x.t < y.t; });
    // Drop exact duplicates, keeping a Gram label when one copy has it.
    samples_.clear();
    for (const auto& s : merged) {
      if (!samples_.empty() && samples_.back().t == s.t) {
        if (s.gram != kNotGram) samples_.back().gram = s.gram;
        continue;
      }
      samples_.push_back(s);
    }
  }

  // Insert the midpoint of every sample interval inside [lo, hi].
  void densify(double lo, double hi) {
    std::vector<double> mids;
    for (std::size_t i = first_at_or_after(lo); i + 1 < samples_.size() &&
                                                samples_[i + 1].t <= hi; ++i) {
      mids.push_back(0.5 * (samples_[i].t + samples_[i + 1].t));
    }
    add(std::move(mids));
  }

  std::size_t first_at_or_after(double t) const {
    return std::lower_bound(samples_.begin(), samples_.end(), t,
                            [](const Sample& s, double v) { return s.t < v; }) -
           samples_.begin();
  }

  // Sign changes over sample intervals contained in [lo, hi].
  std::vector<Bracket> brackets(double lo, double hi) const {
    std::vector<Bracket> out;
    for (std::size_t i = first_at_or_after(lo); i + 1 < samples_.size() &&
                                                samples_[i + 1].t <= hi; ++i) {
      const auto& x = samples_[i];
      const auto& y = samples_[i + 1];
      if (sign_of(x.z) != sign_of(y.z)) out.push_back({x.t, y.t, x.z, y.z});
    }
    return out;
  }

  long sign_changes(double lo, double hi) const {
    return static_cast<long>(brackets(lo, hi).size());
  }

  std::vector<double> refine(const std::vector<Bracket>& br) {
    std::vector<double> roots(br.size());
    const long n = static_cast<long>(br.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) {
      roots[i] = refine_root(br[i], opt_.refine_width, [this](double t) { return z_at(t); });
    }
    return roots;
  }

  struct Block {
    double lo, hi;
    long n_lo, n_hi;
    long found;
  };

  // Rosser blocks between consecutive good Gram points that show fewer
  // sign changes than Gram intervals.
  std::vector<Block> deficient_blocks(double lo, double hi) const {
    std::vector<Block> out;
    const Sample* prev = nullptr;
    for (std::size_t i = first_at_or_after(lo); i < samples_.size() && samples_[i].t <= hi;
         ++i) {
      const auto& s = samples_[i];
      if (s.gram == kNotGram || !good(s)) continue;
      if (prev) {
        const long found = sign_changes(prev->t, s.t);
        if (found < s.gram - prev->gram) out.push_back({prev->t, s.t, prev->gram, s.gram, found});
      }
      prev = &s;
    }
    return out;
  }

  int repair_blocks(double lo, double hi) {
    int rounds = 0;
    for (; rounds < opt_.max_doublings; ++rounds) {
      const auto bad = deficient_blocks(lo, hi);
      if (bad.empty()) break;
      for (const auto& b : bad) densify(b.lo, b.hi);
    }
    return rounds;
  }

  long gram_count(double lo, double hi, bool bad_only) const {
    long n = 0;
    for (std::size_t i = first_at_or_after(lo); i < samples_.size() && samples_[i].t <= hi;
         ++i) {
      if (samples_[i].gram != kNotGram && (!bad_only || !good(samples_[i]))) ++n;
    }
    return n;
  }

  long evaluations() const { return evals_.load(); }

 private:
  static bool good(const Sample& s) { return ((s.gram % 2 == 0) ? s.z : -s.z) > 0.0; }

  ScanOptions opt_;
  std::vector<Sample> samples_;
  std::atomic<long> evals_{0};
};

// Simpson's rule for the integral of theta(u) - theta(T) over [a, b].
double theta_excess_integral(double a, double b, double T) {
  constexpr int kPanels = 64;
  const double thT = theta_ld(T);
  const double h = (b - a) / kPanels;
  double acc = 0.0;
  for (int i = 0; i <= kPanels; ++i) {
    const double w = (i == 0 || i == kPanels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w * (theta_ld(a + i * h) - thT);
  }
  return acc * h / 3.0;
}

struct Plan {
  double t_lo, t_hi;   // user range
  double h_lo, h_hi;   // Turing windows at each end
  bool turing_lo, turing_hi;
  double region_lo, region_hi;
};

std::optional<EndpointCount> turing_count(Scanner& sc, double T, double H,
                                          const ScanOptions& opt) {
  for (int round = 0; round <= opt.max_doublings; ++round) {
    const auto above = sc.refine(sc.brackets(T, T + H));
    const auto below = sc.refine(sc.brackets(T - H, T));
    double int_above = 0.0, int_below = 0.0;
    for (double g : above) int_above += (T + H) - g;
    for (double g : below) int_below += g - (T - H);
    const double base = theta_ld(T) / kPi + 1.0;
    const double b_up = 2.30 + 0.128 * std::log((T + H) / (2.0 * kPi));
    const double b_dn = 2.30 + 0.128 * std::log(T / (2.0 * kPi));
    const double upper =
        base + (b_up - int_above + theta_excess_integral(T, T + H, T) / kPi) / H;
    const double lower =
        base + (-b_dn + int_below + theta_excess_integral(T - H, T, T) / kPi) / H;
    const double hi_int = std::floor(upper);
    const double lo_int = std::ceil(lower);
    if (hi_int == lo_int) {
      return EndpointCount{T, static_cast<long>(hi_int), CountMethod::turing, lower, upper};
    }
    if (round < opt.max_doublings) sc.densify(T - H, T + H);
  }
  return std::nullopt;
}

std::optional<EndpointCount> argument_count(Scanner& sc, double T) {
  const auto br = sc.brackets(T - 2.0, T + 2.0);
  const auto roots = sc.refine(br);
  std::vector<NontrivialZero> local;
  for (double g : roots) {
    const double gs = to_stored_precision(g);
    if (local.empty() || local.back().gamma < gs) local.push_back({0.5, gs, 1, Provenance::computed});
  }
  const ZeroCatalog near(std::move(local), std::nullopt);
  if (near.nearest_ordinate_distance(T) < 1e-7) return std::nullopt;
  LogZetaOptions lz;
  lz.zero_guard = 1e-8;
  try {
    const double value = theta_ld(T) / kPi + 1.0 + s_of_t(T, near, lz);
    const double n = std::round(value);
    if (std::abs(value - n) >= 0.25) return std::nullopt;
    return EndpointCount{T, static_cast<long>(n), CountMethod::argument_principle, value, value};
  } catch (const ZetaError&) {
    return std::nullopt;
  }
}

EndpointCount certify_endpoint(Scanner& sc, double T, double H, bool turing,
                               const ScanOptions& opt) {
  if (turing) {
    if (auto c = turing_count(sc, T, H, opt)) return *c;
  }
  if (auto c = argument_count(sc, T)) return *c;
  std::ostringstream msg;
  msg.precision(12);
  msg << "could not pin N(T) at T = " << T;
  throw CertificationError(msg.str());
}

}  // namespace

double gram_point(long n) {
  if (n < -1) throw DomainError("Gram points are indexed from n = -1");
  const double x = (static_cast<double>(n) + 0.125) / std::exp(1.0);
  double t = 2.0 * kPi * std::exp(1.0 + lambert_w0(x));
  const long double target = static_cast<long double>(n) * detail::kPiL;
  for (int i = 0; i < 20; ++i) {
    const long double f = detail::theta_rs_ld(static_cast<long double>(t)) - target;
    const double dt = static_cast<double>(f) / theta_rs_derivative(std::max(t, 7.0));
    t -= dt;
    if (std::abs(dt) <= 1e-14 * t) break;
  }
  return t;
}

ScanResult scan_zeros_detailed(double t_min, double t_max, const ScanOptions& opt) {
  if (!(t_min >= kTFloor) || !(t_min < t_max) || !(t_max <= kTMax)) {
    throw DomainError("scan range must satisfy 14 <= t_min < t_max <= 1e6");
  }
  if (opt.max_doublings < 0 || !(opt.refine_width > 0.0) ||
      !(opt.turing_window_gram_spacings > 0.0)) {
    throw DomainError("invalid scan options");
  }

  Plan plan{};
  plan.t_lo = t_min;
  plan.t_hi = t_max;
  plan.h_lo = opt.turing_window_gram_spacings * gram_spacing(t_min);
  plan.h_hi = opt.turing_window_gram_spacings * gram_spacing(t_max);
  plan.turing_lo = t_min - plan.h_lo >= kTuringFloor;
  plan.turing_hi = t_max - plan.h_hi >= kTuringFloor;
  // Argument-principle ends only need nearby zeros for path clearance.
  constexpr double kPad = 2.0;
  plan.region_lo = plan.turing_lo ? t_min - plan.h_lo : std::max(10.0, t_min - kPad);
  plan.region_hi = std::max(plan.turing_hi ? t_max + plan.h_hi : t_max + kPad,
                            plan.turing_lo ? t_min + plan.h_lo : t_min);

  Scanner sc(opt);
  {
    std::vector<double> ts;
    std::vector<long> grams;
    long n = std::max(-1L, static_cast<long>(std::floor(theta_ld(plan.region_lo) / kPi)));
    for (;; ++n) {
      const double g = gram_point(n);
      if (g > plan.region_hi) break;
      if (g < plan.region_lo) continue;
      ts.push_back(g);
      grams.push_back(n);
    }
    for (double t : {plan.region_lo, plan.region_hi, t_min, t_max}) {
      ts.push_back(t);
      grams.push_back(kNotGram);
    }
    if (plan.turing_lo) {
      ts.push_back(t_min + plan.h_lo);
      grams.push_back(kNotGram);
    }
    if (plan.turing_hi) {
      ts.push_back(t_max - plan.h_hi);
      grams.push_back(kNotGram);
    }
    sc.add(std::move(ts), std::move(grams));
  }
  int doublings = sc.repair_blocks(plan.region_lo, plan.region_hi);

  ScanDiagnostics diag;
  bool closed = false;
  long expected = 0, found = 0;
  for (int pass = 0; pass <= opt.max_doublings; ++pass) {
    diag.lower_end = certify_endpoint(sc, t_min, plan.h_lo, plan.turing_lo, opt);
    diag.upper_end = certify_endpoint(sc, t_max, plan.h_hi, plan.turing_hi, opt);
    expected = diag.upper_end.count - diag.lower_end.count;
    found = sc.sign_changes(t_min, t_max);
    if (found == expected) {
      closed = true;
      break;
    }
    if (found > expected) break;  // more sign changes than zeros: counts are wrong
    if (pass < opt.max_doublings) {
      sc.densify(t_min, t_max);
      doublings = std::max(doublings, pass + 1);
    }
  }
  if (!closed) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "zero count on [" << t_min << ", " << t_max << "] not closed: found " << found
        << " sign changes, N(T1) - N(T0) = " << expected;
    const auto bad = sc.deficient_blocks(t_min, t_max);
    if (!bad.empty()) {
      const auto& b = bad.front();
      msg << "; Gram block [g_" << b.n_lo << ", g_" << b.n_hi << "] = [" << b.lo << ", "
          << b.hi << "] shows " << b.found << " of " << (b.n_hi - b.n_lo) << " sign changes";
      if (bad.size() > 1) msg << " (" << bad.size() - 1 << " more deficient blocks)";
    } else {
      msg << "; no deficient Gram block localized";
    }
    throw CertificationError(msg.str());
  }

  const auto roots = sc.refine(sc.brackets(t_min, t_max));
  std::vector<NontrivialZero> zeros;
  zeros.reserve(roots.size());
  for (double g : roots) {
    const double gs = to_stored_precision(g);
    if (!zeros.empty() && !(zeros.back().gamma < gs)) {
      throw CertificationError("two zeros coincide at the stored precision near t = " +
                               std::to_string(gs));
    }
    zeros.push_back({0.5, gs, 1, Provenance::computed});
  }

  diag.z_evaluations = sc.evaluations();
  diag.doublings_used = doublings;
  diag.gram_points = sc.gram_count(t_min, t_max, false);
  diag.bad_gram_points = sc.gram_count(t_min, t_max, true);
  return {ZeroCatalog(std::move(zeros), CertifiedRange{t_min, t_max}), diag};
}

ZeroCatalog scan_zeros(double t_min, double t_max, const ScanOptions& options) {
  return scan_zeros_detailed(t_min, t_max, options).catalog;
}

}  // namespace zetalab
