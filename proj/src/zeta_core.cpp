#include "zetalab/zeta_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "numeric_detail.hpp"
#include "zetalab/detail/rs_coefficients.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/zero_catalog.hpp"

namespace zetalab {

namespace detail {

const LogTable& log_table() {
  static const LogTable table = [] {
    LogTable tab;
    tab.log_n.resize(kLogTableSize);
    tab.inv_sqrt_n.resize(kLogTableSize);
    tab.log_n[0] = 0.0L;
    tab.inv_sqrt_n[0] = 0.0;
    for (std::size_t n = 1; n < kLogTableSize; ++n) {
      tab.log_n[n] = std::log(static_cast<long double>(n));
      tab.inv_sqrt_n[n] =
          static_cast<double>(1.0L / std::sqrt(static_cast<long double>(n)));
    }
    return tab;
  }();
  return table;
}

namespace {

// (1 - 2^{1-2k}) |B_2k| / (4k(2k-1)), k = 1..7
constexpr std::array<long double, 7> kThetaSeries = {
    1.0L / 48.0L,
    7.0L / 5760.0L,
    31.0L / 80640.0L,
    127.0L / 430080.0L,
    511.0L / 1216512.0L,
    (1.0L - 1.0L / 2048.0L) * (691.0L / 2730.0L) / 264.0L,
    (1.0L - 1.0L / 8192.0L) * (7.0L / 6.0L) / 364.0L,
};

}  // namespace

long double theta_rs_ld(long double t) {
  long double value = 0.5L * t * std::log(t / kTwoPiL) - 0.5L * t - kPiL / 8.0L;
  const long double inv_t = 1.0L / t;
  const long double inv_t2 = inv_t * inv_t;
  long double power = inv_t;
  for (long double a : kThetaSeries) {
    value += a * power;
    power *= inv_t2;
  }
  return value;
}

}  // namespace detail

using detail::kPi;

std::string_view to_string(EvalMethod method) {
  switch (method) {
    case EvalMethod::euler_maclaurin:
      return "euler_maclaurin";
    case EvalMethod::riemann_siegel:
      return "riemann_siegel";
    case EvalMethod::dirichlet_tail:
      return "dirichlet_tail";
  }
  return "unknown";
}

EvalPoint EvalPoint::make(double sigma, double t) {
  if (!std::isfinite(sigma) || !std::isfinite(t) || sigma < kSigmaMin ||
      sigma > kSigmaMax || std::abs(t) > kTMax) {
    std::ostringstream msg;
    msg << "evaluation point " << sigma << (t < 0 ? " - " : " + ")
        << std::abs(t) << "i outside 0.4 <= sigma <= 3, |t| <= 1e6";
    throw DomainError(msg.str());
  }
  return {sigma, t, std::nullopt};
}

EvalPoint EvalPoint::with_zero_distance(const ZeroCatalog& catalog) const {
  EvalPoint p = *this;
  p.min_zero_distance = catalog.nearest_zero_distance(s());
  return p;
}

namespace {

constexpr int kMaxEmTerms = 100;

// B_2k / (2k)! for k = 1..kMaxEmTerms.
const std::array<double, kMaxEmTerms + 1>& bernoulli_ratios() {
  static const auto table = [] {
    std::array<double, kMaxEmTerms + 1> c{};
    constexpr std::array<std::pair<long double, long double>, 10> exact = {{
        {1, 6}, {-1, 30}, {1, 42}, {-1, 30}, {5, 66},
        {-691, 2730}, {7, 6}, {-3617, 510}, {43867, 798}, {-174611, 330},
    }};
    long double factorial = 1.0L;
    for (int k = 1; k <= 10; ++k) {
      factorial *= static_cast<long double>((2 * k - 1) * (2 * k));
      c[k] = static_cast<double>(exact[k - 1].first / exact[k - 1].second /
                                 factorial);
    }
    // |B_2k|/(2k)! = 2 zeta(2k) / (2 pi)^{2k}
    for (int k = 11; k <= kMaxEmTerms; ++k) {
      long double z = 0.0L;
      for (int n = 30; n >= 1; --n) {
        z += std::pow(static_cast<long double>(n), -2.0L * k);
      }
      const long double mag =
          2.0L * z * std::exp(-2.0L * k * std::log(detail::kTwoPiL));
      c[k] = static_cast<double>(k % 2 == 1 ? mag : -mag);
    }
    return c;
  }();
  return table;
}

struct EmSums {
  Complex value;
  Complex derivative;
  double value_err = 0.0;
  double derivative_err = 0.0;
};

// Euler-Maclaurin for t >= 0.
EmSums euler_maclaurin(double sigma, double t, bool want_derivative) {
  const Complex s(sigma, t);
  const double abs_s = std::abs(s);
  const long n_cut =
      std::max<long>(10, static_cast<long>(std::ceil(0.25 * abs_s)) + 10);
  const auto& tab = detail::log_table();
  if (static_cast<std::size_t>(n_cut) >= detail::kLogTableSize) {
    throw DomainError("Euler-Maclaurin cut-off exceeds the log table");
  }

  const bool on_line = sigma == 0.5;
  double re = 1.0, im = 0.0, dre = 0.0, dim = 0.0;
  double mag_sum = 1.0, dmag_sum = 0.0;
  for (long n = 2; n < n_cut; ++n) {
    const long double ln = tab.log_n[n];
    const double mag =
        on_line ? tab.inv_sqrt_n[n] : std::exp(-sigma * static_cast<double>(ln));
    const double ph = detail::reduce_angle(static_cast<long double>(t) * ln);
    const double c = mag * std::cos(ph);
    const double sn = -mag * std::sin(ph);
    re += c;
    im += sn;
    mag_sum += mag;
    if (want_derivative) {
      const double l = static_cast<double>(ln);
      dre -= l * c;
      dim -= l * sn;
      dmag_sum += l * mag;
    }
  }
  Complex sum(re, im);
  Complex dsum(dre, dim);

  const long double ln_cut = tab.log_n[n_cut];
  const double log_n = static_cast<double>(ln_cut);
  const Complex n_pow = detail::pow_minus_s(ln_cut, sigma, t);  // N^{-s}
  const Complex sm1 = s - 1.0;
  const double nd = static_cast<double>(n_cut);
  sum += nd * n_pow / sm1 + 0.5 * n_pow;
  if (want_derivative) {
    dsum += nd * n_pow * (-log_n / sm1 - 1.0 / (sm1 * sm1)) -
            0.5 * log_n * n_pow;
  }

  const auto& c = bernoulli_ratios();
  // s (s+1) ... (s+2k-2) N^{-s-2k+1} and its s-derivative, carried together
  // so neither factor overflows at large |s|.
  Complex pq = s * n_pow / nd;
  Complex dpq = n_pow / nd;  // derivative of the product part only
  const double inv_n2 = 1.0 / (nd * nd);
  double trunc = 0.0, dtrunc = 0.0;
  for (int k = 1; k <= kMaxEmTerms; ++k) {
    const Complex term = c[k] * pq;
    sum += term;
    const double factor =
        std::abs(s + static_cast<double>(2 * k - 1)) / (sigma + 2 * k - 1);
    trunc = std::abs(term) * factor;
    if (want_derivative) {
      const Complex dterm = c[k] * (dpq - log_n * pq);
      dsum += dterm;
      dtrunc = 2.0 * std::abs(dterm) * factor;
    }
    if (k >= 2 && trunc < 1e-18 && (!want_derivative || dtrunc < 1e-17)) break;
    const Complex a = s + static_cast<double>(2 * k - 1);
    const Complex b = s + static_cast<double>(2 * k);
    dpq = (dpq * a * b + pq * (a + b)) * inv_n2;
    pq *= a * b * inv_n2;
  }

  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const double phase_err = std::abs(t) * log_n * 1e-19;
  EmSums out;
  out.value = sum;
  out.derivative = dsum;
  out.value_err = trunc + (4.0 * kEps + phase_err) * mag_sum + 1e-300;
  out.derivative_err =
      dtrunc + (4.0 * kEps + phase_err) * (dmag_sum + mag_sum) + 1e-300;
  return out;
}

void check_pole(const EvalPoint& p) {
  if (std::abs(p.s() - 1.0) < 1e-6) {
    throw DomainError("zeta has a pole at s = 1");
  }
}

EvalPoint checked(const EvalPoint& p) {
  auto q = EvalPoint::make(p.sigma, p.t);
  q.min_zero_distance = p.min_zero_distance;
  return q;
}

double horner(const auto& coeffs, double z) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Riemann-Siegel Z(t) with corrections C0, C1, C2.
EvalResult riemann_siegel_formula(double t) {
  const auto& tab = detail::log_table();
  const double a = std::sqrt(t / (2.0 * kPi));
  const long m = static_cast<long>(std::floor(a));
  const double p = a - static_cast<double>(m);
  const long double tl = t;
  const long double th = detail::theta_rs_ld(tl);
  double main = 0.0;
  double mag = 0.0;
  for (long n = 1; n <= m; ++n) {
    main += tab.inv_sqrt_n[n] * std::cos(detail::reduce_angle(th - tl * tab.log_n[n]));
    mag += tab.inv_sqrt_n[n];
  }
  main *= 2.0;
  const double z = p - 0.5;
  const double u = 1.0 / a;
  const double correction =
      horner(detail::kRsC0, z) + u * (horner(detail::kRsC1, z) + u * horner(detail::kRsC2, z));
  const double sign = ((m - 1) % 2 == 0) ? 1.0 : -1.0;
  const double value = main + sign * std::pow(2.0 * kPi / t, 0.25) * correction;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const double err = 0.011 * std::pow(t, -1.75) +
                     (4.0 * kEps + t * std::log(t) * 1e-19) * 2.0 * mag;
  return {Complex(value, 0.0), err, EvalMethod::riemann_siegel};
}

}  // namespace

EvalResult zeta(const EvalPoint& point) {
  const EvalPoint p = checked(point);
  check_pole(p);
  const double at = std::abs(p.t);
  if (p.sigma == 0.5 && at > kEulerMaclaurinMaxT) {
    const EvalResult z = riemann_siegel_formula(at);
    const double th = static_cast<double>(
        detail::reduce_angle(detail::theta_rs_ld(static_cast<long double>(at))));
    Complex v = z.value.real() * std::polar(1.0, -th);
    if (p.t < 0) v = std::conj(v);
    return {v, z.abs_error_bound + 1e-12 * std::abs(z.value.real()),
            EvalMethod::riemann_siegel};
  }
  const EmSums em = euler_maclaurin(p.sigma, at, false);
  const Complex v = p.t < 0 ? std::conj(em.value) : em.value;
  return {v, em.value_err, EvalMethod::euler_maclaurin};
}

ZetaAndDerivative zeta_with_derivative(const EvalPoint& point) {
  const EvalPoint p = checked(point);
  check_pole(p);
  const EmSums em = euler_maclaurin(p.sigma, std::abs(p.t), true);
  Complex v = em.value;
  Complex d = em.derivative;
  if (p.t < 0) {
    v = std::conj(v);
    d = std::conj(d);
  }
  return {{v, em.value_err, EvalMethod::euler_maclaurin},
          {d, em.derivative_err, EvalMethod::euler_maclaurin}};
}

EvalResult zeta_dirichlet_tail(const EvalPoint& point, long n_terms) {
  const EvalPoint p = checked(point);
  if (p.sigma <= 1.0) {
    throw DomainError("direct Dirichlet series needs sigma > 1");
  }
  if (n_terms < 1) throw DomainError("n_terms must be positive");
  Complex sum = 0.0;
  // smallest terms first
  for (long n = n_terms; n >= 1; --n) {
    sum += detail::pow_minus_s(std::log(static_cast<long double>(n)), p.sigma, p.t);
  }
  const double nd = static_cast<double>(n_terms);
  // sum_{n > N} n^{-sigma} <= N^{1-sigma} / (sigma - 1)
  const double tail = std::pow(nd, 1.0 - p.sigma) / (p.sigma - 1.0);
  return {sum, tail + 4.0 * nd * std::numeric_limits<double>::epsilon(),
          EvalMethod::dirichlet_tail};
}

double theta_rs(double t) {
  if (!(t >= 7.0)) throw DomainError("theta_rs requires t >= 7");
  return static_cast<double>(detail::theta_rs_ld(static_cast<long double>(t)));
}

double theta_rs_derivative(double t) {
  if (!(t >= 7.0)) throw DomainError("theta_rs requires t >= 7");
  double d = 0.5 * std::log(t / (2.0 * kPi));
  // derivative of the asymptotic tail: -(2k-1) a_k t^{-2k}
  const double inv_t2 = 1.0 / (t * t);
  d -= (1.0 / 48.0) * inv_t2 + 3.0 * (7.0 / 5760.0) * inv_t2 * inv_t2 +
       5.0 * (31.0 / 80640.0) * inv_t2 * inv_t2 * inv_t2;
  return d;
}

EvalResult hardy_z_unchecked(double t) {
  if (!(t >= 7.0) || t > 1.01 * kTMax) {
    throw DomainError("Z(t) evaluation outside 7 <= t <= 1.01e6");
  }
  if (t > kEulerMaclaurinMaxT) return riemann_siegel_formula(t);
  const EmSums em = euler_maclaurin(0.5, t, false);
  const double th = detail::reduce_angle(detail::theta_rs_ld(static_cast<long double>(t)));
  const Complex rotated = em.value * std::polar(1.0, th);
  return {Complex(rotated.real(), 0.0),
          em.value_err + 1e-15 * std::abs(em.value), EvalMethod::euler_maclaurin};
}

EvalResult riemann_siegel_Z(double t) {
  if (!(t >= kTFloor) || t > kTMax) {
    throw DomainError("riemann_siegel_Z requires 14 <= t <= 1e6");
  }
  return hardy_z_unchecked(t);
}

namespace {

void require_t_floor(double t, std::string_view what) {
  if (std::abs(t) < kTFloor) {
    std::ostringstream msg;
    msg << what << " requires |t| >= 14 (got t = " << t << ")";
    throw DomainError(msg.str());
  }
}

void enforce_guard(const EvalPoint& p, const ZeroCatalog& catalog, double guard) {
  const double d = catalog.nearest_zero_distance(p.s());
  if (d < guard) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "point " << p.sigma << " + " << p.t << "i lies " << d
        << " from a catalogued zero (guard " << guard << ")";
    throw NearZeroError(msg.str());
  }
}

}  // namespace

EvalResult log_zeta(const EvalPoint& point, const ZeroCatalog& catalog,
                    const LogZetaOptions& options) {
  const EvalPoint p = checked(point);
  require_t_floor(p.t, "log_zeta");
  enforce_guard(p, catalog, options.zero_guard);
  if (p.t < 0) {
    EvalResult r = log_zeta(p.conj(), catalog, options);
    r.value = std::conj(r.value);
    return r;
  }

  const double t = p.t;
  auto node = [&](double alpha) {
    return zeta_with_derivative(EvalPoint{alpha, t, std::nullopt});
  };
  auto log_deriv_im = [](const ZetaAndDerivative& z) {
    return (z.derivative.value / z.value.value).imag();
  };

  ZetaAndDerivative prev = node(2.0);
  // Re zeta(2 + it) >= 2 - zeta(2) > 0, so the principal argument is the branch.
  double arg = std::arg(prev.value.value);
  double err = prev.value.abs_error_bound / std::abs(prev.value.value);
  double alpha = 2.0;
  const double direction = p.sigma < 2.0 ? -1.0 : 1.0;
  double h = options.max_step;

  while (alpha != p.sigma) {
    const double remaining = std::abs(p.sigma - alpha);
    const double clearance = 0.5 * catalog.nearest_zero_distance({alpha, t});
    const double step = std::min({h, remaining, options.max_step, clearance});
    if (step < options.min_step) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "branch tracking stalled at " << alpha << " + " << t << "i";
      throw BranchTrackError(msg.str());
    }
    const double next_alpha = step == remaining ? p.sigma : alpha + direction * step;
    const ZetaAndDerivative cur = node(next_alpha);
    if (cur.value.value == Complex(0.0, 0.0)) {
      throw BranchTrackError("zeta vanished on the continuation path");
    }
    const double darg = std::arg(cur.value.value / prev.value.value);
    const double predicted =
        0.5 * (next_alpha - alpha) * (log_deriv_im(prev) + log_deriv_im(cur));
    if (std::abs(darg) > options.max_arg_step || std::abs(darg - predicted) > 0.1) {
      h = 0.5 * step;
      if (h < options.min_step) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "cannot certify continuation past " << alpha << " + " << t << "i";
        throw BranchTrackError(msg.str());
      }
      continue;
    }
    arg += darg;
    alpha = next_alpha;
    prev = cur;
    err += prev.value.abs_error_bound / std::abs(prev.value.value);
    h = std::min(options.max_step, 2.0 * step);
  }

  const double modulus = std::abs(prev.value.value);
  return {Complex(std::log(modulus), arg), err, EvalMethod::euler_maclaurin};
}

EvalResult zeta_log_deriv(const EvalPoint& point) {
  const ZetaAndDerivative z = zeta_with_derivative(point);
  const double mod = std::abs(z.value.value);
  if (mod < 1e-12) throw NearZeroError("zeta'/zeta evaluated at a zero");
  const Complex ratio = z.derivative.value / z.value.value;
  const double err =
      (z.derivative.abs_error_bound + std::abs(ratio) * z.value.abs_error_bound) / mod;
  return {ratio, err, EvalMethod::euler_maclaurin};
}

EvalResult zeta_log_deriv(const EvalPoint& point, const ZeroCatalog& catalog,
                          double zero_guard) {
  enforce_guard(checked(point), catalog, zero_guard);
  return zeta_log_deriv(point);
}

double s_of_t(double t, const ZeroCatalog& catalog, const LogZetaOptions& options) {
  require_t_floor(t, "s_of_t");
  return log_zeta(EvalPoint::make(0.5, t), catalog, options).value.imag() / kPi;
}

}  // namespace zetalab
