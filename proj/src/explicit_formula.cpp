#include "zetalab/explicit_formula.hpp"

#include <cmath>
#include <limits>
#include <mutex>

#include "numeric_detail.hpp"
#include "zetalab/errors.hpp"

namespace zetalab {

using detail::kPi;

VonMangoldtTable::VonMangoldtTable(long limit) {
  if (limit < 1) throw DomainError("von Mangoldt table limit must be positive");
  entries_.assign(static_cast<std::size_t>(limit) + 1, PrimePower{});
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (long p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    for (long m = p * p; m <= limit; m += p) composite[m] = true;
    long pk = p;
    for (int k = 1;; ++k) {
      entries_[pk] = {p, k};
      if (pk > limit / p) break;
      pk *= p;
    }
  }
}

std::shared_ptr<const VonMangoldtTable> VonMangoldtTable::shared(long limit) {
  static std::mutex mu;
  static std::shared_ptr<const VonMangoldtTable> cached;
  std::lock_guard lock(mu);
  if (!cached || cached->limit() < limit) {
    cached = std::make_shared<const VonMangoldtTable>(std::max(limit, 1024L));
  }
  return cached;
}

VonMangoldtTable::PrimePower VonMangoldtTable::factor(long n) const {
  if (n < 1 || n > limit()) throw DomainError("n outside the von Mangoldt table");
  return entries_[n];
}

double VonMangoldtTable::operator()(long n) const {
  const auto f = factor(n);
  return f.p == 0 ? 0.0 : std::log(static_cast<double>(f.p));
}

namespace {

void check_x(double x) {
  if (!(x >= 3.0 && x <= kMaxSmoothingX)) {
    throw DomainError("smoothing length x must lie in [3, 1000]");
  }
}

long square_floor(double x) { return static_cast<long>(std::floor(x * x)); }

double lambda_x_with(const VonMangoldtTable& table, long n, double x) {
  if (static_cast<double>(n) > x * x) return 0.0;
  const double lam = table(n);
  if (lam == 0.0 || static_cast<double>(n) <= x) return lam;
  return lam * std::log(x * x / static_cast<double>(n)) / std::log(x);
}

}  // namespace

// t/2 dips below 14 for t < 28; every family stays defined down to 7.
double eval_at_half(FunctionSpec f, double t) {
  f.t_min = std::min(f.t_min, 7.0);
  return eval_spec(f, 0.5 * t);
}

double lambda_x(long n, double x) {
  check_x(x);
  if (n < 1) throw DomainError("lambda_x needs n >= 1");
  if (static_cast<double>(n) > x * x) return 0.0;
  return lambda_x_with(*VonMangoldtTable::shared(square_floor(x)), n, x);
}

Complex dirichlet_sum(Complex s, double x, DirichletWeight weight) {
  check_x(x);
  const long n_max = square_floor(x);
  const auto table = VonMangoldtTable::shared(n_max);
  Complex sum = 0.0;
  for (long n = 2; n <= n_max; ++n) {
    const double w = lambda_x_with(*table, n, x);
    if (w == 0.0) continue;
    const double ln = std::log(static_cast<double>(n));
    Complex term = w * std::exp(-s * ln);
    if (weight == DirichletWeight::over_log_n) term /= ln;
    sum += term;
  }
  return sum;
}

SmoothingParams SmoothingParams::make(double x, double a) {
  check_x(x);
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("shift a must lie in (0, 1]");
  SmoothingParams p;
  p.x = x;
  p.delta_x = 1.0 / std::log(x);
  p.a = a;
  p.sigma_1 = 0.5 + a + p.delta_x;
  return p;
}

SmoothingParams SmoothingParams::natural(double x) {
  check_x(x);
  return make(x, 1.0 / std::log(x));
}

double neighborhood_radius(double beta, double x, double t) {
  return std::min(0.5 * t, std::pow(x, 3.0 * (beta - 0.5)) / std::sqrt(std::log(x)));
}

ZeroNeighborhood build_neighborhood(const ZeroCatalog& catalog, double x, double t) {
  check_x(x);
  if (!(t >= kTFloor) || !(t <= kTMax)) throw DomainError("neighborhood needs 14 <= t <= 1e6");
  const double reach = neighborhood_radius(1.0, x, t);
  catalog.require_covered(std::max(t - reach, kTFloor), t + reach, "zero neighborhood");

  ZeroNeighborhood out;
  out.x = x;
  out.t = t;
  out.catalog_id = catalog.id();
  double max_radius = 0.0;
  double sigma_A = -1.0;
  // Conjugates sit at -gamma, farther than t/2 from t > 0, so never qualify.
  for (const auto& z : catalog.in_window(t - reach, t + reach)) {
    const double r = neighborhood_radius(z.beta, x, t);
    if (std::abs(t - z.gamma) > r) continue;
    out.members.push_back(z);
    max_radius = std::max(max_radius, r);
    sigma_A = std::max(sigma_A, z.beta);
  }
  if (out.members.empty()) {
    out.empty_sentinel = true;
    out.sigma_A = 0.5;
    out.L = 1.0 / std::log(x);
  } else {
    out.sigma_A = sigma_A;
    out.L = std::min(0.5 * t, max_radius);
  }
  return out;
}

BoundQuantities bound_quantities(const ZeroNeighborhood& nbhd, const SmoothingParams& params,
                                 const SizdcParams& sizdc, double sigma, double t) {
  if (!(sigma >= 0.5 && sigma <= kSigmaMax)) {
    throw DomainError("bound quantities need sigma in [1/2, 3]");
  }
  if (nbhd.x != params.x || nbhd.t != t) {
    throw DomainError("neighborhood was built for a different (x, t)");
  }
  const double psi = eval_at_half(sizdc.psi, t);
  if (!(psi > 0.0) || params.a < 1.0 / psi || params.a > 1.0) {
    throw DomainError("shift a = " + std::to_string(params.a) +
                      " outside [1/Psi(t/2), 1] with Psi(t/2) = " + std::to_string(psi));
  }
  const double phi = eval_at_half(sizdc.phi, t);
  if (!(phi > 1.0)) {
    throw HypothesisError("Phi(t/2) = " + std::to_string(phi) + " must exceed 1");
  }
  const double x = params.x;
  const double a = params.a;
  const double dx = params.delta_x;
  const double log_x = std::log(x);
  const double log_t = std::log(t);
  const double log_phi = std::log(phi);

  BoundQuantities q;
  q.phi_half_t = phi;
  q.tau = (!nbhd.empty_sentinel && a <= nbhd.sigma_A) ? 1 : 0;

  const double upper = std::floor((nbhd.sigma_A - a) * log_phi);
  q.f_upper_index = upper < 0.0 ? -1 : static_cast<long>(upper);
  double f_sum = 0.0;
  for (long k = 0; k <= q.f_upper_index; ++k) {
    f_sum += std::exp((k + 1.0) * (2.0 * log_x - log_phi) / log_phi);
  }
  q.F_a = std::pow(x / phi, a) * f_sum;

  q.G_a = q.tau == 0 ? 0.0
                     : (eval_at_half(sizdc.l, t) + dx) * eval_at_half(sizdc.v, t) * log_x * log_t;

  q.dirichlet_abs = std::abs(dirichlet_sum({params.sigma_1, t}, x, DirichletWeight::plain));

  const double x_shift = std::pow(x, 0.5 + a - sigma) / log_x;
  const double x_half = std::pow(x, 0.5 - sigma) / log_x;
  const double phi_ratio = std::pow(phi, -dx) * log_x / log_phi;
  q.y_terms = {
      {"dirichlet", x_shift * q.dirichlet_abs},
      {"log_t", x_shift * log_t},
      {"zero_sum", q.G_a * x_half * q.F_a},
      {"near_zeros", q.G_a * x_half * (1.0 + phi_ratio) * std::pow(x / phi, a)},
      {"phi_power", q.G_a * std::pow(phi, 0.5 - sigma + dx) / log_phi},
  };
  q.e_terms = {
      {"dirichlet", q.dirichlet_abs},
      {"log_t", log_t},
      {"zero_sum", q.G_a * std::pow(x, -a) * q.F_a},
      {"phi_power", q.G_a * std::pow(phi, -a) * (1.0 + phi_ratio)},
  };
  for (const auto& [name, v] : q.y_terms) q.Y_a += v;
  for (const auto& [name, v] : q.e_terms) q.E_a += v;
  return q;
}

double n_upper_bound(double u) {
  return theta_rs(u) / kPi + 1.0 + 0.112 * std::log(u) + 0.278 * std::log(std::log(u)) + 2.510;
}

namespace {

// Majorant of sum over zeros with gamma > C of 1/(gamma - c)^2, where c < C:
// the Stieltjes integral int_C^inf (N(u) - N(C)) 2/(u - c)^3 du with N
// replaced by its explicit upper bound, after u = c + (C - c) e^y.
double zero_tail_integral(double C, double c, long n_at_C) {
  const double d0 = C - c;
  constexpr double kYMax = 50.0;
  constexpr int kPanels = 4000;
  const double h = kYMax / kPanels;
  auto f = [&](double y) {
    const double u = c + d0 * std::exp(y);
    return 2.0 * std::max(0.0, n_upper_bound(u) - static_cast<double>(n_at_C)) *
           std::exp(-2.0 * y) / (d0 * d0);
  };
  double acc = 0.0;
  for (int i = 0; i <= kPanels; ++i) {
    const double w = (i == 0 || i == kPanels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w * f(i * h);
  }
  acc *= h / 3.0;
  // Beyond y = kYMax: N(u) <= u log u for u >= 100.
  const double u_end = std::abs(c) + d0;
  const double rest = 2.0 * u_end * std::exp(-kYMax) *
                      (std::log(u_end) + kYMax + 1.0) / (d0 * d0);
  return acc * (1.0 + 1e-6) + rest;
}

}  // namespace

Lemma1Result lemma1_rhs(Complex s, double x, const ZeroCatalog& catalog, double gamma_cutoff) {
  check_x(x);
  const EvalPoint p = EvalPoint::make(s.real(), s.imag());
  const double abs_t = std::abs(p.t);
  if (!(gamma_cutoff > abs_t) || !std::isfinite(gamma_cutoff)) {
    throw DomainError("zero cutoff must exceed |t|");
  }
  const long n_at_cutoff = n_of_t(catalog, gamma_cutoff);
  const EvalResult ld = zeta_log_deriv(p, catalog);

  const double lx = std::log(x);
  Lemma1Result out;
  double abs_sum = 0.0;
  out.log_deriv_term = -ld.value;

  const Complex one_minus_s = 1.0 - s;
  out.pole_term = (std::exp(2.0 * lx * one_minus_s) - std::exp(lx * one_minus_s)) /
                  (one_minus_s * one_minus_s * lx);
  abs_sum += std::abs(out.pole_term);

  for (const auto& z : catalog.in_window(0.0, gamma_cutoff)) {
    for (const Complex rho : {z.rho(), std::conj(z.rho())}) {
      const Complex d = rho - s;
      const Complex term = static_cast<double>(z.multiplicity) *
                           (std::exp(2.0 * lx * d) - std::exp(lx * d)) / (d * d * lx);
      out.zero_sum += term;
      abs_sum += std::abs(term);
    }
    out.zeros_used += z.multiplicity;
  }

  for (int k = 1; k < 100000; ++k) {
    const Complex u = 2.0 * k + s;
    const Complex term = (std::exp(-2.0 * lx * u) - std::exp(-lx * u)) / (u * u * lx);
    out.trivial_sum += term;
    abs_sum += std::abs(term);
    if (std::abs(term) < 1e-16) break;
  }

  out.rhs = out.log_deriv_term + out.pole_term - out.zero_sum - out.trivial_sum;

  // Uncatalogued zeros have beta < 1, so each term is at most
  // (x^{2(1 - sigma)} + x^{1 - sigma}) / (|gamma -+ t|^2 log x).
  const double amp = (std::pow(x, 2.0 * (1.0 - p.sigma)) + std::pow(x, 1.0 - p.sigma)) / lx;
  out.tail_bound = amp * (zero_tail_integral(gamma_cutoff, abs_t, n_at_cutoff) +
                          zero_tail_integral(gamma_cutoff, -abs_t, n_at_cutoff));
  out.eval_error = ld.abs_error_bound + 16.0 * std::numeric_limits<double>::epsilon() *
                                            (abs_sum + std::abs(ld.value));
  return out;
}

}  // namespace zetalab
