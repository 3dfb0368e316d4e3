#include "zetalab/sizdc.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
  bool takes_arg;
};

constexpr FamilyName kFamilies[] = {
    {Family::constant, "const", true},          {Family::zero, "zero", false},
    {Family::one, "one", false},                {Family::power_log, "power_log", true},
    {Family::recip_loglog, "recip_loglog", false}, {Family::scaled_loglog, "scaled_loglog", true},
    {Family::recip, "recip", true},
};

const FamilyName& lookup(Family f) {
  for (const auto& e : kFamilies) {
    if (e.family == f) return e;
  }
  throw DomainError("unknown function family");
}

std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

[[noreturn]] void grammar_error(const std::string& what) {
  throw FormatError(what + "; " + std::string(kSizdcGrammar));
}

FunctionSpec parse_function(std::string_view key, std::string_view text) {
  const auto colon = text.find(':');
  const auto name = text.substr(0, colon);
  for (const auto& e : kFamilies) {
    if (e.name != name) continue;
    FunctionSpec f{e.family, 0.0};
    if (!e.takes_arg) {
      if (colon != std::string_view::npos) {
        grammar_error(std::string(key) + ": family '" + std::string(name) + "' takes no argument");
      }
      return f;
    }
    if (colon == std::string_view::npos) {
      grammar_error(std::string(key) + ": family '" + std::string(name) + "' needs an argument");
    }
    const auto arg = text.substr(colon + 1);
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), f.arg);
    if (ec != std::errc() || ptr != arg.data() + arg.size() || !std::isfinite(f.arg)) {
      grammar_error(std::string(key) + ": bad argument '" + std::string(arg) + "'");
    }
    return f;
  }
  grammar_error(std::string(key) + ": unknown family '" + std::string(name) + "'");
}

std::vector<double> values_on_grid(const FunctionSpec& f) {
  std::vector<double> out;
  for (double t : hypothesis_grid()) {
    if (t >= f.t_min) out.push_back(eval_spec(f, t));
  }
  return out;
}

}  // namespace

std::string FunctionSpec::to_string() const {
  const auto& e = lookup(family);
  std::string out(e.name);
  if (e.takes_arg) out += ":" + g12(arg);
  return out;
}

double eval_spec(const FunctionSpec& f, double t) {
  const double u = std::abs(t);
  if (!(u >= f.t_min) || !std::isfinite(u)) {
    throw DomainError("parameter function " + f.to_string() + " evaluated below t_min = " +
                      g12(f.t_min));
  }
  switch (f.family) {
    case Family::constant: return f.arg;
    case Family::zero: return 0.0;
    case Family::one: return 1.0;
    case Family::power_log: return std::pow(std::log(u), f.arg);
    case Family::recip_loglog: return 1.0 / std::log(std::log(u));
    case Family::scaled_loglog: return f.arg * std::log(std::log(u));
    case Family::recip: return f.arg / u;
  }
  throw DomainError("unknown function family");
}

std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::constant: return "constant";
    case Monotonicity::weakly_increasing: return "weakly_increasing";
    case Monotonicity::weakly_decreasing: return "weakly_decreasing";
    case Monotonicity::mixed: return "mixed";
  }
  return "mixed";
}

std::vector<double> hypothesis_grid() {
  std::vector<double> grid(100);
  const double lo = std::log(14.0), hi = std::log(1.0e6);
  for (int i = 0; i < 100; ++i) grid[i] = std::exp(lo + (hi - lo) * i / 99.0);
  grid.front() = 14.0;
  grid.back() = 1.0e6;
  return grid;
}

Monotonicity monotonicity_on_grid(const FunctionSpec& f) {
  const auto v = values_on_grid(f);
  double scale = 0.0;
  for (double y : v) scale = std::max(scale, std::abs(y));
  const double tol = 1e-12 * scale;
  bool inc = true, dec = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < v[i - 1] - tol) inc = false;
    if (v[i] > v[i - 1] + tol) dec = false;
  }
  if (inc && dec) return Monotonicity::constant;
  if (inc) return Monotonicity::weakly_increasing;
  if (dec) return Monotonicity::weakly_decreasing;
  return Monotonicity::mixed;
}

std::string SizdcParams::to_string() const {
  return "l=" + l.to_string() + ";v=" + v.to_string() + ";phi=" + phi.to_string() +
         ";psi=" + psi.to_string();
}

SizdcParams parse_sizdc_params(std::string_view text) {
  SizdcParams out;
  bool seen[4] = {false, false, false, false};
  constexpr std::string_view keys[4] = {"l", "v", "phi", "psi"};
  FunctionSpec* slots[4] = {&out.l, &out.v, &out.phi, &out.psi};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find(';', pos), text.size());
    const auto item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) grammar_error("empty entry");
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) grammar_error("entry '" + std::string(item) + "' lacks '='");
    const auto key = item.substr(0, eq);
    const auto it = std::find(std::begin(keys), std::end(keys), key);
    if (it == std::end(keys)) grammar_error("unknown key '" + std::string(key) + "'");
    const auto idx = static_cast<std::size_t>(it - std::begin(keys));
    if (seen[idx]) grammar_error("key '" + std::string(key) + "' given twice");
    seen[idx] = true;
    *slots[idx] = parse_function(key, item.substr(eq + 1));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (!seen[i]) grammar_error("missing key '" + std::string(keys[i]) + "'");
  }
  return out;
}

HypothesisCheck check_hypotheses(const SizdcParams& p) {
  HypothesisCheck out;
  auto check = [&](const FunctionSpec& f, std::string_view name, bool decreasing,
                   double floor) {
    const auto v = values_on_grid(f);
    const double lo = *std::min_element(v.begin(), v.end());
    const Monotonicity m = monotonicity_on_grid(f);
    bool ok = lo >= floor;
    if (!ok) {
      out.notes.push_back(std::string(name) + " = " + f.to_string() + " drops to " + g12(lo) +
                          " < " + g12(floor) + " on the grid");
    }
    const bool shape_ok = m == Monotonicity::constant ||
                          m == (decreasing ? Monotonicity::weakly_decreasing
                                           : Monotonicity::weakly_increasing);
    if (!shape_ok) {
      out.notes.push_back(std::string(name) + " = " + f.to_string() + " is " +
                          std::string(to_string(m)) + ", expected weakly " +
                          (decreasing ? "decreasing" : "increasing"));
    }
    return ok && shape_ok;
  };
  out.l_ok = check(p.l, "l", true, 0.0);
  out.v_ok = check(p.v, "v", true, 0.0);
  out.phi_ok = check(p.phi, "phi", false, 3.0);
  out.psi_ok = check(p.psi, "psi", false, 3.0);
  return out;
}

const SizdcRow* SizdcReport::first_violation() const {
  for (const auto& r : rows) {
    if (!r.satisfied) return &r;
  }
  return nullptr;
}

SizdcReport check_sizdc(const ZeroCatalog& catalog, const SizdcParams& params,
                        const SizdcGrid& grid) {
  if (!(grid.T_a >= kTFloor) || !(grid.T_a <= grid.T_b) || grid.n_T < 1 || grid.n_sigma < 1 ||
      (grid.n_T == 1 && grid.T_a != grid.T_b) || !std::isfinite(grid.T_b)) {
    throw DomainError("SIZDC grid needs 14 <= T_a <= T_b, n_T >= 1 and n_sigma >= 1");
  }
  std::vector<double> Ts(grid.n_T);
  for (int i = 0; i < grid.n_T; ++i) {
    Ts[i] = grid.n_T == 1 ? grid.T_a
                          : grid.T_a + (grid.T_b - grid.T_a) * i / (grid.n_T - 1.0);
  }
  Ts.back() = grid.T_b;
  double max_l = 0.0;
  for (double T : Ts) {
    const double l = eval_spec(params.l, T);
    if (!(l >= 0.0)) throw DomainError("window length l(T) must be nonnegative");
    max_l = std::max(max_l, l);
  }
  catalog.require_covered(grid.T_a, grid.T_b + max_l, "SIZDC check");

  SizdcReport report;
  report.params = params;
  report.grid = grid;
  report.hypotheses = check_hypotheses(params);
  report.catalog_id = catalog.id();
  report.hypothesis_catalog = catalog.mode() == CatalogMode::hypothesis;

  for (double T : Ts) {
    const double l = eval_spec(params.l, T);
    const double v = eval_spec(params.v, T);
    const double phi = eval_spec(params.phi, T);
    const double psi = eval_spec(params.psi, T);
    const double floor = psi > 0.0 ? 0.5 + 1.0 / psi : std::numeric_limits<double>::infinity();
    std::vector<double> sigmas;
    if (floor <= 1.0) {
      if (grid.spacing == SigmaSpacing::phi_slices) {
        const double step = phi > 1.0 ? 1.0 / std::log(phi) : 0.0;
        for (int j = 0; j < grid.n_sigma; ++j) {
          const double s = floor + j * step;
          if (s > 1.0 || (j > 0 && step <= 0.0)) break;
          sigmas.push_back(s);
        }
      } else {
        for (int j = 0; j < grid.n_sigma; ++j) {
          sigmas.push_back(grid.n_sigma == 1 ? floor
                                             : floor + (1.0 - floor) * j / (grid.n_sigma - 1.0));
        }
      }
    }
    if (sigmas.empty()) report.empty_sigma_domain.push_back(T);
    const auto window = catalog.in_window(T, T + l);
    for (double sigma : sigmas) {
      SizdcRow row;
      row.T = T;
      row.sigma = sigma;
      row.sigma_floor = floor;
      row.window = l;
      for (const auto& z : window) {
        if (z.beta >= sigma) row.lhs_count += z.multiplicity;
      }
      row.rhs_bound = l * v * std::log(T) * std::pow(phi, 0.5 - sigma);
      if (row.lhs_count == 0) {
        row.ratio = 0.0;
      } else if (row.rhs_bound == 0.0) {
        row.ratio = std::numeric_limits<double>::infinity();
      } else {
        row.ratio = static_cast<double>(row.lhs_count) / row.rhs_bound;
      }
      row.satisfied = static_cast<double>(row.lhs_count) <= row.rhs_bound;
      report.max_ratio = std::max(report.max_ratio, row.ratio);
      report.all_satisfied = report.all_satisfied && row.satisfied;
      report.rows.push_back(row);
    }
  }
  return report;
}

SizdcParams rh_case() {
  return {FunctionSpec::one(), FunctionSpec::zero(), FunctionSpec::constant(3.0),
          FunctionSpec::constant(10.0)};
}

LindelofCase lindelof_case(const FunctionSpec& v_decay, double phi_const, double psi_const) {
  const Monotonicity m = monotonicity_on_grid(v_decay);
  if (m != Monotonicity::constant && m != Monotonicity::weakly_decreasing) {
    throw MonotonicityError("v = " + v_decay.to_string() + " is " + std::string(to_string(m)) +
                            " on the grid; it must be weakly decreasing");
  }
  LindelofCase out;
  out.params = {FunctionSpec::one(), v_decay, FunctionSpec::constant(phi_const),
                FunctionSpec::constant(psi_const)};
  const double first = eval_spec(v_decay, 14.0);
  const double last = eval_spec(v_decay, 1.0e6);
  out.decays = m == Monotonicity::weakly_decreasing && last >= 0.0 && last < first;
  return out;
}

}  // namespace zetalab
