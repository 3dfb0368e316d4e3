#include "zetalab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zetalab/baselines.hpp"
#include "zetalab/decomposition.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/report_io.hpp"
#include "zetalab/sizdc.hpp"
#include "zetalab/zero_catalog.hpp"

namespace zetalab {
namespace {

namespace bl = baselines;

constexpr const char* kDefaultSizdc = "l=one;v=one;phi=const:3;psi=const:10";
constexpr const char* kCacheEnv = "ZETALAB_ZERO_CACHE";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f.flush()) throw std::runtime_error("write to '" + path + "' failed");
}

ZeroCatalog load_cli_catalog(const std::string& flag_path) {
  std::string path = flag_path;
  if (path.empty()) {
    if (const char* env = std::getenv(kCacheEnv); env != nullptr) path = env;
  }
  if (path.empty()) {
    throw UsageError("no zero catalog: pass --zeros FILE or set " + std::string(kCacheEnv));
  }
  return load_catalog(path);
}

// One synthetic zero per line: gamma beta [multiplicity]; '#' starts a comment.
std::vector<NontrivialZero> load_synthetic(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot open synthetic zero file '" + path + "'");
  std::vector<NontrivialZero> zeros;
  std::string line;
  for (int n = 1; std::getline(f, line); ++n) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    NontrivialZero z;
    z.provenance = Provenance::synthetic;
    if (!(in >> z.gamma)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw FormatError(path + ": line " + std::to_string(n) + ": expected 'gamma beta [multiplicity]'");
    }
    if (!(in >> z.beta)) {
      throw FormatError(path + ": line " + std::to_string(n) + ": missing beta");
    }
    if (!(in >> z.multiplicity)) z.multiplicity = 1;
    std::string rest;
    if (in >> rest) throw FormatError(path + ": line " + std::to_string(n) + ": trailing text");
    zeros.push_back(z);
  }
  return zeros;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

// ------------------------------------------------------------------ zeros

struct ZerosArgs {
  double from = 14.0;
  double to = 100.0;
  std::string out_path;
  int max_doublings = ScanOptions{}.max_doublings;
};

int cmd_zeros(const ZerosArgs& a, std::ostream& out) {
  if (!(a.from < a.to)) throw UsageError("--from must be smaller than --to");
  ScanOptions opt;
  opt.max_doublings = a.max_doublings;
  const ScanResult r = scan_zeros_detailed(a.from, a.to, opt);
  save_catalog(r.catalog, a.out_path);
  const auto& d = r.diagnostics;
  out << r.catalog.size() << " zeros on [" << format_g12(a.from) << ", " << format_g12(a.to)
      << "]; N(" << format_g12(d.lower_end.t) << ") = " << d.lower_end.count << " ("
      << to_string(d.lower_end.method) << "), N(" << format_g12(d.upper_end.t)
      << ") = " << d.upper_end.count << " (" << to_string(d.upper_end.method)
      << "); catalog " << r.catalog.id() << '\n';
  return exit_code::ok;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  std::string what;
  double t = 0.0;
  double x = 10.0;
  double sigma = 2.0;
  double a = 0.5;
  double eps0 = 0.5;
  double cutoff = 0.0;
  std::string zeros;
  std::string sizdc = kDefaultSizdc;
  std::string json;
};

struct VerifyFlags {
  CLI::Option* t;
  CLI::Option* x;
  CLI::Option* sigma;
  CLI::Option* a;
  CLI::Option* eps0;
  CLI::Option* cutoff;
  CLI::Option* sizdc;
};

// Rejects flags that the chosen check does not read and demands the ones it needs.
void check_applicable(const std::string& what, const VerifyFlags& f,
                      const std::vector<CLI::Option*>& needed,
                      const std::vector<CLI::Option*>& allowed) {
  const std::vector<CLI::Option*> all = {f.t, f.x, f.sigma, f.a, f.eps0, f.cutoff, f.sizdc};
  for (auto* o : all) {
    const bool ok = std::find(allowed.begin(), allowed.end(), o) != allowed.end() ||
                    std::find(needed.begin(), needed.end(), o) != needed.end();
    if (o->count() > 0 && !ok) {
      throw UsageError(o->get_name() + " does not apply to --what " + what);
    }
  }
  for (auto* o : needed) {
    if (o->count() == 0) throw UsageError("--what " + what + " requires " + o->get_name());
  }
}

int finish_verify(const Json& j, const VerifyArgs& a, bool within, const std::string& summary,
                  std::ostream& out, std::ostream& err) {
  const std::string text = dump_json(j);
  if (a.json.empty()) {
    out << text;
  } else {
    write_file(a.json, text);
    out << summary << '\n';
  }
  if (!within) {
    err << "baseline exceeded: " << summary << '\n';
    return exit_code::baseline;
  }
  return exit_code::ok;
}

int cmd_verify(const VerifyArgs& a, const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  const std::string& w = a.what;
  if (w == "lemma1") {
    check_applicable(w, f, {f.t, f.x, f.sigma}, {f.cutoff});
    const ZeroCatalog catalog = load_cli_catalog(a.zeros);
    double cutoff = a.cutoff;
    if (f.cutoff->count() == 0) {
      if (!catalog.certified_range()) {
        throw UsageError("catalog has no certified range; pass --cutoff");
      }
      cutoff = catalog.certified_range()->hi;
    }
    const Lemma1Check c = check_lemma1({a.sigma, a.t}, a.x, catalog, cutoff);
    return finish_verify(to_json(c), a, c.within_bound,
                         "lemma1 residual " + format_g12(c.residual) + ", tail bound " +
                             format_g12(c.rhs.tail_bound),
                         out, err);
  }
  if (w == "theorem1" || w == "theorem2") {
    const bool two = w == "theorem2";
    if (two) {
      check_applicable(w, f, {f.t, f.x, f.a, f.sigma}, {f.sizdc});
    } else {
      check_applicable(w, f, {f.t, f.x, f.sigma}, {f.sizdc});
    }
    const SizdcParams params = parse_sizdc_params(a.sizdc);
    const ZeroCatalog catalog = load_cli_catalog(a.zeros);
    const DecompositionReport r = two ? verify_theorem2(a.t, a.x, a.a, a.sigma, catalog, params)
                                      : verify_theorem1(a.t, a.x, a.sigma, catalog, params);
    const double base = r.kase == DecompositionCase::upper ? bl::kTheorem1UpperRatio
                                                           : bl::kTheorem1LowerRatio;
    return finish_verify(to_json(r), a, bl::within(r.ratio, base),
                         w + " (" + std::string(to_string(r.kase)) + " case) ratio " +
                             format_g12(r.ratio) + ", baseline " + format_g12(base),
                         out, err);
  }
  if (w == "corollary") {
    check_applicable(w, f, {f.t, f.eps0}, {});
    const ZeroCatalog catalog = load_cli_catalog(a.zeros);
    const CorollaryReport r = verify_corollary(a.t, a.eps0, catalog);
    return finish_verify(to_json(r), a, bl::within(r.ratio, bl::kCorollaryRatio),
                         "corollary ratio " + format_g12(r.ratio) + ", baseline " +
                             format_g12(bl::kCorollaryRatio),
                         out, err);
  }
  if (w.rfind("bound:", 0) == 0) {
    const ProofBound b = parse_proof_bound(std::string_view(w).substr(6));
    check_applicable(w, f, {f.t}, {f.x, f.a, f.sigma, f.sizdc});
    BoundInputs in;
    in.t = a.t;
    if (f.x->count() > 0) in.x = a.x;
    if (f.a->count() > 0) in.a = a.a;
    if (f.sigma->count() > 0) in.sigma = a.sigma;
    const SizdcParams params = parse_sizdc_params(a.sizdc);
    const ZeroCatalog catalog = load_cli_catalog(a.zeros);
    const BoundCheckReport r = check_proof_bound(b, in, catalog, params);
    // The estimates carry unspecified implied constants; the ratio is reported only.
    return finish_verify(to_json(r), a, true,
                         w + " lhs " + format_g12(r.lhs_value) + ", bound " +
                             format_g12(r.bound_value),
                         out, err);
  }
  throw UsageError("--what must be lemma1, theorem1, theorem2, corollary or bound:<id>");
}

// ------------------------------------------------------------------ sizdc

struct SizdcArgs {
  std::string params = kDefaultSizdc;
  std::string zeros;
  double from = 100.0;
  double to = 1.0e4;
  std::string grid = "10,8";
  std::string synthetic;
  int random_count = 0;
  std::uint64_t seed = 1;
  std::string spacing = "phi_slices";
  std::string csv;
  std::string json;
};

SizdcGrid parse_grid(const SizdcArgs& a) {
  SizdcGrid g;
  g.T_a = a.from;
  g.T_b = a.to;
  const auto comma = a.grid.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    std::size_t used = 0;
    g.n_T = std::stoi(a.grid.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("n_T");
    const std::string rest = a.grid.substr(comma + 1);
    g.n_sigma = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("n_sigma");
  } catch (const std::exception&) {
    throw UsageError("--grid expects nT,nS (two positive integers), got '" + a.grid + "'");
  }
  if (g.n_T < 1 || g.n_sigma < 1) throw UsageError("--grid counts must be positive");
  if (!(a.from < a.to) && !(a.from == a.to && g.n_T == 1)) {
    throw UsageError("--from must be smaller than --to (equal only with nT = 1)");
  }
  g.spacing = a.spacing == "uniform" ? SigmaSpacing::uniform : SigmaSpacing::phi_slices;
  return g;
}

int cmd_sizdc(const SizdcArgs& a, std::ostream& out, std::ostream& err) {
  const SizdcParams params = parse_sizdc_params(a.params);
  const SizdcGrid grid = parse_grid(a);
  ZeroCatalog catalog = load_cli_catalog(a.zeros);
  if (!a.synthetic.empty()) {
    const auto extra = load_synthetic(a.synthetic);
    catalog = inject_synthetic(catalog, extra);
  } else if (a.random_count > 0) {
    const auto extra = random_offline_zeros(a.seed, a.random_count, a.from, a.to, 0.6, 0.9);
    catalog = inject_synthetic(catalog, extra);
  }
  const SizdcReport r = check_sizdc(catalog, params, grid);
  emit(sizdc_csv(r), a.csv, out);
  if (!a.json.empty()) write_file(a.json, dump_json(to_json(r)));
  if (!r.all_satisfied) {
    const SizdcRow* v = r.first_violation();
    err << "SIZDC violated at T = " << format_g12(v->T) << ", sigma = " << format_g12(v->sigma)
        << ": N = " << v->lhs_count << " > " << format_g12(v->rhs_bound) << '\n';
    return exit_code::sizdc_violated;
  }
  return exit_code::ok;
}

// ------------------------------------------------------------------- scan

struct ScanArgs {
  bool littlewood = false;
  double t_min = 100.0;
  double t_max = 1.0e4;
  int n = 200;
  double eps0 = 0.5;
  std::string zeros;
  std::string csv;
};

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.littlewood) throw UsageError("scan needs a mode; only --littlewood is available");
  if (a.t_min > a.t_max) throw UsageError("--t-min must not exceed --t-max");
  const ZeroCatalog catalog = load_cli_catalog(a.zeros);
  const LittlewoodScan scan = littlewood_scan(a.t_min, a.t_max, a.n, a.eps0, catalog);
  emit(littlewood_csv(scan), a.csv, out);
  std::ostream& note = a.csv.empty() ? err : out;
  note << "max littlewood_ratio " << format_g12(scan.max_littlewood_ratio) << " (baseline "
       << format_g12(bl::kLittlewoodRatio) << "), max s_ratio " << format_g12(scan.max_s_ratio)
       << " (baseline " << format_g12(bl::kSRatio) << ")\n";
  const bool within = bl::within(scan.max_littlewood_ratio, bl::kLittlewoodRatio) &&
                      bl::within(scan.max_s_ratio, bl::kSRatio);
  if (!within) {
    err << "baseline exceeded\n";
    return exit_code::baseline;
  }
  return exit_code::ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"zetalab: zeta zeros, explicit-formula decompositions and zero-density checks"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 1 numerical or I/O failure, 2 certification failure or uncertified "
      "range, 3 baseline exceeded, 4 hypothesis failure or t on a zero ordinate, 5 SIZDC "
      "violated, 64 usage or malformed input.\n"
      "ZETALAB_ZERO_CACHE names the default zero catalog for --zeros.");

  const auto height = CLI::Range(14.0, 1.0e6);

  ZerosArgs za;
  auto* zeros = app.add_subcommand("zeros", "Scan, certify and save the zeros on [from, to]");
  zeros->add_option("--from", za.from, "lower ordinate, 14 <= from < to")->required()->check(height);
  zeros->add_option("--to", za.to, "upper ordinate, to <= 1e6")->required()->check(height);
  zeros->add_option("--out", za.out_path, "zero cache file to write")->required();
  zeros->add_option("--max-doublings", za.max_doublings,
                    "sampling refinements before giving up, 0..12")
      ->capture_default_str()
      ->check(CLI::Range(0, 12));

  VerifyArgs va;
  VerifyFlags vf{};
  auto* verify = app.add_subcommand("verify", "Check one identity or bound at a single point");
  verify
      ->add_option("--what", va.what,
                   "lemma1 (needs --t --x --sigma), theorem1 (--t --x --sigma), theorem2 "
                   "(--t --x --a --sigma), corollary (--t --eps0), bound:<near|zero1|zero_real|"
                   "near_critical|prop1|prop_uncon> (--t, optional --x --a --sigma)")
      ->required();
  vf.t = verify->add_option("--t", va.t, "height, 14 <= t <= 1e6, at least 1e-3 from any ordinate")
             ->check(height);
  vf.x = verify->add_option("--x", va.x,
                            "smoothing length, 3 <= x <= 1000 (theorems: x <= t^2 and "
                            "log x <= Psi(t/2))")
             ->check(CLI::Range(3.0, 1000.0));
  vf.sigma = verify->add_option("--sigma", va.sigma,
                                "real part; lemma1 0.4..3 away from 1, theorems and bounds 0.5..2")
                 ->check(CLI::Range(0.4, 3.0));
  vf.a = verify->add_option("--a", va.a, "shift, 1/Psi(t/2) <= a <= 1")
             ->check(CLI::Range(0.0, 1.0));
  vf.eps0 = verify->add_option("--eps0", va.eps0,
                               "corollary exponent > 0 with (log(t/2))^{eps0/4} in [3, 1000]")
                ->check(CLI::PositiveNumber);
  vf.cutoff = verify->add_option("--cutoff", va.cutoff,
                                 "lemma1 zero cutoff, |t| < cutoff <= certified end "
                                 "(default: certified end)")
                  ->check(height);
  vf.sizdc = verify->add_option("--sizdc", va.sizdc,
                                "parameters l=F;v=F;phi=F;psi=F, Phi(t/2) > 1")
                 ->capture_default_str();
  verify->add_option("--zeros", va.zeros, "zero cache file (default $ZETALAB_ZERO_CACHE)");
  verify->add_option("--json", va.json, "write the JSON report here instead of stdout");
  vf.eps0->excludes(vf.x)->excludes(vf.sigma)->excludes(vf.a);

  SizdcArgs sa;
  auto* sizdc = app.add_subcommand("sizdc", "Evaluate the short-interval density condition on a grid");
  sizdc->add_option("--params", sa.params, "l=F;v=F;phi=F;psi=F, F in const:c|zero|one|"
                                           "power_log:alpha|recip_loglog|scaled_loglog:c|recip:c")
      ->capture_default_str();
  sizdc->add_option("--zeros", sa.zeros, "zero cache file covering [from, to + l] (default $ZETALAB_ZERO_CACHE)");
  sizdc->add_option("--from", sa.from, "first T, 14 <= from <= to")->capture_default_str()->check(height);
  sizdc->add_option("--to", sa.to, "last T, to <= 1e6")->capture_default_str()->check(height);
  sizdc->add_option("--grid", sa.grid, "nT,nS: heights and sigma slices, both >= 1")
      ->capture_default_str();
  auto* syn = sizdc->add_option("--synthetic", sa.synthetic,
                                "file of synthetic zeros, lines 'gamma beta [multiplicity]', "
                                "0 < beta < 1");
  auto* rnd = sizdc->add_option("--random-offline", sa.random_count,
                                "inject N seeded zeros with beta in [0.6, 0.9] on [from, to]")
                  ->check(CLI::Range(1, 100000));
  sizdc->add_option("--seed", sa.seed, "seed for --random-offline")->capture_default_str();
  syn->excludes(rnd);
  sizdc->add_option("--spacing", sa.spacing, "sigma grid: phi_slices or uniform")
      ->capture_default_str()
      ->check(CLI::IsMember({"phi_slices", "uniform"}));
  sizdc->add_option("--csv", sa.csv, "write the CSV report here instead of stdout");
  sizdc->add_option("--json", sa.json, "also write the JSON report here");

  ScanArgs ca;
  auto* scan = app.add_subcommand("scan", "Scan ratios along the critical line");
  scan->add_flag("--littlewood", ca.littlewood,
                 "log|zeta(1/2+it)| and |S(t)| against log t / log log t")
      ->required();
  scan->add_option("--t-min", ca.t_min, "14 <= t-min <= t-max")->capture_default_str()->check(height);
  scan->add_option("--t-max", ca.t_max, "t-max <= 1e6")->capture_default_str()->check(height);
  scan->add_option("--n", ca.n, "number of points, >= 1 (1 only when t-min = t-max); points "
                                "within 1e-3 of an ordinate are moved 1.5e-3 off it")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000000));
  scan->add_option("--eps0", ca.eps0, "exponent recorded with the scan, > 0")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  scan->add_option("--zeros", ca.zeros, "zero cache file covering [t-min, t-max] (default $ZETALAB_ZERO_CACHE)");
  scan->add_option("--csv", ca.csv, "write the CSV here instead of stdout");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? exit_code::ok : exit_code::usage;
    }
    if (*zeros) return cmd_zeros(za, out);
    if (*verify) return cmd_verify(va, vf, out, err);
    if (*sizdc) return cmd_sizdc(sa, out, err);
    if (*scan) return cmd_scan(ca, out, err);
    return exit_code::usage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const OrderingError& e) {
    err << "ordering error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const CertificationError& e) {
    err << "certification error: " << e.what() << '\n';
    return exit_code::certification;
  } catch (const UncertifiedRangeError& e) {
    err << "uncertified range: " << e.what() << '\n';
    return exit_code::certification;
  } catch (const HypothesisError& e) {
    err << "hypothesis error: " << e.what() << '\n';
    return exit_code::hypothesis;
  } catch (const MonotonicityError& e) {
    err << "hypothesis error: " << e.what() << '\n';
    return exit_code::hypothesis;
  } catch (const NearZeroError& e) {
    err << "near zero: " << e.what() << '\n';
    return exit_code::hypothesis;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::failure;
  }
}

}  // namespace zetalab
