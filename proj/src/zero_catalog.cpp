#include "zetalab/zero_catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "zetalab/errors.hpp"

namespace zetalab {

std::string_view to_string(Provenance p) {
  return p == Provenance::computed ? "computed" : "synthetic";
}

std::string_view to_string(CountMethod m) {
  return m == CountMethod::turing ? "turing" : "argument_principle";
}

double to_stored_precision(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return std::strtod(buf, nullptr);
}

namespace {

void validate_zero(const NontrivialZero& z) {
  if (!std::isfinite(z.beta) || !(z.beta > 0.0 && z.beta < 1.0)) {
    throw DomainError("zero beta must lie in (0, 1)");
  }
  if (!std::isfinite(z.gamma) || !(z.gamma > 0.0)) {
    throw DomainError("zero ordinate gamma must be positive");
  }
  if (z.multiplicity < 1) throw DomainError("zero multiplicity must be >= 1");
  if (z.provenance == Provenance::computed &&
      (z.beta != 0.5 || z.multiplicity != 1)) {
    throw DomainError("computed zeros are simple and lie on beta = 1/2");
  }
}

}  // namespace

ZeroCatalog::ZeroCatalog(std::vector<NontrivialZero> zeros,
                         std::optional<CertifiedRange> range)
    : zeros_(std::move(zeros)), range_(range) {
  if (range_) {
    if (!(range_->lo <= range_->hi) || !std::isfinite(range_->lo) ||
        !std::isfinite(range_->hi)) {
      throw DomainError("certified range must satisfy lo <= hi");
    }
    range_->lo = to_stored_precision(range_->lo);
    range_->hi = to_stored_precision(range_->hi);
  }
  for (std::size_t i = 0; i < zeros_.size(); ++i) {
    auto& z = zeros_[i];
    validate_zero(z);
    z.gamma = to_stored_precision(z.gamma);
    z.beta = to_stored_precision(z.beta);
    if (i > 0 && !(zeros_[i - 1].gamma < z.gamma)) {
      std::ostringstream msg;
      msg.precision(15);
      msg << "zero ordinates must be strictly ascending (" << zeros_[i - 1].gamma
          << " then " << z.gamma << ")";
      throw OrderingError(msg.str());
    }
    has_synthetic_ |= z.provenance == Provenance::synthetic;
    has_computed_ |= z.provenance == Provenance::computed;
  }
}

bool ZeroCatalog::covers(double lo, double hi) const {
  return range_ && range_->lo <= lo && hi <= range_->hi;
}

void ZeroCatalog::require_covered(double lo, double hi, std::string_view what) const {
  if (mode() == CatalogMode::hypothesis || covers(lo, hi)) return;
  std::ostringstream msg;
  msg.precision(12);
  msg << what << " needs zeros on [" << lo << ", " << hi << "] but the catalog is ";
  if (range_) {
    msg << "certified only on [" << range_->lo << ", " << range_->hi << "]";
  } else {
    msg << "not certified";
  }
  throw UncertifiedRangeError(msg.str());
}

std::span<const NontrivialZero> ZeroCatalog::in_window(double lo, double hi) const {
  auto first = std::lower_bound(zeros_.begin(), zeros_.end(), lo,
                                [](const NontrivialZero& z, double v) { return z.gamma < v; });
  auto last = std::upper_bound(first, zeros_.end(), hi,
                               [](double v, const NontrivialZero& z) { return v < z.gamma; });
  return {first, last};
}

double ZeroCatalog::nearest_ordinate_distance(double t) const {
  double best = std::numeric_limits<double>::infinity();
  auto it = std::lower_bound(zeros_.begin(), zeros_.end(), t,
                             [](const NontrivialZero& z, double v) { return z.gamma < v; });
  if (it != zeros_.end()) best = std::min(best, std::abs(it->gamma - t));
  if (it != zeros_.begin()) best = std::min(best, std::abs(std::prev(it)->gamma - t));
  return best;
}

double ZeroCatalog::nearest_zero_distance(Complex s) const {
  // Conjugates at -gamma are never closer than rho itself once t >= 0.
  const Complex p(s.real(), std::abs(s.imag()));
  double best = std::numeric_limits<double>::infinity();
  auto mid = std::lower_bound(zeros_.begin(), zeros_.end(), p.imag(),
                              [](const NontrivialZero& z, double v) { return z.gamma < v; });
  for (auto it = mid; it != zeros_.end() && it->gamma - p.imag() < best; ++it) {
    best = std::min(best, std::abs(p - it->rho()));
  }
  for (auto it = mid; it != zeros_.begin();) {
    --it;
    if (p.imag() - it->gamma >= best) break;
    best = std::min(best, std::abs(p - it->rho()));
  }
  return best;
}

std::string ZeroCatalog::id() const {
  const std::string text = format_catalog(*this);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------- counting

long count_short_interval(const ZeroCatalog& catalog, const CountQuery& q) {
  if (!(q.h > 0.0) || !std::isfinite(q.T) || !(q.sigma >= 0.5)) {
    throw DomainError("count query needs h > 0 and sigma >= 1/2");
  }
  catalog.require_covered(q.T, q.T + q.h, "N(sigma, T, h)");
  long total = 0;
  for (const auto& z : catalog.in_window(q.T, q.T + q.h)) {
    if (z.beta >= q.sigma) total += z.multiplicity;
  }
  return total;
}

long n_of_t(const ZeroCatalog& catalog, double T) {
  const auto& range = catalog.certified_range();
  if (range) {
    // N(T) needs completeness from the bottom of the critical strip.
    if (range->lo > kTFloor + 0.1 || T > range->hi) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "N(" << T << ") needs a catalog certified on [14, " << T << "], have ["
          << range->lo << ", " << range->hi << "]";
      throw UncertifiedRangeError(msg.str());
    }
  } else if (catalog.mode() == CatalogMode::certified) {
    throw UncertifiedRangeError("N(T) on a catalog without a certified range");
  }
  long total = 0;
  for (const auto& z : catalog.in_window(0.0, T)) total += z.multiplicity;
  return total;
}

// --------------------------------------------------------------- synthetic

ZeroCatalog inject_synthetic(const ZeroCatalog& catalog,
                             std::span<const NontrivialZero> zeros) {
  if (zeros.empty()) return catalog;
  std::map<double, NontrivialZero> merged;
  for (const auto& z : catalog.zeros()) merged.emplace(z.gamma, z);
  for (NontrivialZero z : zeros) {
    z.provenance = Provenance::synthetic;
    validate_zero(z);
    z.gamma = to_stored_precision(z.gamma);
    z.beta = to_stored_precision(z.beta);
    auto [it, inserted] = merged.emplace(z.gamma, z);
    if (inserted) continue;
    if (it->second.beta != z.beta) {
      std::ostringstream msg;
      msg.precision(15);
      msg << "synthetic zero at gamma = " << z.gamma << " has beta " << z.beta
          << " but the catalog holds beta " << it->second.beta;
      throw OrderingError(msg.str());
    }
    it->second.multiplicity += z.multiplicity;
    it->second.provenance = Provenance::synthetic;
  }
  std::vector<NontrivialZero> out;
  out.reserve(merged.size());
  for (auto& [g, z] : merged) out.push_back(z);
  return ZeroCatalog(std::move(out), catalog.certified_range());
}

std::vector<NontrivialZero> random_offline_zeros(std::uint64_t seed, int count,
                                                 double t_lo, double t_hi,
                                                 double beta_lo, double beta_hi) {
  if (count < 0 || !(t_lo > 0.0 && t_lo < t_hi) ||
      !(beta_lo > 0.0 && beta_lo <= beta_hi && beta_hi < 1.0)) {
    throw DomainError("random ensemble needs 0 < t_lo < t_hi and 0 < beta_lo <= beta_hi < 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> gamma_dist(t_lo, t_hi);
  std::uniform_real_distribution<double> beta_dist(beta_lo, beta_hi);
  std::map<double, NontrivialZero> by_gamma;
  while (static_cast<int>(by_gamma.size()) < count) {
    NontrivialZero z;
    z.gamma = to_stored_precision(gamma_dist(rng));
    z.beta = to_stored_precision(beta_dist(rng));
    z.provenance = Provenance::synthetic;
    by_gamma.emplace(z.gamma, z);
  }
  std::vector<NontrivialZero> out;
  for (auto& [g, z] : by_gamma) out.push_back(z);
  return out;
}

// --------------------------------------------------------------------- io

namespace {

constexpr std::string_view kMagic = "zetalab-zeros v1";

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

[[noreturn]] void format_error(std::size_t line, const std::string& what) {
  throw FormatError("line " + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view tok, std::size_t line, std::string_view name) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    format_error(line, "bad " + std::string(name) + " '" + std::string(tok) + "'");
  }
  return v;
}

long parse_long(std::string_view tok, std::size_t line, std::string_view name) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    format_error(line, "bad " + std::string(name) + " '" + std::string(tok) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, std::string_view sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? next : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + sep.size();
  }
  return out;
}

}  // namespace

std::string format_catalog(const ZeroCatalog& catalog) {
  std::string out(kMagic);
  out += "; certified=";
  if (const auto& r = catalog.certified_range()) {
    out += fixed12(r->lo) + ":" + fixed12(r->hi);
  } else {
    out += "none";
  }
  out += "; count=" + std::to_string(catalog.size());
  if (catalog.mode() == CatalogMode::hypothesis) out += "; mode=hypothesis";
  out += '\n';
  for (const auto& z : catalog.zeros()) {
    out += fixed12(z.gamma);
    out += ' ';
    out += fixed12(z.beta);
    out += ' ';
    out += std::to_string(z.multiplicity);
    out += ' ';
    out += to_string(z.provenance);
    out += '\n';
  }
  return out;
}

ZeroCatalog parse_catalog(std::string_view text) {
  auto lines = split(text, "\n");
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) format_error(1, "empty file");

  const auto header = split(lines[0], "; ");
  if (header[0] != kMagic) {
    format_error(1, "expected header '" + std::string(kMagic) + "'");
  }
  std::optional<CertifiedRange> range;
  std::optional<long> count;
  std::optional<std::string_view> mode;
  bool saw_certified = false;
  for (std::size_t i = 1; i < header.size(); ++i) {
    const auto eq = header[i].find('=');
    if (eq == std::string_view::npos) {
      format_error(1, "malformed header field '" + std::string(header[i]) + "'");
    }
    const auto key = header[i].substr(0, eq);
    const auto value = header[i].substr(eq + 1);
    if (key == "certified") {
      saw_certified = true;
      if (value != "none") {
        const auto colon = value.find(':');
        if (colon == std::string_view::npos) {
          format_error(1, "certified range must be <T0>:<T1>");
        }
        range = CertifiedRange{parse_double(value.substr(0, colon), 1, "T0"),
                               parse_double(value.substr(colon + 1), 1, "T1")};
        if (!(range->lo <= range->hi)) format_error(1, "certified range has T0 > T1");
      }
    } else if (key == "count") {
      count = parse_long(value, 1, "count");
    } else if (key == "mode") {
      if (value != "hypothesis" && value != "certified") {
        format_error(1, "unknown mode '" + std::string(value) + "'");
      }
      mode = value;
    } else {
      format_error(1, "unknown header field '" + std::string(key) + "'");
    }
  }
  if (!saw_certified) format_error(1, "header lacks the certified field");
  if (!count) format_error(1, "header lacks the count field");

  std::vector<NontrivialZero> zeros;
  zeros.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    const auto tok = split(lines[i], " ");
    if (tok.size() != 4) format_error(line, "expected 'gamma beta multiplicity provenance'");
    NontrivialZero z;
    z.gamma = parse_double(tok[0], line, "gamma");
    z.beta = parse_double(tok[1], line, "beta");
    const long mult = parse_long(tok[2], line, "multiplicity");
    if (tok[3] == "computed") {
      z.provenance = Provenance::computed;
    } else if (tok[3] == "synthetic") {
      z.provenance = Provenance::synthetic;
    } else {
      format_error(line, "unknown provenance '" + std::string(tok[3]) + "'");
    }
    if (!(z.beta > 0.0 && z.beta < 1.0)) format_error(line, "beta outside (0, 1)");
    if (!(z.gamma > 0.0)) format_error(line, "gamma must be positive");
    if (mult < 1 || mult > std::numeric_limits<int>::max()) {
      format_error(line, "multiplicity must be a positive integer");
    }
    z.multiplicity = static_cast<int>(mult);
    if (z.provenance == Provenance::computed && (z.beta != 0.5 || mult != 1)) {
      format_error(line, "computed zeros must be simple with beta = 0.5");
    }
    if (!zeros.empty() && !(zeros.back().gamma < z.gamma)) {
      format_error(line, "gamma not strictly ascending");
    }
    zeros.push_back(z);
  }
  if (static_cast<long>(zeros.size()) != *count) {
    format_error(1, "count=" + std::to_string(*count) + " but file holds " +
                        std::to_string(zeros.size()) + " zeros");
  }
  ZeroCatalog catalog(std::move(zeros), range);
  if (mode && (*mode == "hypothesis") != (catalog.mode() == CatalogMode::hypothesis)) {
    format_error(1, "mode field disagrees with the zero provenances");
  }
  return catalog;
}

void save_catalog(const ZeroCatalog& catalog, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open '" + path.string() + "' for writing");
  out << format_catalog(catalog);
  if (!out) throw FormatError("write to '" + path.string() + "' failed");
}

ZeroCatalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open zero file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

}  // namespace zetalab
