#pragma once

// JSON and CSV renderings of the verification reports.  Floats are printed
// with 12 significant digits; non-finite values become JSON null and their
// paths are listed under "nonfinite_fields".

#include <json.hpp>
#include <string>

#include "zetalab/decomposition.hpp"
#include "zetalab/explicit_formula.hpp"
#include "zetalab/sizdc.hpp"

namespace zetalab {

using Json = nlohmann::ordered_json;

std::string format_g12(double v);

/// Deterministic text with two-space indentation and a trailing newline.
std::string dump_json(const Json& j);

/// Adds "nonfinite_fields" listing JSON pointers of every non-finite number.
void mark_nonfinite(Json& j);

Json to_json(const BoundQuantities& q);
Json to_json(const DecompositionReport& r);
Json to_json(const CorollaryReport& r);
Json to_json(const BoundCheckReport& r);
Json to_json(const SizdcReport& r);
Json to_json(const LittlewoodRow& r);

struct Lemma1Check {
  Complex s;
  double x = 0.0;
  double gamma_cutoff = 0.0;
  Complex lhs;  ///< sum_{n <= x^2} Lambda_x(n) n^{-s}
  Lemma1Result rhs;
  double residual = 0.0;  ///< |lhs - rhs|
  bool within_bound = false;  ///< residual <= tail_bound + eval_error + 1e-6
  std::string catalog_id;
};

Lemma1Check check_lemma1(Complex s, double x, const ZeroCatalog& catalog, double gamma_cutoff);
Json to_json(const Lemma1Check& c);

/// Header: T,sigma,sigma_floor,window,lhs_count,rhs_bound,ratio,satisfied
std::string sizdc_csv(const SizdcReport& r);

/// Header: t,log_abs_zeta,s_t,littlewood_ratio,s_ratio,t_requested,repelled
std::string littlewood_csv(const LittlewoodScan& scan);

}  // namespace zetalab
