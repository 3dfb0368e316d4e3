#include "zetalab/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace zetalab {

std::string format_g12(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

namespace {

void dump_into(const Json& j, int depth, std::string& out) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close_pad(2 * depth, ' ');
  switch (j.type()) {
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_g12(v) : "null";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad;
        dump_into(j[i], depth + 1, out);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += close_pad + "]";
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += pad + Json(it.key()).dump() + ": ";
        dump_into(it.value(), depth + 1, out);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += close_pad + "}";
      return;
    }
    default:
      out += j.dump();
  }
}

void collect_nonfinite(const Json& j, const std::string& path, Json& found) {
  if (j.is_number_float() && !std::isfinite(j.get<double>())) {
    found.push_back(path);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      collect_nonfinite(j[i], path + "/" + std::to_string(i), found);
    }
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      collect_nonfinite(it.value(), path + "/" + it.key(), found);
    }
  }
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json terms_json(const Terms& terms) {
  Json j = Json::object();
  for (const auto& [k, v] : terms) j[k] = v;
  return j;
}

}  // namespace

std::string dump_json(const Json& j) {
  std::string out;
  dump_into(j, 0, out);
  out += '\n';
  return out;
}

void mark_nonfinite(Json& j) {
  Json found = Json::array();
  collect_nonfinite(j, "", found);
  j["nonfinite_fields"] = found;
}

Json to_json(const BoundQuantities& q) {
  return Json{{"tau", q.tau},
              {"F_a", q.F_a},
              {"G_a", q.G_a},
              {"Y_a", q.Y_a},
              {"E_a", q.E_a},
              {"Y_terms", terms_json(q.y_terms)},
              {"E_terms", terms_json(q.e_terms)},
              {"phi_half_t", q.phi_half_t},
              {"dirichlet_abs", q.dirichlet_abs},
              {"f_upper_index", q.f_upper_index}};
}

Json to_json(const DecompositionReport& r) {
  Json j{{"kind", "decomposition"},
         {"t", r.t},
         {"x", r.x},
         {"sigma", r.sigma},
         {"a", r.a},
         {"delta_x", r.delta_x},
         {"sigma_1", r.sigma_1},
         {"case", std::string(to_string(r.kase))},
         {"near_zero_log_sum", r.near_zero_log_sum},
         {"near_zero_count", r.near_zero_count},
         {"shifted_zero_terms", r.shifted_zero_terms},
         {"shifted_zero_count", r.shifted_zero_count},
         {"dirichlet_term", complex_json(r.dirichlet_term)},
         {"lhs_log_zeta", complex_json(r.lhs_log_zeta)},
         {"residual", complex_json(r.residual)},
         {"residual_abs", std::abs(r.residual)},
         {"y_bound", r.y_bound},
         {"ratio", r.ratio},
         {"bounds", to_json(r.bounds)},
         {"sigma_A", r.sigma_A},
         {"L", r.L},
         {"neighborhood_size", r.neighborhood_size},
         {"sizdc", r.sizdc},
         {"catalog_id", r.catalog_id},
         {"flags", r.flags}};
  mark_nonfinite(j);
  return j;
}

Json to_json(const LittlewoodRow& r) {
  return Json{{"t", r.t},
              {"t_requested", r.t_requested},
              {"repelled", r.repelled},
              {"log_abs_zeta", r.log_abs_zeta},
              {"s_t", r.s_t},
              {"littlewood_ratio", r.littlewood_ratio},
              {"s_ratio", r.s_ratio}};
}

Json to_json(const CorollaryReport& r) {
  Json j{{"kind", "corollary"},
         {"t", r.t},
         {"eps0", r.eps0},
         {"x", r.x},
         {"shift", r.shift},
         {"near_radius", r.near_radius},
         {"near_zero_log_sum", r.near_zero_log_sum},
         {"near_zero_count", r.near_zero_count},
         {"lhs_log_zeta", complex_json(r.lhs_log_zeta)},
         {"residual", complex_json(r.residual)},
         {"residual_abs", std::abs(r.residual)},
         {"y_bound", r.y_bound},
         {"ratio", r.ratio},
         {"littlewood", to_json(r.row)},
         {"sizdc", r.sizdc},
         {"flags", r.flags}};
  mark_nonfinite(j);
  return j;
}

Json to_json(const BoundCheckReport& r) {
  Json counts = Json::object();
  for (const auto& [k, v] : r.branch_counts) counts[k] = v;
  Json j{{"kind", "bound_check"},
         {"lemma", std::string(to_string(r.lemma))},
         {"inputs", Json{{"t", r.inputs.t}, {"x", r.inputs.x}, {"a", r.inputs.a},
                         {"sigma", r.inputs.sigma}}},
         {"lhs_value", r.lhs_value},
         {"bound_value", r.bound_value},
         {"ratio", r.ratio},
         {"branch_sums", terms_json(r.branch_sums)},
         {"branch_counts", counts},
         {"flags", r.flags}};
  mark_nonfinite(j);
  return j;
}

Json to_json(const SizdcReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"T", row.T},
                        {"sigma", row.sigma},
                        {"sigma_floor", row.sigma_floor},
                        {"window", row.window},
                        {"lhs_count", row.lhs_count},
                        {"rhs_bound", row.rhs_bound},
                        {"ratio", row.ratio},
                        {"satisfied", row.satisfied}});
  }
  Json j{{"kind", "sizdc"},
         {"params", r.params.to_string()},
         {"T_a", r.grid.T_a},
         {"T_b", r.grid.T_b},
         {"n_T", r.grid.n_T},
         {"n_sigma", r.grid.n_sigma},
         {"spacing", r.grid.spacing == SigmaSpacing::phi_slices ? "phi_slices" : "uniform"},
         {"sigma_cap", 1.0},
         {"all_satisfied", r.all_satisfied},
         {"max_ratio", r.max_ratio},
         {"empty_sigma_domain", r.empty_sigma_domain},
         {"hypotheses_ok", r.hypotheses.all_ok()},
         {"hypothesis_notes", r.hypotheses.notes},
         {"catalog_id", r.catalog_id},
         {"hypothesis_catalog", r.hypothesis_catalog},
         {"rows", rows}};
  mark_nonfinite(j);
  return j;
}

Lemma1Check check_lemma1(Complex s, double x, const ZeroCatalog& catalog, double gamma_cutoff) {
  Lemma1Check c;
  c.s = s;
  c.x = x;
  c.gamma_cutoff = gamma_cutoff;
  c.rhs = lemma1_rhs(s, x, catalog, gamma_cutoff);
  c.lhs = dirichlet_sum(s, x, DirichletWeight::plain);
  c.residual = std::abs(c.lhs - c.rhs.rhs);
  c.within_bound = c.residual <= c.rhs.tail_bound + c.rhs.eval_error + 1e-6;
  c.catalog_id = catalog.id();
  return c;
}

Json to_json(const Lemma1Check& c) {
  Json j{{"kind", "lemma1"},
         {"s", complex_json(c.s)},
         {"x", c.x},
         {"gamma_cutoff", c.gamma_cutoff},
         {"lhs", complex_json(c.lhs)},
         {"rhs", complex_json(c.rhs.rhs)},
         {"residual", c.residual},
         {"tail_bound", c.rhs.tail_bound},
         {"eval_error", c.rhs.eval_error},
         {"within_bound", c.within_bound},
         {"terms", Json{{"log_deriv", complex_json(c.rhs.log_deriv_term)},
                        {"pole", complex_json(c.rhs.pole_term)},
                        {"zero_sum", complex_json(c.rhs.zero_sum)},
                        {"trivial_sum", complex_json(c.rhs.trivial_sum)}}},
         {"zeros_used", c.rhs.zeros_used},
         {"catalog_id", c.catalog_id}};
  mark_nonfinite(j);
  return j;
}

std::string sizdc_csv(const SizdcReport& r) {
  std::ostringstream out;
  out << "T,sigma,sigma_floor,window,lhs_count,rhs_bound,ratio,satisfied\n";
  for (const auto& row : r.rows) {
    out << format_g12(row.T) << ',' << format_g12(row.sigma) << ','
        << format_g12(row.sigma_floor) << ',' << format_g12(row.window) << ',' << row.lhs_count
        << ',' << format_g12(row.rhs_bound) << ',' << format_g12(row.ratio) << ','
        << (row.satisfied ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string littlewood_csv(const LittlewoodScan& scan) {
  std::ostringstream out;
  out << "t,log_abs_zeta,s_t,littlewood_ratio,s_ratio,t_requested,repelled\n";
  for (const auto& r : scan.rows) {
    out << format_g12(r.t) << ',' << format_g12(r.log_abs_zeta) << ',' << format_g12(r.s_t)
        << ',' << format_g12(r.littlewood_ratio) << ',' << format_g12(r.s_ratio) << ','
        << format_g12(r.t_requested) << ',' << (r.repelled ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace zetalab
