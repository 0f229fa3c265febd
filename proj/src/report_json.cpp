#include "conerig/manifest.hpp"

namespace conerig {

using nlohmann::json;

namespace {

json vector_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json complex_json(std::complex<double> z) { return {z.real(), z.imag()}; }

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

// Infinity marks "nothing dropped"; reported as null.
json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json to_json(const Manifest& m) { return manifest_to_json(m); }

json to_json(const CohomologyReport& r) {
  json j;
  j["group"] = to_string(r.kind);
  j["dim_Z0"] = r.dim_Z0;
  j["dim_Z1"] = r.dim_Z1;
  j["dim_B1"] = r.dim_B1;
  j["dim_H1"] = r.dim_H1;
  if (r.kind == GroupKind::SL2C)
    j["complex"] = {{"dim_Z0", optional_int(r.dim_Z0_complex)},
                    {"dim_Z1", optional_int(r.dim_Z1_complex)},
                    {"dim_B1", optional_int(r.dim_B1_complex)},
                    {"dim_H1", optional_int(r.dim_H1_complex)}};
  j["jacobian_singular_values"] = vector_json(r.singular_values);
  json basis = json::array();
  for (const auto& z : r.basis_H1) basis.push_back(vector_json(z.to_real()));
  j["basis_H1"] = basis;
  return j;
}

json to_json(const RigidityReport& r) {
  json j;
  j["group"] = to_string(r.kind);
  j["label"] = r.label;
  j["meridian_count"] = r.meridian_count;
  j["dim_H1"] = r.dim_H1;
  j["dim_H1_field"] = r.kind == GroupKind::SL2C ? "C" : "R";
  j["rank"] = r.rank;
  j["verdict"] = to_string(r.verdict);
  json flags = json::array();
  for (auto f : r.degenerate_flags) flags.push_back(to_string(f));
  j["degenerate_flags"] = flags;
  j["notes"] = r.notes;
  if (r.factors.empty()) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < r.trace_jacobian.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index k = 0; k < r.trace_jacobian.cols(); ++k) row.push_back(complex_json(r.trace_jacobian(i, k)));
      rows.push_back(row);
    }
    j["trace_jacobian"] = rows;
    j["singular_values"] = vector_json(r.rank_decision.singular_values);
    j["rank_gap_ratio"] = finite_or_null(r.rank_decision.gap_ratio);
  } else {
    json fs = json::array();
    for (const auto& f : r.factors) fs.push_back(to_json(f));
    j["factors"] = fs;
  }
  return j;
}

json to_json(const AuditRecord& a) {
  json j;
  j["skipped"] = a.skipped;
  if (a.skipped) {
    j["notice"] = a.notice;
    return j;
  }
  j["torus_components"] = a.torus_components;
  j["euler_characteristic"] = a.euler_characteristic;
  j["interior_dim_H1"] = a.interior_H1;
  j["interior_dim_Z1"] = a.interior_Z1;
  j["boundary_dim_H1"] = a.boundary_H1;
  json checks = json::array();
  for (const auto& c : a.checks) checks.push_back({{"identity", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
  j["checks"] = checks;
  j["pass"] = a.pass;
  return j;
}

json to_json(const SpectrumReport& s) {
  json j;
  json values = json::array();
  for (const auto& v : s.values) values.push_back({{"value", v.value}, {"multiplicity", v.multiplicity}});
  j["values"] = values;
  j["window"] = s.window;
  j["gap_ok"] = s.gap_ok;
  j["min_abs"] = finite_or_null(s.min_abs);
  j["boundary_values"] = s.boundary_values;
  j["source"] = s.source;
  if (s.witness)
    j["witness"] = {{"n", s.witness->n}, {"a", s.witness->a}, {"alpha", s.witness->alpha},
                    {"lambda", s.witness->lambda}, {"value", s.witness->value}};
  return j;
}

json to_json(const AdmissibilityVerdict& v) {
  json j;
  j["admissible"] = v.admissible;
  j["angles_at_most_pi"] = v.angles_at_most_pi;
  j["context"] = to_string(v.context);
  json sc = json::array();
  for (const auto& c : v.surface_checks)
    sc.push_back({{"location", c.location},
                  {"cone_point", c.cone_point},
                  {"alpha", c.point.alpha},
                  {"holonomy_angles", c.point.holonomy_angles},
                  {"trivial_rank", c.point.trivial_rank},
                  {"spectrum", to_json(c.report)}});
  j["surface_checks"] = sc;
  json lc = json::array();
  for (const auto& c : v.link_checks) {
    json e = {{"location", c.location}, {"applied", c.applied}};
    if (c.applied) e["spectrum"] = to_json(c.report);
    lc.push_back(e);
  }
  j["link_checks"] = lc;
  if (v.witness) {
    j["witness_location"] = *v.witness_location;
    j["witness"] = {{"n", v.witness->n}, {"a", v.witness->a}, {"alpha", v.witness->alpha},
                    {"lambda", v.witness->lambda}, {"value", v.witness->value}};
  }
  j["notes"] = v.notes;
  return j;
}

json to_json(const TubeReport& t) {
  json j;
  j["form"] = to_string(t.profile.name);
  j["curvature"] = t.profile.kappa.value();
  j["alpha"] = t.profile.alpha;
  j["length"] = t.profile.length;
  j["eps"] = t.eps;
  j["deltas"] = t.deltas;
  j["integrals"] = t.integrals;
  j["increments"] = t.increments;
  j["verdict"] = to_string(t.verdict);
  return j;
}

json to_json(const DecayCheck& d) {
  return {{"b", d.b}, {"r", d.r}, {"value", d.value}, {"bound", d.bound}, {"slack", d.slack()}};
}

}  // namespace conerig
