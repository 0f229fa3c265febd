#include "cli.hpp"

#include <cmath>
#include <numbers>

#include <CLI11.hpp>

#include "conerig/manifest.hpp"

namespace conerig::cli {

using nlohmann::json;

namespace {

struct Outcome {
  json report;
  int code = Success;
};

void emit(const Outcome& o, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << canonical_json(o.report) << "\n";
  else
    write_report(o.report, out_path);
}

Outcome validate(const std::string& path) {
  const Manifest m = load_manifest(path);
  const Presentation p = m.presentation();
  const Representation rho = m.representation();
  const double residual = relator_residual(rho, p);
  json r;
  r["manifest"] = path;
  r["group"] = to_string(m.group);
  r["curvature"] = m.curvature.value();
  r["generators"] = static_cast<int>(m.generators.size());
  r["relators"] = static_cast<int>(m.relators.size());
  r["meridians"] = static_cast<int>(m.meridians.size());
  r["relator_residual"] = residual;
  r["tol_rep"] = tol_rep;
  r["valid"] = residual <= tol_rep;
  r["warnings"] = m.warnings;
  return {r, residual <= tol_rep ? Success : FailingVerdict};
}

Outcome cohomology(const std::string& path) {
  const Manifest m = load_manifest(path);
  const Presentation p = m.presentation();
  const Representation rho = m.representation();
  json r;
  r["manifest"] = path;
  r["group"] = to_string(m.group);
  if (m.group == GroupKind::SU2xSU2) {
    json fs = json::array();
    for (int i = 0; i < 2; ++i) {
      json f = to_json(h1_basis(factor(rho, i), p));
      f["label"] = i == 0 ? "hol_1" : "hol_2";
      fs.push_back(f);
    }
    r["factors"] = fs;
  } else {
    r["report"] = to_json(h1_basis(rho, p));
  }
  int code = Success;
  if (m.boundary) {
    const AuditRecord a = dimension_audit(rho, p, *m.boundary);
    r["audit"] = to_json(a);
    if (!a.skipped && !a.pass) code = FailingVerdict;
  }
  return {r, code};
}

Outcome rigidity(const std::string& path) {
  const Manifest m = load_manifest(path);
  const RigidityReport rep = rigidity_test(m.representation(), m.presentation());
  json r = to_json(rep);
  r["manifest"] = path;
  return {r, rep.verdict == Verdict::LocallyRigid ? Success : FailingVerdict};
}

Outcome admissibility(const std::string& path) {
  const Manifest m = load_manifest(path);
  const AdmissibilityVerdict v = cone_admissibility_verdict(m.singular_graph.value_or(SingularGraph{}), m.curvature);
  json r = to_json(v);
  r["manifest"] = path;
  r["curvature"] = m.curvature.value();
  return {r, v.admissible ? Success : FailingVerdict};
}

double normalized_angle(double a) {
  const double two_pi = 2 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  return a < 0 ? a + two_pi : a;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted cohomology, meridian rigidity and cone-admissibility diagnostics", "conerig"};
  app.require_subcommand(1);
  std::string manifest, out_path;

  auto* validate_cmd = app.add_subcommand("validate", "Check the relator residual of a manifest");
  auto* cohomology_cmd = app.add_subcommand("cohomology", "Dimensions of Z0, Z1, B1, H1 (and the boundary audit)");
  auto* rigidity_cmd = app.add_subcommand("rigidity", "Meridian trace-differential rank test");
  auto* admissibility_cmd = app.add_subcommand("admissibility", "Spectral cone-admissibility of the singular graph");
  for (auto* c : {validate_cmd, cohomology_cmd, rigidity_cmd, admissibility_cmd}) {
    c->add_option("manifest", manifest, "Manifest JSON file")->required();
    c->add_option("--out", out_path, "Write the report here instead of stdout");
  }

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Closed-form spectra of the cross-section operator");
  spectrum_cmd->require_subcommand(1);
  double alpha = 0.0, window = 4.0;
  std::vector<double> hol_angles;
  int trivial_rank = -1;
  auto* circle_cmd = spectrum_cmd->add_subcommand("circle", "Dirac and B spectra on a circle of length alpha");
  circle_cmd->add_option("--alpha", alpha, "Cone angle")->required();
  circle_cmd->add_option("--hol-angle", hol_angles, "Holonomy angle a of a C(a) summand (repeatable)");
  circle_cmd->add_option("--trivial-rank", trivial_rank, "Number of trivial summands (default 1 without --hol-angle, else 0)");
  circle_cmd->add_option("--window", window, "Half-width W of the reported window");
  circle_cmd->add_option("--out", out_path, "Write the report here instead of stdout");
  std::vector<double> lambdas;
  int h0 = 0;
  auto* link_cmd = spectrum_cmd->add_subcommand("link", "B spectrum on a link from Laplace eigenvalues");
  link_cmd->add_option("--lambda", lambdas, "Positive Laplace eigenvalue (repeatable; default: the bound 1)");
  link_cmd->add_option("--h0", h0, "Dimension of the harmonic 0-forms");
  link_cmd->add_option("--window", window, "Half-width W of the reported window");
  link_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  int kappa = -1;
  double eps = 0.5, length = 1.0, form_alpha = 1.0;
  int halvings = 12;
  auto* forms_cmd = app.add_subcommand("forms", "L2 integrability of the four deformation forms on a tube");
  forms_cmd->add_option("--kappa", kappa, "Curvature -1, 0 or 1")->check(CLI::Range(-1, 1));
  forms_cmd->add_option("--alpha", form_alpha, "Cone angle");
  forms_cmd->add_option("--length", length, "Length of the singular edge");
  forms_cmd->add_option("--eps", eps, "Tube radius");
  forms_cmd->add_option("--halvings", halvings, "Number of radius halvings");
  forms_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  double b = 1.0;
  int grid = 256;
  auto* oracle_cmd = app.add_subcommand("oracle", "Decay bounds of the radial integral operators and the P_b lower bound");
  oracle_cmd->add_option("--b", b, "Exponent b");
  oracle_cmd->add_option("--grid", grid, "Radial grid size n (>= 64)");
  oracle_cmd->add_option("--kappa", kappa, "Curvature -1, 0 or 1")->check(CLI::Range(-1, 1));
  oracle_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return Success;
    }
    err << "usage error: " << e.what() << "\n";
    return InputError;
  }

  try {
    Outcome o;
    if (*validate_cmd) {
      o = validate(manifest);
    } else if (*cohomology_cmd) {
      o = cohomology(manifest);
    } else if (*rigidity_cmd) {
      o = rigidity(manifest);
    } else if (*admissibility_cmd) {
      o = admissibility(manifest);
    } else if (*circle_cmd) {
      ConePoint cp;
      cp.alpha = alpha;
      for (double a : hol_angles) cp.holonomy_angles.push_back(normalized_angle(a));
      cp.trivial_rank = trivial_rank >= 0 ? trivial_rank : (hol_angles.empty() ? 1 : 0);
      json dirac = json::array();
      if (hol_angles.empty()) dirac.push_back(to_json(circle_dirac_spectrum(alpha, 0.0, window)));
      for (double a : cp.holonomy_angles) dirac.push_back(to_json(circle_dirac_spectrum(alpha, a, window)));
      const SpectrumReport bs = circle_B_spectrum(cp, window);
      o.report = {{"alpha", alpha}, {"holonomy_angles", cp.holonomy_angles}, {"trivial_rank", cp.trivial_rank},
                  {"dirac", dirac}, {"B", to_json(bs)}};
      o.code = bs.gap_ok ? Success : FailingVerdict;
    } else if (*link_cmd) {
      std::vector<std::pair<double, int>> ls;
      for (double l : lambdas) ls.push_back({l, 1});
      const SpectrumReport s = ls.empty() && h0 == 0 ? link_B_spectrum_guaranteed(window)
                                                     : link_B_spectrum(ls.empty() ? decltype(ls){{1.0, 1}} : ls, h0, window);
      o.report = to_json(s);
      o.code = s.gap_ok ? Success : FailingVerdict;
    } else if (*forms_cmd) {
      json rows = json::array();
      bool expected = true;
      for (FormName f : {FormName::Ang, FormName::Shr, FormName::Tws, FormName::Len}) {
        const TubeReport t = l2_tube_verdict({f, Curvature(kappa), form_alpha, length}, eps, halving_deltas(eps, halvings));
        const L2Verdict want = (f == FormName::Ang || f == FormName::Shr) ? L2Verdict::Divergent : L2Verdict::Convergent;
        expected &= t.verdict == want;
        rows.push_back(to_json(t));
      }
      o.report = {{"forms", rows}, {"matches_expected", expected}};
      o.code = expected ? Success : FailingVerdict;
    } else if (*oracle_cmd) {
      const RadialGrid g(grid);
      const std::vector<std::pair<std::string, std::function<double(double)>>> inputs = {
          {"1", [](double) { return 1.0; }},
          {"rho", [](double r) { return r; }},
          {"cos(3 pi rho)", [](double r) { return std::cos(3 * std::numbers::pi * r); }}};
      json checks = json::array();
      bool ok = true;
      for (const auto& [name, fn] : inputs) {
        const SampledFunction s(g, fn);
        for (double r : {0.1, 0.25, 0.5, 0.9}) {
          if (b > -0.5) {
            const DecayCheck c = check_t_b0(s, b, r);
            ok &= c.slack() >= -radial_quadrature_budget;
            json j = to_json(c);
            j["operator"] = "T_b0";
            j["g"] = name;
            checks.push_back(j);
          }
          const DecayCheck c = check_t_b1(s, b, r);
          ok &= c.slack() >= -radial_quadrature_budget;
          json j = to_json(c);
          j["operator"] = "T_b1";
          j["g"] = name;
          checks.push_back(j);
        }
      }
      o.report = {{"b", b},
                  {"grid", grid},
                  {"kappa", kappa},
                  {"decay_checks", checks},
                  {"bounds_hold", ok},
                  {"pb_min_singular", pb_min_singular(b, Curvature(kappa), g)}};
      o.code = ok ? Success : FailingVerdict;
    }
    emit(o, out_path, out);
    return o.code;
  } catch (const IllConditioned& e) {
    err << "ill-conditioned: " << e.what() << "\n";
    return IllConditionedExit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  }
}

}  // namespace conerig::cli
