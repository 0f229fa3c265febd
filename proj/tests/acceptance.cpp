// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "conerig/manifest.hpp"
#include "conerig/models.hpp"
#include "conerig/radial.hpp"
#include "conerig/spectral.hpp"
#include "support.hpp"

using namespace conerig;
using namespace conerig::testing;

namespace {

const std::string fixtures = std::string(CONERIG_SOURCE_DIR) + "/fixtures/";

/// Collects failed conditions of one criterion.
class Criterion {
public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  bool passed() const { return failures_.empty(); }
  std::string detail() const {
    std::string s = notes_;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + std::string("failed: ") + f;
    return s;
  }

private:
  std::vector<std::string> failures_;
  std::string notes_;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

Model load_model(const std::string& name) {
  const Manifest m = load_manifest(fixtures + name);
  return {m.presentation(), m.representation()};
}

template <typename T>
bool contains(const std::vector<T>& v, const T& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

/// Central difference of the trace of rho_t(w), rho_t(g) = exp(t z(g)) rho(g), per factor.
std::pair<C, C> fd_trace(const Representation& rho, const Cocycle& z, const Word& w, double t = 1e-5) {
  auto moved = [&](double s) {
    std::vector<GroupElement> imgs;
    for (int i = 0; i < rho.generator_count(); ++i) imgs.push_back(exp_times(z.values[i], s, rho.image(i)));
    return evaluate(Representation(rho.kind(), imgs), w);
  };
  const GroupElement p = moved(t), m = moved(-t);
  return {(first_matrix(p).trace() - first_matrix(m).trace()) / (2 * t),
          (second_matrix(p).trace() - second_matrix(m).trace()) / (2 * t)};
}

void criterion_1(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const Manifest man = load_manifest(fixtures + "torus.json");
  const Model m{man.presentation(), man.representation()};
  const CohomologyReport r = h1_basis(m.representation, m.presentation);
  const RigidityReport rig = rigidity_test(m.representation, m.presentation);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const Matrix2c<double> l = first_matrix(m.representation.image(0)), mu = first_matrix(m.representation.image(1));
  c.require(std::abs(l(0, 0) - std::exp(C(0.3, 0.7))) < 1e-15 && std::abs(l(1, 1) - std::exp(C(-0.3, -0.7))) < 1e-15,
            "fixture longitude is diag(e^{0.3+0.7i}, inverse)");
  c.require(std::abs(mu(0, 0) - std::polar(1.0, pi / 4)) < 1e-15 && std::abs(mu(0, 1)) == 0.0,
            "fixture meridian is diag(e^{i pi/4}, inverse)");
  c.require(std::abs(man.meridians.at(0).cone_angle - pi / 2) < 1e-15, "cone angle pi/2");
  c.require(*r.dim_Z0_complex == 1 && *r.dim_Z1_complex == 4 && *r.dim_B1_complex == 2 && *r.dim_H1_complex == 2,
            "complex dims (1,4,2,2)");
  c.require(rig.rank == 1, "trace rank 1");
  c.require(seconds < 1.0, "runtime < 1 s");
  c.note("dims_C (" + std::to_string(*r.dim_Z0_complex) + "," + std::to_string(*r.dim_Z1_complex) + "," +
         std::to_string(*r.dim_B1_complex) + "," + std::to_string(*r.dim_H1_complex) + "), rank " +
         std::to_string(rig.rank) + ", " + fmt(seconds) + " s");
}

void criterion_2(Criterion& c) {
  const Model m = load_model("torus.json");
  const double alpha = pi / 2;
  const C xi = first_matrix(m.representation.image(1))(0, 0);
  // Longitude acts as (theta - twist, z + length); its complex length is length - i twist.
  const C L = complex_length_sl2c(std::get<Sl2cElement<double>>(m.representation.image(0)));
  const double length = L.real(), twist = -L.imag();
  const Word mu = m.presentation.meridians()[0].word;
  const Eigen::MatrixXd jac = relator_jacobian(m.representation, m.presentation);
  double worst_fd = 0.0, worst_closed = 0.0;
  for (TorusForm f : {TorusForm::Ang, TorusForm::Shr, TorusForm::Tws, TorusForm::Len}) {
    const Cocycle z = torus_period_cocycle(f, GroupKind::SL2C, 2, 1, 0, alpha, twist, length);
    c.require((jac * z.to_real()).norm() < 1e-12, std::string(to_string(f)) + " is a cocycle");
    const C dt = trace_differential(m.representation, z, mu).first;
    C expected = 0.0;
    double tol = 1e-10;
    if (f == TorusForm::Ang) expected = C(0, alpha / 2) * (xi - 1.0 / xi), tol = 1e-9;
    if (f == TorusForm::Shr) expected = (alpha / 2) * (xi - 1.0 / xi), tol = 1e-9;
    c.require(std::abs(dt - expected) < tol, std::string("closed form for ") + to_string(f));
    worst_closed = std::max(worst_closed, std::abs(dt - expected));
    const double fd = std::abs(fd_trace(m.representation, z, mu).first - dt);
    worst_fd = std::max(worst_fd, fd);
    c.require(fd < 1e-6, std::string("finite difference for ") + to_string(f));
  }
  c.note("max |dt - closed form| " + fmt(worst_closed) + ", max |dt - FD| " + fmt(worst_fd) + ", length " +
         fmt(length) + ", twist " + fmt(twist));
}

void criterion_3(Criterion& c) {
  const Model m = load_model("su2pair_torus.json");
  const double alpha = pi / 2;
  const double im_xi = std::sin(alpha / 2);
  const Word mu = m.presentation.meridians()[0].word;
  double worst = 0.0;
  for (TorusForm f : {TorusForm::Ang, TorusForm::Shr}) {
    const Cocycle z = torus_period_cocycle(f, GroupKind::SU2xSU2, 2, 1, 0, alpha, 0.5, 0.25);
    const TraceValue t = trace_differential(m.representation, z, mu);
    const double e1 = -alpha * im_xi, e2 = f == TorusForm::Ang ? -alpha * im_xi : alpha * im_xi;
    const double err = std::max(std::abs(t.first - e1), std::abs(t.second - e2));
    worst = std::max(worst, err);
    c.require(err < 1e-9, std::string("closed form for ") + to_string(f));
    const auto fd = fd_trace(m.representation, z, mu);
    c.require(std::abs(fd.first - t.first) + std::abs(fd.second - t.second) < 1e-6, std::string("FD for ") + to_string(f));
  }
  int dims[2];
  for (int i = 0; i < 2; ++i) dims[i] = h1_basis(factor(m.representation, i), m.presentation).dim_H1;
  c.require(dims[0] == 2 && dims[1] == 2, "per-factor dim_R H1 = 2");
  c.note("max error " + fmt(worst) + ", dim_R H1 per factor (" + std::to_string(dims[0]) + "," + std::to_string(dims[1]) + ")");
}

void criterion_4(Criterion& c) {
  const Model m = load_model("pants.json");
  const CohomologyReport r = h1_basis(m.representation, m.presentation);
  const RigidityReport rig = rigidity_test(m.representation, m.presentation);
  c.require(*r.dim_Z1_complex == 6, "dim_C Z1 = 6");
  c.require(rig.verdict == Verdict::LocallyRigid && rig.rank == 3, "LocallyRigid, rank 3");
  std::mt19937 gen(4);
  for (int i = 0; i < 5; ++i) {
    const Representation rc = conjugate(m.representation, random_sl2c(gen));
    const CohomologyReport rc_r = h1_basis(rc, m.presentation);
    const RigidityReport rc_rig = rigidity_test(rc, m.presentation);
    c.require(rc_r.dim_Z0 == r.dim_Z0 && rc_r.dim_Z1 == r.dim_Z1 && rc_r.dim_B1 == r.dim_B1 && rc_r.dim_H1 == r.dim_H1 &&
                  rc_rig.rank == rig.rank && rc_rig.verdict == rig.verdict,
              "conjugated fixture integers");
  }
  c.note("dim_C Z1 " + std::to_string(*r.dim_Z1_complex) + ", rank " + std::to_string(rig.rank) + ", " + to_string(rig.verdict) +
         ", 5 conjugates identical");
}

void criterion_5(Criterion& c) {
  const Model m = genus2_su2(7);
  // Residual of [A1, B1][A2, B2] from the matrices directly.
  Matrix2c<double> g[4];
  for (int i = 0; i < 4; ++i) g[i] = first_matrix(m.representation.image(i));
  const Matrix2c<double> prod = g[0] * g[1] * g[0].adjoint() * g[1].adjoint() * g[2] * g[3] * g[2].adjoint() * g[3].adjoint();
  const double residual = (prod - Matrix2c<double>::Identity()).norm();
  c.require(residual < 1e-10, "residual < 1e-10");
  c.require(!is_abelian_image(m.representation), "irreducible (non-abelian) image");
  const CohomologyReport r = h1_basis(m.representation, m.presentation);
  c.require(r.dim_Z0 == 0, "dim Z0 = 0");
  c.require(r.dim_Z1 == 9 && r.dim_H1 == 6 && r.dim_B1 == 3, "dims_R (Z1, H1, B1) = (9, 6, 3)");
  c.note("residual " + fmt(residual) + ", dims_R Z1 " + std::to_string(r.dim_Z1) + " H1 " + std::to_string(r.dim_H1) +
         " B1 " + std::to_string(r.dim_B1));
}

void criterion_6(Criterion& c) {
  const double alpha = 2 * pi / 3;
  const C u0 = riley_parabolic_root(7, 3, {-0.2, 1.3});
  const RileyResult k = riley_cone_representation(7, 3, alpha, u0);
  const Model& m = k.model;
  c.require(k.residual < 1e-12, "Riley residual");
  const C tr = std::get<Sl2cElement<double>>(m.representation.image(0)).trace();
  c.require(std::abs(tr - 2 * std::cos(alpha / 2)) < 1e-14, "elliptic meridian trace 2 cos(alpha/2)");
  const CohomologyReport r = h1_basis(m.representation, m.presentation);
  const int tau = 1, chi = 0;  // one torus cusp
  c.require(*r.dim_H1_complex == 1 && 2 * *r.dim_H1_complex == 2 * tau - 3 * chi, "dim_C H1 = 1 = tau - 3/2 chi");
  const RigidityReport rig = rigidity_test(m.representation, m.presentation);
  c.require(rig.verdict == Verdict::LocallyRigid && rig.meridian_count == 1, "LocallyRigid with N = 1");
  const AuditRecord a = dimension_audit(m.representation, m.presentation, {{1, {"a", two_bridge_longitude(7, 3)}}});
  bool half = false;
  for (const auto& chk : a.checks)
    if (chk.name.find("1/2") != std::string::npos) half = chk.pass && chk.lhs == 2.0 && chk.rhs == 2.0;
  c.require(half, "half-dimension identity 1/2 * 4 = 2 over R (1/2 * 2 = 1 over C)");
  c.note("knot 5_2, u = " + fmt(k.u.real()) + (k.u.imag() < 0 ? "" : "+") + fmt(k.u.imag()) + "i, residual " +
         fmt(k.residual) + ", dim_C H1 " + std::to_string(*r.dim_H1_complex) + ", rank " + std::to_string(rig.rank));
}

void criterion_7(Criterion& c) {
  int disagreements = 0;
  for (int i = 1; i <= 200; ++i) {
    for (int j = 0; j < 200; ++j) {
      ConePoint cp;
      cp.alpha = 2 * pi * i / 200;
      cp.holonomy_angles = {2 * pi * j / 200};
      // alpha <= a <= 2 pi - alpha on the grid indices.
      const bool expected = j == 0 || (i <= j && j <= 200 - i);
      disagreements += circle_B_spectrum(cp, 4.0).gap_ok != expected;
    }
  }
  c.require(disagreements == 0, "zero disagreements");
  c.note(std::to_string(disagreements) + " disagreements over 40000 points");
}

void criterion_8(Criterion& c) {
  const SpectrumReport one = link_B_spectrum({{1.0, 1}}, 0, 4.0);
  const SpectrumReport half = link_B_spectrum({{0.5, 1}}, 0, 4.0);
  c.require(one.min_abs > 0.6180 && one.min_abs < 0.6181, "min |spec B| in (0.6180, 0.6181)");
  c.require(std::abs(one.min_abs - (std::sqrt(1.25) - 0.5)) < 1e-15, "min |spec B| = sqrt(1.25) - 1/2");
  c.require(one.gap_ok, "gap_ok for lambda_1 = 1");
  c.require(!half.gap_ok, "no gap for lambda_1 = 0.5");
  c.note("min_abs " + fmt(one.min_abs) + ", lambda 0.5 min_abs " + fmt(half.min_abs));
}

void criterion_9(Criterion& c) {
  const Vector3<double> z = Vector3<double>::Zero();
  auto rot = [&](int k) { return IsomAlgebraElement<double>(Curvature(k), Vector3<double>::UnitZ(), z); };
  auto tr = [&](int k) { return IsomAlgebraElement<double>(Curvature(k), z, Vector3<double>::UnitX()); };
  c.require(std::abs(killing_form(rot(-1), rot(-1)) + 4) < 1e-12, "kappa -1 rotation -4");
  c.require(std::abs(killing_form(tr(-1), tr(-1)) - 4) < 1e-12, "kappa -1 translation +4");
  c.require(std::abs(killing_form(rot(1), rot(1)) + 4) < 1e-12 && std::abs(killing_form(tr(1), tr(1)) + 4) < 1e-12,
            "kappa +1 both -4");
  std::mt19937 gen(9);
  double p0 = 0.0, jacobi = 0.0;
  for (int i = 0; i < 100; ++i) {
    const IsomAlgebraElement<double> u(Curvature(0), z, gaussian3(gen)), v(Curvature(0), z, gaussian3(gen));
    p0 = std::max(p0, std::abs(killing_form(u, v)));
  }
  c.require(p0 < 1e-12, "kappa 0 on p is 0");
  for (int k : {-1, 0, 1}) {
    for (int i = 0; i < 1000; ++i) {
      const auto x = random_isom(Curvature(k), gen), y = random_isom(Curvature(k), gen), w = random_isom(Curvature(k), gen);
      jacobi = std::max(jacobi, (bracket(x, bracket(y, w)) + bracket(y, bracket(w, x)) + bracket(w, bracket(x, y))).coords().norm());
    }
  }
  c.require(jacobi < 1e-12, "Jacobi residual < 1e-12");
  c.note("B(rot,rot)_{-1} " + fmt(killing_form(rot(-1), rot(-1))) + ", B(tr,tr)_{-1} " + fmt(killing_form(tr(-1), tr(-1))) +
         ", max Jacobi residual " + fmt(jacobi));
}

void criterion_10(Criterion& c) {
  std::mt19937 gen(10);
  std::normal_distribution<double> n;
  std::uniform_real_distribution<double> b0(-0.49, 6.0), b1(-3.0, 6.0), rr(1e-3, 1.0);
  std::bernoulli_distribution critical(0.1);
  const RadialGrid grid(1024);
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 200; ++i) {
    std::vector<double> cc, ss;
    for (int k = 0; k <= 12; ++k) {
      cc.push_back(n(gen) / (1 + k));
      ss.push_back(n(gen) / (1 + k));
    }
    const SampledFunction g(grid, [&](double r) {
      double v = 0.0;
      for (int k = 0; k <= 12; ++k) v += cc[k] * std::cos(k * pi * r) + ss[k] * std::sin(k * pi * r);
      return v;
    });
    for (int j = 0; j < 20; ++j) {
      const double r = rr(gen);
      worst = std::min({worst, check_t_b0(g, b0(gen), r).slack(), check_t_b1(g, critical(gen) ? -0.5 : b1(gen), r).slack()});
    }
  }
  c.require(worst >= -radial_quadrature_budget, "slack >= -1e-6 on 200 inputs x 20 (b, r)");
  const SampledFunction one(grid, [](double) { return 1.0; });
  double eq = 0.0;
  for (double r : {0.01, 0.1, 0.5, 1.0}) {
    const DecayCheck d = check_t_b0(one, 0.0, r);
    eq = std::max({eq, std::abs(std::abs(d.value) - d.bound), std::abs(d.value - r)});
  }
  c.require(eq < 1e-10, "equality case g = 1, b = 0 within 1e-10");
  c.note("min slack " + fmt(worst) + ", equality defect " + fmt(eq));
}

void criterion_11(Criterion& c) {
  std::string values;
  for (int n : {256, 512}) {
    const RadialGrid grid(n);
    for (int k : {-1, 0, 1}) {
      double prev = 0.0;
      for (double b : {1.0, 2.0, 4.0, 8.0}) {
        const double s = pb_min_singular(b, Curvature(k), grid);
        c.require(s > prev, "strictly increasing at n = " + std::to_string(n) + ", kappa = " + std::to_string(k));
        prev = s;
        if (k == 0) values += (values.empty() ? "" : " ") + fmt(s);
      }
      if (k == 0) values += n == 256 ? " |" : "";
    }
  }
  c.note("kappa 0, b = 1,2,4,8 at n = 256 | 512: " + values);
}

void criterion_12(Criterion& c) {
  for (int k : {-1, 0, 1}) {
    for (FormName f : {FormName::Ang, FormName::Shr, FormName::Tws, FormName::Len}) {
      const L2Verdict want = (f == FormName::Ang || f == FormName::Shr) ? L2Verdict::Divergent : L2Verdict::Convergent;
      const TubeReport t = l2_tube_verdict({f, Curvature(k), 1.0, 1.0}, 0.5, halving_deltas(0.5));
      c.require(t.verdict == want, std::string(to_string(f)) + " at kappa " + std::to_string(k));
    }
  }
  const double alpha = 1.0, length = 1.0;
  const TubeReport ang = l2_tube_verdict({FormName::Ang, Curvature(-1), alpha, length}, 0.5, halving_deltas(0.5));
  const double target = alpha * length * std::log(2.0);
  const double inc = ang.increments.back();
  c.require(std::abs(inc - target) < 0.1 * target, "ang increment within 10% of alpha L ln 2");
  c.note("ang increment " + fmt(inc) + " vs " + fmt(target));
}

void criterion_13(Criterion& c) {
  const Model m = load_model("su2pair_torus.json");
  const RigidityReport r = rigidity_test(m.representation, m.presentation);
  c.require(is_abelian_image(m.representation), "image is abelian");
  c.require(contains(r.degenerate_flags, DegenerateFlag::AbelianImage), "AbelianImage flag");
  c.require(r.verdict != Verdict::LocallyRigid, "not LocallyRigid");
  c.note(std::string("verdict ") + to_string(r.verdict));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"torus fixture dimensions and trace rank", criterion_1},
      {"torus trace differentials (closed form and FD)", criterion_2},
      {"spherical torus trace differentials", criterion_3},
      {"pair of pants rigidity", criterion_4},
      {"genus-2 surface group dimensions", criterion_5},
      {"one-cusped two-bridge cone manifold", criterion_6},
      {"circle gap criterion on a 200 x 200 grid", criterion_7},
      {"link spectra", criterion_8},
      {"Killing form and Jacobi identity", criterion_9},
      {"decay estimates", criterion_10},
      {"radial lower bound monotonicity", criterion_11},
      {"tube integrability", criterion_12},
      {"abelian SU(2) x SU(2) degeneracy", criterion_13},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    failed += !c.passed();
    std::printf("%s %2zu  %s: %s\n", c.passed() ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), c.detail().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
