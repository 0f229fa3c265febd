#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "conerig/error.hpp"
#include "conerig/radial.hpp"

namespace conerig {

RadialGrid::RadialGrid(int n) : n_(n) {
  if (n < 64) throw DomainError("radial grid needs at least 64 nodes");
}

SampledFunction::SampledFunction(const RadialGrid& grid, Eigen::VectorXd values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid.n() + 1) throw DomainError("sample count does not match the grid");
}

SampledFunction::SampledFunction(const RadialGrid& grid, const std::function<double(double)>& g)
    : grid_(grid), values_(grid.n() + 1) {
  for (int i = 0; i <= grid.n(); ++i) values_[i] = g(grid.node(i));
}

double SampledFunction::operator()(double r) const {
  const int n = grid_.n();
  const double x = std::clamp(r, 0.0, 1.0) * n;
  const int i = std::min(static_cast<int>(x), n - 1);
  const double t = x - i;
  return (1 - t) * values_[i] + t * values_[i + 1];
}

namespace {

// int_x0^x1 rho^c d rho
double power_moment(double c, double x0, double x1) {
  if (c == -1.0) return std::log(x1 / x0);
  return (std::pow(x1, c + 1) - std::pow(x0, c + 1)) / (c + 1);
}

template <typename CellFn>
double over_cells(const SampledFunction& g, double lo, double hi, CellFn cell) {
  if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) throw DomainError("integration limits outside [0, 1]");
  const RadialGrid& grid = g.grid();
  const int n = grid.n();
  double sum = 0.0;
  int i = std::min(static_cast<int>(lo * n), n - 1);
  for (; i < n && grid.node(i) < hi; ++i) {
    const double x0 = std::max(grid.node(i), lo), x1 = std::min(grid.node(i + 1), hi);
    if (x1 <= x0) continue;
    const double g0 = g(x0), g1 = g(x1);
    sum += cell(x0, x1, g0, g1);
  }
  return sum;
}

}  // namespace

double power_weighted_integral(const SampledFunction& g, double b, double lo, double hi) {
  return over_cells(g, lo, hi, [b](double x0, double x1, double g0, double g1) {
    const double s = (g1 - g0) / (x1 - x0);
    return (g0 - s * x0) * power_moment(b, x0, x1) + s * power_moment(b + 1, x0, x1);
  });
}

double square_integral(const SampledFunction& g, double lo, double hi) {
  return over_cells(g, lo, hi, [](double x0, double x1, double g0, double g1) {
    return (x1 - x0) * (g0 * g0 + g0 * g1 + g1 * g1) / 3.0;
  });
}

double t_b0(const SampledFunction& g, double b, double r) {
  if (!(b > -0.5)) throw DomainError("T_{b,0} needs b > -1/2");
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("r outside (0, 1]");
  return std::pow(r, -b) * power_weighted_integral(g, b, 0.0, r);
}

double t_b1(const SampledFunction& g, double b, double r) {
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("r outside (0, 1]");
  return -std::pow(r, -b) * power_weighted_integral(g, b, r, 1.0);
}

double t_b0_bound(double b, double r, double norm_sq_0_r) {
  return std::sqrt(r) / std::sqrt(2 * b + 1) * std::sqrt(norm_sq_0_r);
}

double t_b1_bound(double b, double r, double norm_sq_0_1) {
  const double norm = std::sqrt(norm_sq_0_1);
  if (b < -0.5) return std::sqrt(r) / std::sqrt(std::abs(2 * b + 1)) * norm;
  if (b == -0.5) return std::sqrt(r) * std::sqrt(std::abs(std::log(r))) * norm;
  return std::pow(r, -b) / std::sqrt(2 * b + 1) * norm;
}

DecayCheck check_t_b0(const SampledFunction& g, double b, double r) {
  return {b, r, t_b0(g, b, r), t_b0_bound(b, r, square_integral(g, 0.0, r))};
}

DecayCheck check_t_b1(const SampledFunction& g, double b, double r) {
  return {b, r, t_b1(g, b, r), t_b1_bound(b, r, square_integral(g, 0.0, 1.0))};
}

double pb_min_singular(double b, Curvature k, const RadialGrid& grid) {
  const int n = grid.n();
  const double h = grid.h();
  // Row i couples f_i and f_{i+1}: (f_{i+1} - f_i) / h + w_i (f_i + f_{i+1}), f_0 = f_n = 0.
  Eigen::VectorXd lower(n), upper(n);
  for (int i = 0; i < n; ++i) {
    const double w = b / (2.0 * sn(k, (i + 0.5) * h));
    lower[i] = -1.0 / h + w;
    upper[i] = 1.0 / h + w;
  }
  // A^T A for unknowns f_1..f_{n-1} is tridiagonal.
  const int m = n - 1;
  Eigen::VectorXd diag(m), off(std::max(m - 1, 0));
  for (int j = 0; j < m; ++j) diag[j] = upper[j] * upper[j] + lower[j + 1] * lower[j + 1];
  for (int j = 0; j + 1 < m; ++j) off[j] = lower[j + 1] * upper[j + 1];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(eig.eigenvalues()[0], 0.0));
}

const char* to_string(FormName f) {
  switch (f) {
    case FormName::Ang: return "ang";
    case FormName::Shr: return "shr";
    case FormName::Tws: return "tws";
    case FormName::Len: return "len";
  }
  return "?";
}

FormName form_name_from_string(const std::string& s) {
  if (s == "ang") return FormName::Ang;
  if (s == "shr") return FormName::Shr;
  if (s == "tws") return FormName::Tws;
  if (s == "len") return FormName::Len;
  throw DomainError("unknown deformation form '" + s + "'");
}

double norm_profile(const FormProfile& fp, double r) {
  const auto [s, c, ct] = sn_cs_ct(fp.kappa, r);
  (void)ct;
  const double k2 = double(fp.kappa.value() * fp.kappa.value());
  switch (fp.name) {
    case FormName::Ang: return (s * s + c * c) / (s * s);
    case FormName::Shr: return (c * c + k2 * s * s) / (s * s);
    case FormName::Tws: return (s * s + c * c) / (c * c);
    case FormName::Len: return (c * c + k2 * s * s) / (c * c);
  }
  return 0.0;
}

const char* to_string(L2Verdict v) {
  switch (v) {
    case L2Verdict::Divergent: return "Divergent";
    case L2Verdict::Convergent: return "Convergent";
    case L2Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::vector<double> halving_deltas(double eps, int count) {
  std::vector<double> d;
  for (int k = 1; k <= count; ++k) d.push_back(eps / std::ldexp(1.0, k));
  return d;
}

namespace {

double tube_density(const FormProfile& fp, double r) {
  return norm_profile(fp, r) * sn(fp.kappa, r) * cs(fp.kappa, r);
}

// int_lo^hi density dr with r = e^u, Simpson's rule in u.
double log_simpson(const FormProfile& fp, double lo, double hi, int panels) {
  const int m = 2 * panels;
  const double u0 = std::log(lo), u1 = std::log(hi), du = (u1 - u0) / m;
  double sum = 0.0;
  for (int i = 0; i <= m; ++i) {
    const double r = std::exp(u0 + i * du);
    const double w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += w * tube_density(fp, r) * r;
  }
  return sum * du / 3.0;
}

}  // namespace

TubeReport l2_tube_verdict(const FormProfile& fp, double eps, const std::vector<double>& deltas, int panels) {
  const double limit = fp.kappa.value() == 1 ? 0.5 * max_radius(fp.kappa) : max_radius(fp.kappa);
  if (!(eps > 0.0 && eps < limit)) throw DomainError("tube radius outside the model domain");
  if (deltas.size() < 4) throw DomainError("need at least four radii");
  double prev = eps;
  for (double d : deltas) {
    if (!(d > 0.0 && d < prev)) throw DomainError("radii must decrease strictly and stay below eps");
    prev = d;
  }
  TubeReport t;
  t.profile = fp;
  t.eps = eps;
  t.deltas = deltas;
  double acc = 0.0, upper = eps;
  for (double d : deltas) {
    const double inc = fp.alpha * fp.length * log_simpson(fp, d, upper, panels);
    acc += inc;
    t.integrals.push_back(acc);
    t.increments.push_back(inc);
    upper = d;
  }
  // Increments per unit of log r, so that radii other than halvings compare fairly.
  std::vector<double> rate;
  upper = eps;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    rate.push_back(t.increments[i] / std::log(upper / deltas[i]));
    upper = deltas[i];
  }
  const std::size_t k = rate.size();
  const double a = rate[k - 3], b = rate[k - 2], c = rate[k - 1];
  const bool positive = a > 0 && b > 0 && c > 0;
  const bool stable = positive && std::abs(b - a) <= 0.05 * a && std::abs(c - b) <= 0.05 * b;
  const bool geometric = positive && b / a <= 0.75 && c / b <= 0.75;
  if (stable)
    t.verdict = L2Verdict::Divergent;
  else if (geometric || (c == 0 && b == 0))
    t.verdict = L2Verdict::Convergent;
  return t;
}

}  // namespace conerig
