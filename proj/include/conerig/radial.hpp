#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "conerig/curvature.hpp"

namespace conerig {

/// Uniform nodes r_i = i / n, i = 0..n, on [0, 1].
class RadialGrid {
public:
  explicit RadialGrid(int n);
  int n() const { return n_; }
  double h() const { return 1.0 / n_; }
  double node(int i) const { return static_cast<double>(i) / n_; }

private:
  int n_;
};

/// Samples g(r_i) at every node; piecewise linear between nodes.
class SampledFunction {
public:
  SampledFunction(const RadialGrid& grid, Eigen::VectorXd values);
  SampledFunction(const RadialGrid& grid, const std::function<double(double)>& g);

  const RadialGrid& grid() const { return grid_; }
  const Eigen::VectorXd& values() const { return values_; }
  double operator()(double r) const;

private:
  RadialGrid grid_;
  Eigen::VectorXd values_;
};

/// Budget for quadrature error used when judging bound slack.
inline constexpr double radial_quadrature_budget = 1e-6;

/// int_lo^hi rho^b g(rho) d rho, exact for the piecewise linear g (0 <= lo <= hi <= 1).
double power_weighted_integral(const SampledFunction& g, double b, double lo, double hi);
/// int_lo^hi g^2, exact for the piecewise linear g.
double square_integral(const SampledFunction& g, double lo, double hi);

/// r^-b int_0^r rho^b g; b > -1/2, r in (0, 1].
double t_b0(const SampledFunction& g, double b, double r);
/// r^-b int_1^r rho^b g; r in (0, 1].
double t_b1(const SampledFunction& g, double b, double r);

double t_b0_bound(double b, double r, double norm_sq_0_r);
double t_b1_bound(double b, double r, double norm_sq_0_1);

struct DecayCheck {
  double b = 0.0, r = 0.0;
  double value = 0.0, bound = 0.0;
  double slack() const { return bound - std::abs(value); }
};
DecayCheck check_t_b0(const SampledFunction& g, double b, double r);
DecayCheck check_t_b1(const SampledFunction& g, double b, double r);

/// Smallest singular value of P_b = d/dr + b / sn_k(r) on grid functions vanishing at r = 0
/// and r = 1. Forward difference, potential averaged onto the cell midpoint.
double pb_min_singular(double b, Curvature k, const RadialGrid& grid);

enum class FormName { Ang, Shr, Tws, Len };
const char* to_string(FormName f);
FormName form_name_from_string(const std::string& s);

struct FormProfile {
  FormName name = FormName::Ang;
  Curvature kappa;
  double alpha = 1.0;
  double length = 1.0;
};

/// Pointwise squared norm of the deformation form at distance r from the singular axis.
double norm_profile(const FormProfile& fp, double r);

enum class L2Verdict { Divergent, Convergent, Inconclusive };
const char* to_string(L2Verdict v);

struct TubeReport {
  FormProfile profile;
  double eps = 0.0;
  std::vector<double> deltas;
  std::vector<double> integrals;   // I(delta_k)
  std::vector<double> increments;  // I(delta_k) - I(delta_{k-1}), first against I(eps) = 0
  L2Verdict verdict = L2Verdict::Inconclusive;
};

/// Halvings eps / 2^k, k = 1..count.
std::vector<double> halving_deltas(double eps, int count = 12);

/// I(delta) = alpha L int_delta^eps |omega|^2 sn cs dr by Simpson's rule in log r with
/// `panels` panels per interval.
TubeReport l2_tube_verdict(const FormProfile& fp, double eps, const std::vector<double>& deltas,
                           int panels = 32);

}  // namespace conerig
