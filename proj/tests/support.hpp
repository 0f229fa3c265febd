#pragma once

#include <complex>
#include <numbers>
#include <random>

#include "conerig/cohomology.hpp"
#include "conerig/isom_algebra.hpp"
#include "conerig/matrix_algebra.hpp"

namespace conerig::testing {

constexpr double pi = std::numbers::pi;
using C = std::complex<double>;

inline Eigen::Vector3d gaussian3(std::mt19937& gen) {
  std::normal_distribution<double> n;
  return {n(gen), n(gen), n(gen)};
}

inline Su2Element<double> random_su2(std::mt19937& gen) {
  std::normal_distribution<double> n;
  Eigen::Quaterniond q(n(gen), n(gen), n(gen), n(gen));
  q.normalize();
  return Su2Element<double>::unchecked(q);
}

/// SL2C element with entries of moderate size: exp of a random sl2 element times an SU(2).
inline Sl2cElement<double> random_sl2c(std::mt19937& gen, double spread = 0.7) {
  std::normal_distribution<double> n(0.0, spread);
  Matrix2c<double> x;
  const C a(n(gen), n(gen)), b(n(gen), n(gen)), c(n(gen), n(gen));
  x << a, b, c, -a;
  const GroupElement g = exp_times(AlgebraVector{GroupKind::SL2C, x}, 1.0, identity_element(GroupKind::SL2C));
  return std::get<Sl2cElement<double>>(g) * Sl2cElement<double>::unchecked(random_su2(gen).matrix());
}

inline GroupElement random_element(GroupKind kind, std::mt19937& gen) {
  switch (kind) {
    case GroupKind::SL2C: return random_sl2c(gen);
    case GroupKind::SU2: return random_su2(gen);
    default: return Su2PairElement<double>{random_su2(gen), random_su2(gen)};
  }
}

inline AlgebraVector random_algebra(GroupKind kind, std::mt19937& gen) {
  std::normal_distribution<double> n;
  Eigen::VectorXd c(algebra_dim(kind));
  for (auto& v : c) v = n(gen);
  return algebra_from_real(kind, c);
}

inline IsomAlgebraElement<double> random_isom(Curvature k, std::mt19937& gen) {
  return IsomAlgebraElement<double>(k, gaussian3(gen), gaussian3(gen));
}

inline Representation conjugate(const Representation& rho, const GroupElement& h) {
  std::vector<GroupElement> imgs;
  for (const auto& g : rho.images()) imgs.push_back(h * g * inverse(h));
  return Representation(rho.kind(), imgs);
}

inline Cocycle transport(const Cocycle& z, const GroupElement& h) {
  Cocycle out;
  for (const auto& v : z.values) out.values.push_back(adjoint(h, v));
  return out;
}

}  // namespace conerig::testing
