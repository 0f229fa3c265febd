#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "conerig/error.hpp"

namespace conerig {

class Curvature {
public:
  constexpr Curvature() = default;
  explicit Curvature(int kappa) : kappa_(kappa) {
    if (kappa < -1 || kappa > 1) throw DomainError("curvature must be -1, 0 or 1");
  }

  static Curvature hyperbolic() { return Curvature(-1); }
  static Curvature euclidean() { return Curvature(0); }
  static Curvature spherical() { return Curvature(1); }

  constexpr int value() const { return kappa_; }
  friend constexpr bool operator==(Curvature a, Curvature b) { return a.kappa_ == b.kappa_; }

private:
  int kappa_ = 0;
};

/// Largest admissible radius for the kappa-trig functions (pi for the sphere, infinity otherwise).
template <typename Scalar = double>
Scalar max_radius(Curvature k) {
  return k.value() == 1 ? std::numbers::pi_v<Scalar> : std::numeric_limits<Scalar>::infinity();
}

template <typename Scalar>
Scalar sn(Curvature k, Scalar r) {
  switch (k.value()) {
    case -1: return std::sinh(r);
    case 1: return std::sin(r);
    default: return r;
  }
}

template <typename Scalar>
Scalar cs(Curvature k, Scalar r) {
  switch (k.value()) {
    case -1: return std::cosh(r);
    case 1: return std::cos(r);
    default: return Scalar(1);
  }
}

/// (sn_k(r), cs_k(r), cs_k(r)/sn_k(r)) for r in (0, max_radius(k)).
template <typename Scalar>
std::tuple<Scalar, Scalar, Scalar> sn_cs_ct(Curvature k, Scalar r) {
  if (!(r > Scalar(0)) || !(r < max_radius<Scalar>(k)))
    throw DomainError("radius outside the domain of the curvature functions");
  const Scalar s = sn(k, r);
  const Scalar c = cs(k, r);
  return {s, c, c / s};
}

}  // namespace conerig
