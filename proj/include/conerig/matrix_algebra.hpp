#pragma once

#include <complex>
#include <numbers>
#include <utility>

#include <Eigen/Core>

#include "conerig/groups.hpp"

namespace conerig {

/// Element of sl2(C), su(2) or su(2)+su(2). `second` is zero unless kind == SU2xSU2.
struct AlgebraVector {
  GroupKind kind = GroupKind::SL2C;
  Matrix2c<double> first = Matrix2c<double>::Zero();
  Matrix2c<double> second = Matrix2c<double>::Zero();

  static AlgebraVector zero(GroupKind k) { return AlgebraVector{k}; }

  AlgebraVector& operator+=(const AlgebraVector& o) {
    first += o.first;
    second += o.second;
    return *this;
  }
  friend AlgebraVector operator+(AlgebraVector a, const AlgebraVector& b) { return a += b; }
  friend AlgebraVector operator-(const AlgebraVector& a) { return {a.kind, -a.first, -a.second}; }
  friend AlgebraVector operator-(const AlgebraVector& a, const AlgebraVector& b) { return a + (-b); }
  friend AlgebraVector operator*(std::complex<double> s, const AlgebraVector& a) {
    return {a.kind, s * a.first, s * a.second};
  }

  double norm() const { return std::sqrt(first.squaredNorm() + second.squaredNorm()); }
};

/// Real dimension of the Lie algebra: 6, 3 and 6.
int algebra_dim(GroupKind kind);

// Real coordinates. sl2(C): X = [[a, b], [c, -a]] -> (Re b, s Re a, Re c, Im b, s Im a, Im c)
// with s = sqrt 2, so the Euclidean norm is the Frobenius norm and Ad of SU(2) is orthogonal.
// su(2): alpha i + beta j + gamma k = [[i alpha, beta + i gamma], [-beta + i gamma, -i alpha]]
// -> (alpha, beta, gamma), Frobenius norm sqrt 2 times the Euclidean one. Pairs concatenate.
Eigen::VectorXd to_real(const AlgebraVector& v);
AlgebraVector algebra_from_real(GroupKind kind, const Eigen::VectorXd& c);

/// Basis vector k of the real coordinate system.
AlgebraVector algebra_basis(GroupKind kind, int k);

/// Multiplication by i on sl2(C) coordinates.
Eigen::MatrixXd complex_structure();

/// Ad(g) X = g X g^{-1}.
AlgebraVector adjoint(const GroupElement& g, const AlgebraVector& x);
Eigen::MatrixXd adjoint_matrix(const GroupElement& g);

/// Largest defect of tracelessness (and anti-hermiticity where it applies).
double algebra_defect(const AlgebraVector& v);

/// exp(t X) g, used to move along a cocycle direction.
GroupElement exp_times(const AlgebraVector& x, double t, const GroupElement& g);

/// Standard-position values of the rotation and translation fields sigma_theta, sigma_z.
std::pair<AlgebraVector, AlgebraVector> sigma_fields(GroupKind kind);

namespace detail {
template <typename Scalar>
Scalar wrap_two_pi(Scalar x) {
  const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
  x = std::fmod(x, two_pi);
  if (x < Scalar(0)) x += two_pi;
  if (x >= two_pi) x -= two_pi;
  return x;
}
}  // namespace detail

/// Complex length L with tr g = +-2 cosh(L/2), Im L in [0, 2 pi). Of the pair +-L we return
/// the one with Re L > 0, or for elliptic g the one with Im L in [0, pi].
template <typename Scalar>
std::complex<Scalar> complex_length_sl2c(const Sl2cElement<Scalar>& g, Scalar tol = Scalar(tol_group)) {
  using C = std::complex<Scalar>;
  const auto& m = g.matrix();
  const auto id = Matrix2c<Scalar>::Identity();
  if ((m - id).norm() <= tol || (m + id).norm() <= tol) throw Degenerate("element is +-id");
  const C t = g.trace();
  if (std::abs(t - C(2)) <= tol || std::abs(t + C(2)) <= tol)
    throw NotSemisimple("parabolic element has no complex length");
  const C lambda = (t + std::sqrt(t * t - C(4))) / C(2);
  C len = Scalar(2) * std::log(lambda);
  const Scalar scale = std::max(Scalar(1), std::abs(len));
  if (len.real() < -tol * scale || (std::abs(len.real()) <= tol * scale && len.imag() < Scalar(0)))
    len = -len;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  Scalar im = detail::wrap_two_pi(len.imag());
  if (std::abs(len.real()) <= tol * scale && im > pi) im = Scalar(2) * pi - im;
  return C(std::abs(len.real()) <= tol * scale ? Scalar(0) : len.real(), im);
}

/// (L1, L2) = (x - y, x + y) for eigenvalues e^{ix}, e^{iy} of the two factors, measured along a
/// common axis orientation. L2 in [0, 2 pi), L1 in (-pi, pi], L1 >= 0 when L2 = 0.
template <typename Scalar>
std::pair<Scalar, Scalar> complex_length_su2pair(const Su2PairElement<Scalar>& g,
                                                 Scalar tol = Scalar(tol_group)) {
  const auto& l = g.left.quaternion();
  const auto& r = g.right.quaternion();
  const Scalar sl = l.vec().norm(), sr = r.vec().norm();
  if (sl <= tol || sr <= tol) throw Degenerate("a factor is +-id");
  const Scalar x = std::atan2(sl, l.w());
  Scalar y = std::atan2(sr, r.w());
  if (l.vec().dot(r.vec()) < Scalar(0)) y = -y;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  Scalar l2 = detail::wrap_two_pi(x + y);
  Scalar l1 = detail::wrap_two_pi(x - y);
  if (l1 > pi) l1 -= Scalar(2) * pi;
  if (std::abs(l2) <= tol || std::abs(l2 - Scalar(2) * pi) <= tol) {
    l2 = Scalar(0);
    if (l1 < Scalar(0)) l1 = -l1;
  }
  return {l1, l2};
}

}  // namespace conerig
