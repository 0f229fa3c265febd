#pragma once

#include <Eigen/Core>

#include "conerig/curvature.hpp"
#include "conerig/error.hpp"

namespace conerig {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar>
using Vector6 = Eigen::Matrix<Scalar, 6, 1>;
template <typename Scalar>
using Matrix6 = Eigen::Matrix<Scalar, 6, 6>;

template <typename Scalar>
Matrix3<Scalar> hat(const Vector3<Scalar>& w) {
  Matrix3<Scalar> m;
  m << Scalar(0), -w.z(), w.y(), w.z(), Scalar(0), -w.x(), -w.y(), w.x(), Scalar(0);
  return m;
}

template <typename Scalar>
Vector3<Scalar> vee(const Matrix3<Scalar>& m) {
  return Vector3<Scalar>(m(2, 1), m(0, 2), m(1, 0));
}

/// Infinitesimal isometry (A, X) in so(3) + R^3 of the model space of curvature kappa.
/// A is stored by its axial vector, so antisymmetry holds by construction.
template <typename Scalar>
class IsomAlgebraElement {
public:
  IsomAlgebraElement() = default;
  IsomAlgebraElement(Curvature k, const Vector3<Scalar>& axial, const Vector3<Scalar>& trans)
      : kappa_(k), axial_(axial), trans_(trans) {}

  static IsomAlgebraElement from_rot(Curvature k, const Matrix3<Scalar>& rot,
                                     const Vector3<Scalar>& trans) {
    if ((rot + rot.transpose()).cwiseAbs().maxCoeff() > Scalar(0))
      throw DomainError("rotation part is not antisymmetric");
    return IsomAlgebraElement(k, vee(rot), trans);
  }

  /// Coordinates (axial, trans); the basis is orthonormal for h = (,)_so + (,).
  static IsomAlgebraElement from_coords(Curvature k, const Vector6<Scalar>& c) {
    return IsomAlgebraElement(k, c.template head<3>(), c.template tail<3>());
  }

  Curvature kappa() const { return kappa_; }
  Matrix3<Scalar> rot() const { return hat(axial_); }
  const Vector3<Scalar>& axial() const { return axial_; }
  const Vector3<Scalar>& trans() const { return trans_; }

  Vector6<Scalar> coords() const {
    Vector6<Scalar> c;
    c << axial_, trans_;
    return c;
  }

  friend IsomAlgebraElement operator+(const IsomAlgebraElement& a, const IsomAlgebraElement& b) {
    if (!(a.kappa_ == b.kappa_)) throw CurvatureMismatch();
    return IsomAlgebraElement(a.kappa_, a.axial_ + b.axial_, a.trans_ + b.trans_);
  }
  friend IsomAlgebraElement operator*(Scalar s, const IsomAlgebraElement& a) {
    return IsomAlgebraElement(a.kappa_, s * a.axial_, s * a.trans_);
  }

private:
  Curvature kappa_{};
  Vector3<Scalar> axial_ = Vector3<Scalar>::Zero();
  Vector3<Scalar> trans_ = Vector3<Scalar>::Zero();
};

/// R(X, Y) = kappa (X Y^T - Y X^T), so that R(X, Y) Z = kappa(<Y,Z> X - <X,Z> Y).
template <typename Scalar>
Matrix3<Scalar> curvature_tensor(Curvature k, const Vector3<Scalar>& x, const Vector3<Scalar>& y) {
  return Scalar(k.value()) * (x * y.transpose() - y * x.transpose());
}

template <typename Scalar>
IsomAlgebraElement<Scalar> bracket(const IsomAlgebraElement<Scalar>& x,
                                   const IsomAlgebraElement<Scalar>& y) {
  if (!(x.kappa() == y.kappa())) throw CurvatureMismatch();
  const Matrix3<Scalar> a = x.rot(), b = y.rot();
  const Matrix3<Scalar> rot = a * b - b * a - curvature_tensor(x.kappa(), x.trans(), y.trans());
  const Vector3<Scalar> trans = a * y.trans() - b * x.trans();
  return IsomAlgebraElement<Scalar>(x.kappa(), vee(rot), trans);
}

template <typename Scalar>
Matrix6<Scalar> ad_matrix(const IsomAlgebraElement<Scalar>& x) {
  Matrix6<Scalar> m;
  for (int j = 0; j < 6; ++j) {
    const auto e = IsomAlgebraElement<Scalar>::from_coords(x.kappa(), Vector6<Scalar>::Unit(j));
    m.col(j) = bracket(x, e).coords();
  }
  return m;
}

template <typename Scalar>
Scalar killing_form(const IsomAlgebraElement<Scalar>& x, const IsomAlgebraElement<Scalar>& y) {
  if (!(x.kappa() == y.kappa())) throw CurvatureMismatch();
  return (ad_matrix(x) * ad_matrix(y)).trace();
}

/// (A, B)_so = -1/2 tr(AB).
template <typename Scalar>
Scalar so_inner(const Matrix3<Scalar>& a, const Matrix3<Scalar>& b) {
  return Scalar(-0.5) * (a * b).trace();
}

/// h = (,)_so on rotations plus the Euclidean product on translations.
template <typename Scalar>
Scalar h_metric(const IsomAlgebraElement<Scalar>& x, const IsomAlgebraElement<Scalar>& y) {
  return so_inner(x.rot(), y.rot()) + x.trans().dot(y.trans());
}

// Killing fields of the rotation about and the translation along the e3-axis, evaluated in the
// orthonormal frame (e_r, e_theta, e_z) at distance r from the axis.
template <typename Scalar>
IsomAlgebraElement<Scalar> sigma_theta_at(Curvature k, Scalar r) {
  return IsomAlgebraElement<Scalar>(k, Vector3<Scalar>(0, 0, cs(k, r)),
                                    Vector3<Scalar>(0, sn(k, r), 0));
}

template <typename Scalar>
IsomAlgebraElement<Scalar> sigma_z_at(Curvature k, Scalar r) {
  return IsomAlgebraElement<Scalar>(k, Vector3<Scalar>(0, Scalar(k.value()) * sn(k, r), 0),
                                    Vector3<Scalar>(0, 0, cs(k, r)));
}

}  // namespace conerig
