#pragma once

#include <complex>
#include <variant>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "conerig/error.hpp"

namespace conerig {

enum class GroupKind { SL2C, SU2, SU2xSU2 };

const char* to_string(GroupKind g);
GroupKind group_kind_from_string(const std::string& s);

/// Membership tolerance for det = 1 and unitarity; inputs within it are re-projected.
inline constexpr double tol_group = 1e-10;
/// Defects below this are rounding noise and left alone, so re-projection is idempotent.
inline constexpr double reprojection_floor = 4e-16;

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

template <typename Scalar>
class Sl2cElement {
public:
  using Complex = std::complex<Scalar>;
  using Matrix = Matrix2c<Scalar>;

  Sl2cElement() : m_(Matrix::Identity()) {}

  /// Rejects |det - 1| > tol, otherwise rescales by sqrt(det).
  static Sl2cElement from_matrix(const Matrix& m, Scalar tol = Scalar(tol_group)) {
    const Complex det = m.determinant();
    const Scalar defect = std::abs(det - Complex(1));
    if (!(defect <= tol)) throw GroupMembershipError("determinant differs from 1", double(defect));
    if (defect <= Scalar(reprojection_floor)) return Sl2cElement(m);
    return Sl2cElement(m / std::sqrt(det));
  }

  /// No validation, for products of already valid elements.
  static Sl2cElement unchecked(const Matrix& m) { return Sl2cElement(m); }

  static Sl2cElement diagonal(Complex lambda) {
    Matrix m = Matrix::Zero();
    m(0, 0) = lambda;
    m(1, 1) = Complex(1) / lambda;
    return Sl2cElement(m);
  }

  const Matrix& matrix() const { return m_; }
  Complex trace() const { return m_.trace(); }

  Sl2cElement inverse() const {
    Matrix inv;
    inv << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
    return Sl2cElement(inv);
  }

  friend Sl2cElement operator*(const Sl2cElement& a, const Sl2cElement& b) {
    return Sl2cElement(a.m_ * b.m_);
  }

private:
  explicit Sl2cElement(const Matrix& m) : m_(m) {}
  Matrix m_;
};

/// Unit quaternion a+bi+cj+dk, identified with [[a+bi, c+di], [-c+di, a-bi]].
template <typename Scalar>
class Su2Element {
public:
  using Complex = std::complex<Scalar>;
  using Matrix = Matrix2c<Scalar>;
  using Quaternion = Eigen::Quaternion<Scalar>;

  Su2Element() : q_(Quaternion::Identity()) {}

  static Su2Element from_quaternion(Scalar a, Scalar b, Scalar c, Scalar d,
                                     Scalar tol = Scalar(tol_group)) {
    const Scalar n2 = a * a + b * b + c * c + d * d;
    const Scalar defect = std::abs(n2 - Scalar(1));
    if (!(defect <= tol)) throw GroupMembershipError("quaternion is not a unit", double(defect));
    Quaternion q(a, b, c, d);
    if (defect > Scalar(reprojection_floor)) q.normalize();
    return Su2Element(q);
  }

  static Su2Element from_matrix(const Matrix& m, Scalar tol = Scalar(tol_group)) {
    const Scalar a = m(0, 0).real(), b = m(0, 0).imag(), c = m(0, 1).real(), d = m(0, 1).imag();
    const Scalar shape = (m - to_matrix(a, b, c, d)).norm();
    const Scalar unit = std::abs(a * a + b * b + c * c + d * d - Scalar(1));
    const Scalar defect = std::max(shape, unit);
    if (!(defect <= tol)) throw GroupMembershipError("matrix is not in SU(2)", double(defect));
    Quaternion q(a, b, c, d);
    if (unit > Scalar(reprojection_floor)) q.normalize();
    return Su2Element(q);
  }

  static Su2Element unchecked(const Quaternion& q) { return Su2Element(q); }

  /// exp(t * (x i + y j + z k)) for a unit axis (x, y, z).
  static Su2Element rotation(Scalar t, const Eigen::Matrix<Scalar, 3, 1>& axis) {
    const Eigen::Matrix<Scalar, 3, 1> n = axis.normalized();
    return Su2Element(Quaternion(std::cos(t), std::sin(t) * n.x(), std::sin(t) * n.y(),
                                 std::sin(t) * n.z()));
  }

  const Quaternion& quaternion() const { return q_; }
  Matrix matrix() const { return to_matrix(q_.w(), q_.x(), q_.y(), q_.z()); }
  Scalar trace() const { return Scalar(2) * q_.w(); }
  Su2Element inverse() const { return Su2Element(q_.conjugate()); }

  friend Su2Element operator*(const Su2Element& a, const Su2Element& b) {
    return Su2Element(a.q_ * b.q_);
  }

private:
  explicit Su2Element(const Quaternion& q) : q_(q) {}

  static Matrix to_matrix(Scalar a, Scalar b, Scalar c, Scalar d) {
    Matrix m;
    m << Complex(a, b), Complex(c, d), Complex(-c, d), Complex(a, -b);
    return m;
  }

  Quaternion q_;
};

template <typename Scalar>
struct Su2PairElement {
  Su2Element<Scalar> left;
  Su2Element<Scalar> right;

  std::pair<Scalar, Scalar> trace() const { return {left.trace(), right.trace()}; }
  Su2PairElement inverse() const { return {left.inverse(), right.inverse()}; }

  friend Su2PairElement operator*(const Su2PairElement& a, const Su2PairElement& b) {
    return {a.left * b.left, a.right * b.right};
  }
};

/// Runtime-tagged element used by presentations and representations.
using GroupElement = std::variant<Sl2cElement<double>, Su2Element<double>, Su2PairElement<double>>;

GroupKind kind_of(const GroupElement& g);
GroupElement identity_element(GroupKind kind);
GroupElement operator*(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);

/// Matrix of the first factor (the only one unless SU2xSU2) and of the second factor.
Matrix2c<double> first_matrix(const GroupElement& g);
Matrix2c<double> second_matrix(const GroupElement& g);

/// Frobenius distance, summed in quadrature over factors.
double distance(const GroupElement& a, const GroupElement& b);
double distance_to_identity(const GroupElement& g);

/// Distance to the nearer of {id, -id}; for pairs the smaller of the two factor distances.
double distance_to_center(const GroupElement& g);

}  // namespace conerig
