#include <numbers>
#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "conerig/groups.hpp"
#include "conerig/matrix_algebra.hpp"

namespace conerig {

namespace {

using C = std::complex<double>;
using M2 = Matrix2c<double>;

constexpr C I(0.0, 1.0);

M2 su2_matrix(double alpha, double beta, double gamma) {
  M2 m;
  m << C(0, alpha), C(beta, gamma), C(-beta, gamma), C(0, -alpha);
  return m;
}

Eigen::Vector3d su2_coords(const M2& m) {
  return {m(0, 0).imag(), m(0, 1).real(), m(0, 1).imag()};
}

M2 sl2_matrix(const Eigen::VectorXd& c, int off) {
  const C b(c[off + 0], c[off + 3]), a(c[off + 1] / std::numbers::sqrt2, c[off + 4] / std::numbers::sqrt2),
      cc(c[off + 2], c[off + 5]);
  M2 m;
  m << a, b, cc, -a;
  return m;
}

}  // namespace

const char* to_string(GroupKind g) {
  switch (g) {
    case GroupKind::SL2C: return "SL2C";
    case GroupKind::SU2: return "SU2";
    case GroupKind::SU2xSU2: return "SU2xSU2";
  }
  return "?";
}

GroupKind group_kind_from_string(const std::string& s) {
  if (s == "SL2C") return GroupKind::SL2C;
  if (s == "SU2") return GroupKind::SU2;
  if (s == "SU2xSU2") return GroupKind::SU2xSU2;
  throw DomainError("unsupported group tag '" + s + "'");
}

GroupKind kind_of(const GroupElement& g) {
  return static_cast<GroupKind>(g.index());
}

GroupElement identity_element(GroupKind kind) {
  switch (kind) {
    case GroupKind::SL2C: return Sl2cElement<double>();
    case GroupKind::SU2: return Su2Element<double>();
    case GroupKind::SU2xSU2: return Su2PairElement<double>();
  }
  throw DomainError("unsupported group tag");
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return std::visit(
      [](const auto& x, const auto& y) -> GroupElement {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (std::is_same_v<X, Y>) {
          return x * y;
        } else {
          throw DomainError("product of elements of different groups");
        }
      },
      a, b);
}

GroupElement inverse(const GroupElement& g) {
  return std::visit([](const auto& x) -> GroupElement { return x.inverse(); }, g);
}

M2 first_matrix(const GroupElement& g) {
  if (auto p = std::get_if<Sl2cElement<double>>(&g)) return p->matrix();
  if (auto p = std::get_if<Su2Element<double>>(&g)) return p->matrix();
  return std::get<Su2PairElement<double>>(g).left.matrix();
}

M2 second_matrix(const GroupElement& g) {
  if (auto p = std::get_if<Su2PairElement<double>>(&g)) return p->right.matrix();
  return M2::Zero();
}

double distance(const GroupElement& a, const GroupElement& b) {
  if (kind_of(a) != kind_of(b)) throw DomainError("distance between different groups");
  return std::hypot((first_matrix(a) - first_matrix(b)).norm(),
                    (second_matrix(a) - second_matrix(b)).norm());
}

double distance_to_identity(const GroupElement& g) {
  return distance(g, identity_element(kind_of(g)));
}

double distance_to_center(const GroupElement& g) {
  const M2 id = M2::Identity();
  auto central = [&](const M2& m) { return std::min((m - id).norm(), (m + id).norm()); };
  const double d1 = central(first_matrix(g));
  if (kind_of(g) != GroupKind::SU2xSU2) return d1;
  return std::min(d1, central(second_matrix(g)));
}

int algebra_dim(GroupKind kind) {
  return kind == GroupKind::SU2 ? 3 : 6;
}

Eigen::VectorXd to_real(const AlgebraVector& v) {
  Eigen::VectorXd c(algebra_dim(v.kind));
  switch (v.kind) {
    case GroupKind::SL2C: {
      const M2& m = v.first;
      // The diagonal entry carries sqrt 2 so the coordinate norm is the Frobenius norm.
      c << m(0, 1).real(), std::numbers::sqrt2 * m(0, 0).real(), m(1, 0).real(), m(0, 1).imag(),
          std::numbers::sqrt2 * m(0, 0).imag(), m(1, 0).imag();
      break;
    }
    case GroupKind::SU2: c = su2_coords(v.first); break;
    case GroupKind::SU2xSU2: c << su2_coords(v.first), su2_coords(v.second); break;
  }
  return c;
}

AlgebraVector algebra_from_real(GroupKind kind, const Eigen::VectorXd& c) {
  if (c.size() != algebra_dim(kind)) throw DomainError("coordinate vector has wrong length");
  AlgebraVector v{kind};
  switch (kind) {
    case GroupKind::SL2C: v.first = sl2_matrix(c, 0); break;
    case GroupKind::SU2: v.first = su2_matrix(c[0], c[1], c[2]); break;
    case GroupKind::SU2xSU2:
      v.first = su2_matrix(c[0], c[1], c[2]);
      v.second = su2_matrix(c[3], c[4], c[5]);
      break;
  }
  return v;
}

AlgebraVector algebra_basis(GroupKind kind, int k) {
  return algebra_from_real(kind, Eigen::VectorXd::Unit(algebra_dim(kind), k));
}

Eigen::MatrixXd complex_structure() {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(6, 6);
  j.topRightCorner(3, 3) = -Eigen::Matrix3d::Identity();
  j.bottomLeftCorner(3, 3) = Eigen::Matrix3d::Identity();
  return j;
}

AlgebraVector adjoint(const GroupElement& g, const AlgebraVector& x) {
  if (kind_of(g) != x.kind) throw DomainError("adjoint action across different groups");
  const GroupElement gi = inverse(g);
  AlgebraVector out{x.kind};
  out.first = first_matrix(g) * x.first * first_matrix(gi);
  if (x.kind == GroupKind::SU2xSU2) out.second = second_matrix(g) * x.second * second_matrix(gi);
  return out;
}

Eigen::MatrixXd adjoint_matrix(const GroupElement& g) {
  const GroupKind kind = kind_of(g);
  const int d = algebra_dim(kind);
  Eigen::MatrixXd m(d, d);
  for (int k = 0; k < d; ++k) m.col(k) = to_real(adjoint(g, algebra_basis(kind, k)));
  return m;
}

double algebra_defect(const AlgebraVector& v) {
  double defect = std::max(std::abs(v.first.trace()), std::abs(v.second.trace()));
  if (v.kind != GroupKind::SL2C) {
    defect = std::max(defect, (v.first + v.first.adjoint()).norm());
    defect = std::max(defect, (v.second + v.second.adjoint()).norm());
  }
  return defect;
}

GroupElement exp_times(const AlgebraVector& x, double t, const GroupElement& g) {
  const M2 e1 = (C(t) * x.first).exp();
  switch (x.kind) {
    case GroupKind::SL2C:
      return Sl2cElement<double>::unchecked(e1) * std::get<Sl2cElement<double>>(g);
    case GroupKind::SU2:
      return Su2Element<double>::from_matrix(e1, 1e-8) * std::get<Su2Element<double>>(g);
    case GroupKind::SU2xSU2: {
      const M2 e2 = (C(t) * x.second).exp();
      const auto& p = std::get<Su2PairElement<double>>(g);
      return Su2PairElement<double>{Su2Element<double>::from_matrix(e1, 1e-8) * p.left,
                                    Su2Element<double>::from_matrix(e2, 1e-8) * p.right};
    }
  }
  throw DomainError("unsupported group tag");
}

std::pair<AlgebraVector, AlgebraVector> sigma_fields(GroupKind kind) {
  const M2 rot = M2(Eigen::Vector2cd(0.5 * I, -0.5 * I).asDiagonal());
  switch (kind) {
    case GroupKind::SL2C: {
      const M2 tr = M2(Eigen::Vector2cd(0.5, -0.5).asDiagonal());
      return {AlgebraVector{kind, rot, M2::Zero()}, AlgebraVector{kind, tr, M2::Zero()}};
    }
    case GroupKind::SU2xSU2:
      return {AlgebraVector{kind, rot, rot}, AlgebraVector{kind, rot, -rot}};
    case GroupKind::SU2: break;
  }
  throw DomainError("sigma fields need SL2C or SU2xSU2");
}

}  // namespace conerig
