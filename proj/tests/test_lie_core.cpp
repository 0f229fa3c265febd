#include <doctest.h>

#include "support.hpp"

using namespace conerig;
using namespace conerig::testing;

TEST_SUITE("lie-core") {

TEST_CASE("curvature accepts only -1, 0, 1") {
  CHECK_THROWS_AS(Curvature(2), DomainError);
  CHECK_THROWS_AS(Curvature(-2), DomainError);
  CHECK(Curvature(1) == Curvature::spherical());
}

TEST_CASE("kappa-trig values") {
  const auto [s, c, t] = sn_cs_ct(Curvature(-1), 1.0);
  CHECK(s == doctest::Approx(1.1752011936438014).epsilon(1e-15));
  CHECK(c == doctest::Approx(1.5430806348152437).epsilon(1e-15));
  CHECK(t == doctest::Approx(1.3130352854993312).epsilon(1e-15));
  const auto [s0, c0, t0] = sn_cs_ct(Curvature(0), 0.5);
  CHECK(s0 == 0.5);
  CHECK(c0 == 1.0);
  CHECK(t0 == 2.0);
  CHECK_THROWS_AS(sn_cs_ct(Curvature(0), 0.0), DomainError);
  for (int k : {-1, 0, 1}) CHECK(sn(Curvature(k), 1e-8) / 1e-8 == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("group axioms on random elements") {
  std::mt19937 gen(11);
  for (GroupKind kind : {GroupKind::SL2C, GroupKind::SU2, GroupKind::SU2xSU2}) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const GroupElement a = random_element(kind, gen), b = random_element(kind, gen), c = random_element(kind, gen);
      worst = std::max(worst, distance((a * b) * c, a * (b * c)));
      worst = std::max(worst, distance_to_identity(a * inverse(a)));
      worst = std::max(worst, distance_to_identity(inverse(a) * a));
    }
    CHECK(worst < 1e-13);
  }
}

TEST_CASE("quaternion to matrix is a homomorphism") {
  std::mt19937 gen(12);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_su2(gen), q = random_su2(gen);
    CHECK((p.matrix() * q.matrix() - (p * q).matrix()).norm() < 1e-14);
    CHECK(std::abs(p.matrix().determinant() - C(1)) < 1e-14);
    CHECK((p.matrix() * p.matrix().adjoint() - Matrix2c<double>::Identity()).norm() < 1e-14);
  }
  const auto r = Su2Element<double>::rotation(0.3, Eigen::Vector3d::UnitX());
  CHECK(std::abs(r.matrix()(0, 0) - std::polar(1.0, 0.3)) < 1e-15);
}

TEST_CASE("membership tolerance") {
  Matrix2c<double> m = Matrix2c<double>::Identity();
  m(0, 0) = 1.001;
  CHECK_THROWS_AS(Sl2cElement<double>::from_matrix(m), GroupMembershipError);
  m(0, 0) = 1.0 + 1e-11;
  const auto g = Sl2cElement<double>::from_matrix(m);
  CHECK(std::abs(g.matrix().determinant() - C(1)) < 1e-15);
  CHECK_THROWS_AS(Su2Element<double>::from_quaternion(1.0, 0.01, 0.0, 0.0), GroupMembershipError);
  const auto q = Su2Element<double>::from_quaternion(1.0 + 2e-11, 0.0, 0.0, 0.0);
  CHECK(q.quaternion().norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("rot part is stored antisymmetric") {
  Matrix3<double> bad = Matrix3<double>::Zero();
  bad(0, 1) = 1.0;
  CHECK_THROWS(IsomAlgebraElement<double>::from_rot(Curvature(0), bad, Vector3<double>::Zero()));
  const auto x = IsomAlgebraElement<double>::from_rot(Curvature(0), hat(Vector3<double>(1, 2, 3)), Vector3<double>::Zero());
  CHECK((x.rot() + x.rot().transpose()).norm() == 0.0);
}

TEST_CASE("bracket examples") {
  std::mt19937 gen(13);
  for (int k : {-1, 0, 1}) {
    const auto x = random_isom(Curvature(k), gen);
    CHECK(bracket(x, x).coords().norm() == 0.0);
  }
  const Vector3<double> z = Vector3<double>::Zero();
  const IsomAlgebraElement<double> e1(Curvature(0), z, Vector3<double>::UnitX()), e2(Curvature(0), z, Vector3<double>::UnitY());
  CHECK(bracket(e1, e2).coords().norm() == 0.0);
  const IsomAlgebraElement<double> h1(Curvature(-1), z, Vector3<double>::UnitX()), h2(Curvature(-1), z, Vector3<double>::UnitY());
  const auto b = bracket(h1, h2);
  // -R(e1, e2) e1 = kappa e2 with kappa = -1.
  CHECK((b.rot() * Vector3<double>::UnitX() + Vector3<double>::UnitY()).norm() < 1e-15);
  CHECK(b.trans().norm() == 0.0);
  CHECK_THROWS_AS(bracket(h1, e2), CurvatureMismatch);
}

TEST_CASE("Jacobi identity") {
  std::mt19937 gen(14);
  for (int k : {-1, 0, 1}) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const auto x = random_isom(Curvature(k), gen), y = random_isom(Curvature(k), gen), w = random_isom(Curvature(k), gen);
      const auto j = bracket(x, bracket(y, w)) + bracket(y, bracket(w, x)) + bracket(w, bracket(x, y));
      worst = std::max(worst, j.coords().norm());
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("ad matrix") {
  std::mt19937 gen(15);
  CHECK(ad_matrix(IsomAlgebraElement<double>(Curvature(1), Vector3<double>::Zero(), Vector3<double>::Zero())).norm() == 0.0);
  for (int i = 0; i < 100; ++i) {
    for (int k : {-1, 0, 1}) {
      const auto x = random_isom(Curvature(k), gen), y = random_isom(Curvature(k), gen);
      CHECK((ad_matrix(x) * y.coords() - bracket(x, y).coords()).norm() < 1e-13);
    }
    // h is the identity in (axial, trans) coordinates, so antisymmetry is literal.
    const Matrix6<double> a = ad_matrix(random_isom(Curvature(1), gen));
    CHECK((a + a.transpose()).norm() < 1e-13);
  }
}

TEST_CASE("Killing form values and block structure") {
  const Vector3<double> z = Vector3<double>::Zero();
  for (int k : {-1, 0, 1}) {
    const IsomAlgebraElement<double> rot(Curvature(k), Vector3<double>::UnitZ(), z), tr(Curvature(k), z, Vector3<double>::UnitX());
    CHECK(std::abs(killing_form(rot, rot) + 4.0) < 1e-12);
    CHECK(std::abs(killing_form(tr, tr) + 4.0 * k) < 1e-12);
  }
  std::mt19937 gen(16);
  for (int k : {-1, 0, 1}) {
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
      const Vector3<double> a = gaussian3(gen).normalized(), b = gaussian3(gen).normalized();
      const Vector3<double> u = gaussian3(gen).normalized(), v = gaussian3(gen).normalized();
      const IsomAlgebraElement<double> ka(Curvature(k), a, z), kb(Curvature(k), b, z), pu(Curvature(k), z, u), pv(Curvature(k), z, v);
      worst = std::max(worst, std::abs(killing_form(ka, kb) + 4.0 * so_inner(hat(a), hat(b))));
      worst = std::max(worst, std::abs(killing_form(pu, pv) + 4.0 * k * u.dot(v)));
      worst = std::max(worst, std::abs(killing_form(ka, pu)));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("symmetric-space identity on p") {
  std::mt19937 gen(17);
  const Vector3<double> zero = Vector3<double>::Zero();
  for (int k : {-1, 1}) {
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
      const Vector3<double> x = gaussian3(gen), y = gaussian3(gen), w = gaussian3(gen);
      // R(X, Y) Z = kappa(<Y, Z> X - <X, Z> Y).
      const Vector3<double> r = k * (y.dot(w) * x - x.dot(w) * y);
      const IsomAlgebraElement<double> X(Curvature(k), zero, x), Y(Curvature(k), zero, y), Z(Curvature(k), zero, w);
      const auto nested = bracket(bracket(X, Y), Z);
      worst = std::max(worst, (r + nested.trans()).norm());
      CHECK(nested.axial().norm() < 1e-12);
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("sigma fields at radius r") {
  for (int k : {-1, 0, 1}) {
    const auto t = sigma_theta_at(Curvature(k), 0.4), s = sigma_z_at(Curvature(k), 0.4);
    CHECK(h_metric(t, t) == doctest::Approx(sn(Curvature(k), 0.4) * sn(Curvature(k), 0.4) + cs(Curvature(k), 0.4) * cs(Curvature(k), 0.4)));
    CHECK(std::abs(h_metric(t, s)) < 1e-15);
  }
}

TEST_CASE("matrix sigma fields") {
  const auto [t, z] = sigma_fields(GroupKind::SL2C);
  CHECK((t.first - C(0, 1) * z.first).norm() == 0.0);
  const auto [tp, zp] = sigma_fields(GroupKind::SU2xSU2);
  CHECK((tp + zp).second.norm() == 0.0);
  CHECK((tp - zp).first.norm() == 0.0);
  CHECK((tp + zp).first.norm() > 0.5);
}

TEST_CASE("real coordinates and complex structure") {
  std::mt19937 gen(18);
  for (GroupKind kind : {GroupKind::SL2C, GroupKind::SU2, GroupKind::SU2xSU2}) {
    const AlgebraVector v = random_algebra(kind, gen);
    CHECK((algebra_from_real(kind, to_real(v)) - v).norm() < 1e-15);
    CHECK(algebra_defect(v) < 1e-15);
  }
  const AlgebraVector v = random_algebra(GroupKind::SL2C, gen);
  CHECK((complex_structure() * to_real(v) - to_real(C(0, 1) * v)).norm() < 1e-15);
  const GroupElement g = random_sl2c(gen);
  CHECK((adjoint_matrix(g) * to_real(v) - to_real(adjoint(g, v))).norm() < 1e-12);
}

TEST_CASE("complex length, SL2C") {
  const auto rot = Sl2cElement<double>::diagonal(std::polar(1.0, pi / 4));
  CHECK(std::abs(complex_length_sl2c(rot) - C(0, pi / 2)) < 1e-14);
  const auto tr = Sl2cElement<double>::diagonal(std::exp(0.3));
  CHECK(std::abs(complex_length_sl2c(tr) - C(0.6, 0)) < 1e-14);
  CHECK_THROWS_AS(complex_length_sl2c(Sl2cElement<double>()), Degenerate);
  Matrix2c<double> para;
  para << 1, 1, 0, 1;
  CHECK_THROWS_AS(complex_length_sl2c(Sl2cElement<double>::unchecked(para)), NotSemisimple);

  std::mt19937 gen(19);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_sl2c(gen), h = random_sl2c(gen);
    const C l = complex_length_sl2c(g);
    const C lc = complex_length_sl2c(h * g * h.inverse());
    CHECK(std::abs(l - lc) < 1e-10);
    const C t = g.trace();
    CHECK(std::min(std::abs(t - 2.0 * std::cosh(l / 2.0)), std::abs(t + 2.0 * std::cosh(l / 2.0))) < 1e-10);
    CHECK(l.imag() >= 0.0);
    CHECK(l.imag() < 2 * pi);
  }
}

TEST_CASE("complex length, SU2 x SU2") {
  const double alpha = 1.1;
  const auto d = Su2Element<double>::rotation(alpha / 2, Eigen::Vector3d::UnitX());
  const auto [l1, l2] = complex_length_su2pair(Su2PairElement<double>{d, d});
  CHECK(std::abs(l1) < 1e-14);
  CHECK(l2 == doctest::Approx(alpha));
  const auto [t1, t2] = complex_length_su2pair(Su2PairElement<double>{d, d.inverse()});
  CHECK(std::abs(t2) < 1e-14);
  CHECK(t1 == doctest::Approx(alpha));
  // Non-coaxial pair: the lengths come from the traces alone.
  const auto j = Su2Element<double>::unchecked(Eigen::Quaterniond(0, 0, 1, 0));
  const auto x = Su2Element<double>::rotation(0.4, Eigen::Vector3d::UnitX());
  const Su2PairElement<double> g{x, j * x * j.inverse()};
  const auto [n1, n2] = complex_length_su2pair(g);
  CHECK(std::cos((n2 + n1) / 2) == doctest::Approx(g.left.trace() / 2));
  CHECK(std::cos((n2 - n1) / 2) == doctest::Approx(g.right.trace() / 2));
  // The conjugated factor rotates about the reversed axis: a pure translation of length 0.8.
  CHECK(std::abs(n2) < 1e-14);
  CHECK(n1 == doctest::Approx(0.8));
}

}
