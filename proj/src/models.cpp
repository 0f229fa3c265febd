#include <cctype>
#include <numeric>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "conerig/models.hpp"

namespace conerig {

namespace {

using C = std::complex<double>;
constexpr C I(0.0, 1.0);

Sl2cElement<double> diag(C z) { return Sl2cElement<double>::diagonal(std::exp(z)); }

Su2Element<double> su2_diag(double t) { return Su2Element<double>::rotation(t, Eigen::Vector3d::UnitX()); }

std::string swapcase_reverse(const std::string& w) {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) c = std::islower(static_cast<unsigned char>(c)) ? std::toupper(c) : std::tolower(c);
  return out;
}

std::string two_bridge_w(int p, int q, int* sigma) {
  if (p < 3 || q % 2 == 0 || std::gcd(p, q) != 1) throw DomainError("two-bridge parameters need p >= 3, q odd, gcd 1");
  std::string w;
  int s = 0;
  for (int i = 1; i < p; ++i) {
    const int e = ((q * i) / p) % 2 == 0 ? 1 : -1;
    const char c = i % 2 ? 'b' : 'a';
    w += e > 0 ? c : static_cast<char>(std::toupper(c));
    s += e;
  }
  if (sigma) *sigma = s;
  return w;
}

Representation riley_rep(C m, C u) {
  Matrix2c<double> a, b;
  a << m, 1.0, 0.0, 1.0 / m;
  b << m, 0.0, u, 1.0 / m;
  return Representation(GroupKind::SL2C, {Sl2cElement<double>::unchecked(a), Sl2cElement<double>::unchecked(b)});
}

Eigen::Vector4cd relator_defect(const Presentation& p, C m, C u) {
  const Matrix2c<double> r = first_matrix(evaluate(riley_rep(m, u), p.relators().front()));
  return Eigen::Vector4cd(r(0, 0) - 1.0, r(0, 1), r(1, 0), r(1, 1) - 1.0);
}

// Gauss-Newton in the single complex unknown u; the defect is holomorphic in u.
C newton(const Presentation& p, C m, C u, int iterations = 60) {
  for (int it = 0; it < iterations; ++it) {
    const Eigen::Vector4cd r = relator_defect(p, m, u);
    if (r.norm() < 1e-15) break;
    const double h = 1e-7;
    const Eigen::Vector4cd jac = (relator_defect(p, m, u + h) - relator_defect(p, m, u - h)) / (2 * h);
    const C step = jac.dot(r) / jac.squaredNorm();
    u -= step;
    if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(u))) break;
  }
  return u;
}

Su2Element<double> random_su2(std::mt19937& gen) {
  std::normal_distribution<double> n;
  Eigen::Vector4d v(n(gen), n(gen), n(gen), n(gen));
  v.normalize();
  return Su2Element<double>::from_quaternion(v[0], v[1], v[2], v[3]);
}

Su2Element<double> perturb(const Su2Element<double>& g, const Eigen::Vector3d& x) {
  const double t = x.norm();
  const Su2Element<double> e = t == 0.0 ? Su2Element<double>() : Su2Element<double>::rotation(t, x / t);
  return e * g;
}

}  // namespace

Model diagonal_torus_sl2c(C l_exp, C m_exp, double cone_angle) {
  Presentation p("ab");
  p.add_relator("abAB").add_meridian("b", "e0", cone_angle);
  return {p, Representation(GroupKind::SL2C, {diag(l_exp), diag(m_exp)})};
}

Model coaxial_torus_su2pair(double cone_angle, double t1, double t2) {
  Presentation p("ab");
  p.add_relator("abAB").add_meridian("b", "e0", cone_angle);
  const Su2PairElement<double> l{su2_diag(t1), su2_diag(t2)};
  const Su2PairElement<double> m{su2_diag(cone_angle / 2), su2_diag(cone_angle / 2)};
  return {p, Representation(GroupKind::SU2xSU2, {l, m})};
}

Model pants_sl2c(double alpha) {
  const double t = alpha / 2, c = std::cos(t), s = std::sin(t);
  // Re(AB) = c^2 - s^2 n1.n2 = c makes (AB)^-1 elliptic with the same angle.
  const double dot = (c * c - c) / (s * s);
  const Eigen::Vector3d n1(0, 0, 1), n2(std::sqrt(1 - dot * dot), 0, dot);
  const auto a = Su2Element<double>::rotation(t, n1);
  const auto b = Su2Element<double>::rotation(t, n2);
  const auto cc = (a * b).inverse();
  auto embed = [](const Su2Element<double>& g) { return Sl2cElement<double>::unchecked(g.matrix()); };
  Presentation p("abc");
  p.add_relator("abc").add_meridian("a", "e1", alpha).add_meridian("b", "e2", alpha).add_meridian("c", "e3", alpha);
  return {p, Representation(GroupKind::SL2C, {embed(a), embed(b), embed(cc)})};
}

Model genus2_su2(std::uint32_t seed) {
  std::mt19937 gen(seed);
  const auto a = random_su2(gen), b = random_su2(gen);
  auto c = random_su2(gen), d = random_su2(gen);
  const Su2Element<double> target = b * a * b.inverse() * a.inverse();
  auto defect = [&](const Su2Element<double>& x, const Su2Element<double>& y) {
    const auto q = (x * y * x.inverse() * y.inverse() * target.inverse()).quaternion();
    return Eigen::Vector3d(q.x(), q.y(), q.z());
  };
  for (int it = 0; it < 100; ++it) {
    const Eigen::Vector3d r = defect(c, d);
    if (r.norm() < 1e-15) break;
    Eigen::Matrix<double, 3, 6> jac;
    const double h = 1e-7;
    for (int k = 0; k < 6; ++k) {
      Eigen::Vector3d e = Eigen::Vector3d::Zero();
      e[k % 3] = h;
      jac.col(k) = k < 3 ? (defect(perturb(c, e), d) - defect(perturb(c, -e), d)) / (2 * h)
                         : (defect(c, perturb(d, e)) - defect(c, perturb(d, -e))) / (2 * h);
    }
    const Eigen::Matrix<double, 6, 1> step = jac.completeOrthogonalDecomposition().solve(-r);
    c = perturb(c, step.head<3>());
    d = perturb(d, step.tail<3>());
  }
  Presentation p("abcd");
  p.add_relator("abABcdCD");
  return {p, Representation(GroupKind::SU2, {a, b, c, d})};
}

std::string two_bridge_relator(int p, int q) {
  const std::string w = two_bridge_w(p, q, nullptr);
  return "a" + w + "B" + swapcase_reverse(w);
}

std::string two_bridge_longitude(int p, int q) {
  int sigma = 0;
  const std::string w = two_bridge_w(p, q, &sigma);
  const std::string tail(static_cast<std::size_t>(std::abs(2 * sigma)), sigma > 0 ? 'A' : 'a');
  return w + std::string(w.rbegin(), w.rend()) + tail;
}

C riley_parabolic_root(int p, int q, C seed) {
  Presentation pres("ab");
  pres.add_relator(two_bridge_relator(p, q));
  return newton(pres, 1.0, seed);
}

RileyResult riley_cone_representation(int p, int q, double alpha, C u0, int steps) {
  Presentation pres("ab");
  pres.add_relator(two_bridge_relator(p, q)).add_meridian("a", "K", alpha);
  C u = newton(pres, 1.0, u0);
  for (int k = 1; k <= steps; ++k) u = newton(pres, std::exp(I * (alpha * k / steps / 2)), u);
  const C m = std::exp(I * (alpha / 2));
  RileyResult out{{pres, riley_rep(m, u)}, u, 0.0};
  out.residual = relator_residual(out.model.representation, pres);
  return out;
}

}  // namespace conerig
