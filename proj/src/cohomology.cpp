#include <algorithm>
#include <cmath>
#include <numbers>

#include "conerig/cohomology.hpp"
#include "conerig/error.hpp"

namespace conerig {

namespace {

Eigen::MatrixXd stacked_fixed_point_map(const Representation& rho) {
  const int d = algebra_dim(rho.kind());
  const int n = rho.generator_count();
  Eigen::MatrixXd m(n * d, d);
  for (int i = 0; i < n; ++i)
    m.block(i * d, 0, d, d) = adjoint_matrix(rho.image(i)) - Eigen::MatrixXd::Identity(d, d);
  return m;
}

Eigen::MatrixXd block_complex_structure(int n) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(6 * n, 6 * n);
  for (int i = 0; i < n; ++i) j.block(6 * i, 6 * i, 6, 6) = complex_structure();
  return j;
}

int complex_dim(int real_dim, const char* what) {
  if (real_dim % 2 != 0)
    throw IllConditioned(std::string(what) + ": odd real dimension for a complex subspace", 0.0);
  return real_dim / 2;
}

void require_j_invariant(const Eigen::MatrixXd& basis, const Eigen::MatrixXd& map, const Eigen::MatrixXd& j,
                         const char* what) {
  if (basis.cols() == 0) return;
  const double scale = std::max(1.0, map.norm());
  const double defect = (map * (j * basis)).norm();
  if (defect > 1e-10 * scale)
    throw IllConditioned(std::string(what) + ": kernel is not invariant under multiplication by i", 0.0);
}

}  // namespace

Subspace z0_space(const Representation& rho, const Presentation& p) {
  require_representation(rho, p);
  return kernel(stacked_fixed_point_map(rho), "Z0");
}

Subspace cocycle_space(const Representation& rho, const Presentation& p) {
  const Eigen::MatrixXd jac = relator_jacobian(rho, p);
  Subspace z = kernel(jac, "Z1");
  if (rho.kind() == GroupKind::SL2C)
    require_j_invariant(z.basis, jac, block_complex_structure(p.generator_count()), "Z1");
  return z;
}

Subspace coboundary_space(const Representation& rho, const Presentation& p) {
  require_representation(rho, p);
  const Eigen::MatrixXd m = -stacked_fixed_point_map(rho);
  Subspace b = range(m, "B1");
  const int d = algebra_dim(rho.kind());
  const int z0 = static_cast<int>(m.cols()) - b.decision.rank;
  if (b.dim() != d - z0) throw IllConditioned("B1: dim B1 != dim g - dim Z0", 0.0);
  return b;
}

Cocycle coboundary(const Representation& rho, const AlgebraVector& v) {
  Cocycle z;
  for (const auto& g : rho.images()) z.values.push_back(v - adjoint(g, v));
  return z;
}

CohomologyReport h1_basis(const Representation& rho, const Presentation& p) {
  const GroupKind kind = rho.kind();
  const int n = p.generator_count();
  const Eigen::MatrixXd jac = relator_jacobian(rho, p);
  const Subspace z0 = z0_space(rho, p);
  const Subspace z1 = cocycle_space(rho, p);
  const Subspace b1 = coboundary_space(rho, p);

  const double leak = jac.rows() ? (jac * b1.basis).norm() : 0.0;
  if (leak > 1e-9 * std::max(1.0, jac.norm())) throw IllConditioned("B1 is not contained in Z1", 0.0);

  const Eigen::MatrixXd projected = z1.basis - b1.basis * (b1.basis.transpose() * z1.basis);
  const Subspace h1 = range(projected, "H1");
  if (h1.dim() != z1.dim() - b1.dim()) throw IllConditioned("H1: dim H1 != dim Z1 - dim B1", 0.0);

  CohomologyReport r;
  r.kind = kind;
  r.dim_Z0 = z0.dim();
  r.dim_Z1 = z1.dim();
  r.dim_B1 = b1.dim();
  r.dim_H1 = h1.dim();
  r.singular_values = z1.decision.singular_values;
  r.H1 = h1.basis;
  for (Eigen::Index k = 0; k < h1.basis.cols(); ++k)
    r.basis_H1.push_back(Cocycle::from_real(kind, n, h1.basis.col(k)));
  if (kind == GroupKind::SL2C) {
    const Eigen::MatrixXd j = block_complex_structure(n);
    require_j_invariant(b1.basis, jac, j, "B1");
    r.dim_Z0_complex = complex_dim(r.dim_Z0, "Z0");
    r.dim_Z1_complex = complex_dim(r.dim_Z1, "Z1");
    r.dim_B1_complex = complex_dim(r.dim_B1, "B1");
    r.dim_H1_complex = complex_dim(r.dim_H1, "H1");
  }
  return r;
}

TraceValue trace_differential(const Representation& rho, const Cocycle& z, const Word& w) {
  const AlgebraVector v = extend_cocycle(rho, z, w);
  const GroupElement g = evaluate(rho, w);
  TraceValue t;
  t.first = (v.first * first_matrix(g)).trace();
  if (rho.kind() == GroupKind::SU2xSU2) t.second = (v.second * second_matrix(g)).trace();
  return t;
}

bool is_abelian_image(const Representation& rho, double tol) {
  if (rho.kind() == GroupKind::SU2xSU2)
    return is_abelian_image(factor(rho, 0), tol) || is_abelian_image(factor(rho, 1), tol);
  const auto& im = rho.images();
  for (std::size_t i = 0; i < im.size(); ++i)
    for (std::size_t j = i + 1; j < im.size(); ++j)
      if (distance(im[i] * im[j], im[j] * im[i]) > tol) return false;
  return true;
}

const char* to_string(Verdict v) {
  return v == Verdict::LocallyRigid ? "LocallyRigid" : "RankDeficient";
}

const char* to_string(DegenerateFlag f) {
  switch (f) {
    case DegenerateFlag::AbelianImage: return "AbelianImage";
    case DegenerateFlag::MeridianIdentity: return "MeridianIdentity";
    case DegenerateFlag::ReducibleImage: return "ReducibleImage";
  }
  return "?";
}

namespace {

// C-orthonormal basis {v_k} (so {v_k, J v_k} is R-orthonormal) of the J-invariant span of the
// orthonormal columns of h; pivots on the largest residual.
Eigen::MatrixXd complex_orthonormal_basis(const Eigen::MatrixXd& h) {
  const Eigen::MatrixXd j = block_complex_structure(static_cast<int>(h.rows() / 6));
  Eigen::MatrixXd q(h.rows(), 0), basis(h.rows(), 0);
  for (Eigen::Index step = 0; step < h.cols() / 2; ++step) {
    const Eigen::MatrixXd res = h - q * (q.transpose() * h);
    Eigen::Index best = 0;
    if (res.colwise().norm().maxCoeff(&best) < 1e-6) break;
    const Eigen::VectorXd v = res.col(best).normalized();
    q.conservativeResize(Eigen::NoChange, q.cols() + 2);
    q.col(q.cols() - 2) = v;
    q.col(q.cols() - 1) = j * v;
    basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
    basis.col(basis.cols() - 1) = v;
  }
  return basis;
}

RigidityReport single_factor_rigidity(const Representation& rho, const Presentation& p, std::string label) {
  RigidityReport r;
  r.kind = rho.kind();
  r.label = std::move(label);
  r.meridian_count = static_cast<int>(p.meridians().size());
  const CohomologyReport coh = h1_basis(rho, p);

  std::vector<Cocycle> basis;
  if (rho.kind() == GroupKind::SL2C) {
    const Eigen::MatrixXd cb = complex_orthonormal_basis(coh.H1);
    r.dim_H1 = *coh.dim_H1_complex;
    if (cb.cols() != r.dim_H1) throw IllConditioned("H1: complex basis extraction failed", 0.0);
    for (Eigen::Index k = 0; k < cb.cols(); ++k)
      basis.push_back(Cocycle::from_real(rho.kind(), rho.generator_count(), cb.col(k)));
  } else {
    basis = coh.basis_H1;
    r.dim_H1 = coh.dim_H1;
  }

  // |tr(z(w) rho(w))| <= ||z(w)|| ||rho(w)||; the rank threshold is relative to that bound.
  double scale = 0.0;
  r.trace_jacobian.resize(r.meridian_count, static_cast<Eigen::Index>(basis.size()));
  for (int m = 0; m < r.meridian_count; ++m) {
    const Word& w = p.meridians()[m].word;
    const double g = first_matrix(evaluate(rho, w)).norm();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Cocycle& z = basis[k];
      r.trace_jacobian(m, k) = trace_differential(rho, z, w).first;
      scale = std::max(scale, g * extend_cocycle(rho, z, w).norm());
    }
  }
  r.rank_decision = complex_rank(r.trace_jacobian, "trace Jacobian", scale);
  r.rank = r.rank_decision.rank;

  if (is_abelian_image(rho)) r.degenerate_flags.push_back(DegenerateFlag::AbelianImage);
  for (const auto& m : p.meridians()) {
    if (distance_to_center(evaluate(rho, m.word)) <= 1e-8) {
      r.degenerate_flags.push_back(DegenerateFlag::MeridianIdentity);
      break;
    }
  }
  if (coh.dim_Z0 > 0) r.degenerate_flags.push_back(DegenerateFlag::ReducibleImage);

  bool forced = false;
  for (auto f : r.degenerate_flags) forced |= f != DegenerateFlag::ReducibleImage;
  if (r.meridian_count != r.dim_H1)
    r.notes.push_back("MeridianCountMismatch: " + std::to_string(r.meridian_count) + " meridians, dim H1 = " +
                      std::to_string(r.dim_H1));
  const std::string field = rho.kind() == GroupKind::SL2C ? "C" : "R";
  r.notes.push_back((r.meridian_count == 1 ? "The function t_mu has " : "The functions t_mu have ") + field +
                    "-rank " + std::to_string(r.rank) + " on H1");
  r.verdict = (!forced && r.rank == r.dim_H1 && r.meridian_count == r.dim_H1) ? Verdict::LocallyRigid
                                                                              : Verdict::RankDeficient;
  return r;
}

}  // namespace

RigidityReport rigidity_test(const Representation& rho, const Presentation& p) {
  if (rho.kind() != GroupKind::SU2xSU2) return single_factor_rigidity(rho, p, "hol");
  RigidityReport r;
  r.kind = rho.kind();
  r.label = "hol";
  r.meridian_count = static_cast<int>(p.meridians().size());
  r.factors.push_back(single_factor_rigidity(factor(rho, 0), p, "hol_1"));
  r.factors.push_back(single_factor_rigidity(factor(rho, 1), p, "hol_2"));
  bool rigid = true;
  for (const auto& f : r.factors) {
    r.dim_H1 += f.dim_H1;
    r.rank += f.rank;
    rigid &= f.verdict == Verdict::LocallyRigid;
    for (auto flag : f.degenerate_flags)
      if (std::find(r.degenerate_flags.begin(), r.degenerate_flags.end(), flag) == r.degenerate_flags.end())
        r.degenerate_flags.push_back(flag);
  }
  r.verdict = rigid ? Verdict::LocallyRigid : Verdict::RankDeficient;
  return r;
}

Presentation surface_presentation(int genus) {
  if (genus < 0 || genus > 13) throw DomainError("surface genus out of range");
  std::string gens, rel;
  for (int i = 0; i < genus; ++i) {
    const char a = static_cast<char>('a' + 2 * i), b = static_cast<char>('a' + 2 * i + 1);
    gens += a;
    gens += b;
    rel += a;
    rel += b;
    rel += static_cast<char>(a - 'a' + 'A');
    rel += static_cast<char>(b - 'a' + 'A');
  }
  Presentation p(gens);
  if (genus > 0) p.add_relator(rel);
  return p;
}

AuditRecord dimension_audit(const Representation& rho, const Presentation& p,
                            const std::vector<BoundaryComponent>& boundary) {
  AuditRecord a;
  if (boundary.empty()) {
    a.skipped = true;
    a.notice = "no boundary components given; audit skipped";
    return a;
  }
  const CohomologyReport m = h1_basis(rho, p);
  a.interior_H1 = m.dim_H1;
  a.interior_Z1 = m.dim_Z1;
  int sum = 0;
  for (const auto& c : boundary) {
    if (static_cast<int>(c.generator_words.size()) != 2 * c.genus)
      throw DomainError("boundary component needs 2 * genus generator words");
    const Presentation s = surface_presentation(c.genus);
    std::vector<GroupElement> images;
    for (const auto& w : c.generator_words) images.push_back(evaluate(rho, p.parse(w)));
    const Representation rs(rho.kind(), std::move(images));
    const CohomologyReport h = h1_basis(rs, s);
    a.boundary_H1.push_back(h.dim_H1);
    sum += h.dim_H1;
    if (c.genus == 1) ++a.torus_components;
    a.euler_characteristic += 2 - 2 * c.genus;
  }
  // Both formulas are stated for three complex (SL2C) or three real (SU2) dimensions per factor.
  const double unit = algebra_dim(rho.kind()) / 3.0;
  a.checks.push_back({"dim H1(M) = 1/2 sum dim H1(boundary)", double(a.interior_H1), 0.5 * sum,
                      2 * a.interior_H1 == sum});
  const double z1 = unit * (a.torus_components + 3 - 1.5 * a.euler_characteristic);
  a.checks.push_back({"dim Z1(M) = tau + 3 - 3/2 chi(boundary)", double(a.interior_Z1), z1,
                      std::abs(a.interior_Z1 - z1) < 1e-9});
  a.pass = true;
  for (const auto& c : a.checks) a.pass &= c.pass;
  return a;
}

const char* to_string(TorusForm f) {
  switch (f) {
    case TorusForm::Ang: return "ang";
    case TorusForm::Shr: return "shr";
    case TorusForm::Tws: return "tws";
    case TorusForm::Len: return "len";
  }
  return "?";
}

Cocycle torus_period_cocycle(TorusForm form, GroupKind kind, int generators, int meridian, int longitude,
                             double alpha, double twist, double length) {
  const auto [theta, z] = sigma_fields(kind);
  Cocycle c;
  c.values.assign(generators, AlgebraVector::zero(kind));
  switch (form) {
    case TorusForm::Ang:
      c.values.at(meridian) = alpha * theta;
      c.values.at(longitude) = -twist * theta;
      break;
    case TorusForm::Shr:
      c.values.at(meridian) = alpha * z;
      c.values.at(longitude) = -twist * z;
      break;
    case TorusForm::Tws: c.values.at(longitude) = length * theta; break;
    case TorusForm::Len: c.values.at(longitude) = length * z; break;
  }
  return c;
}

}  // namespace conerig
