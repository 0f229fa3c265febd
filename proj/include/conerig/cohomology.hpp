#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "conerig/rank.hpp"
#include "conerig/word.hpp"

namespace conerig {

/// Real dimensions; the *_complex fields are set for SL2C only.
struct CohomologyReport {
  GroupKind kind = GroupKind::SL2C;
  int dim_Z0 = 0, dim_Z1 = 0, dim_B1 = 0, dim_H1 = 0;
  std::optional<int> dim_Z0_complex, dim_Z1_complex, dim_B1_complex, dim_H1_complex;
  Eigen::VectorXd singular_values;  // of the relator Jacobian
  std::vector<Cocycle> basis_H1;    // orthonormal, orthogonal to B^1
  Eigen::MatrixXd H1;               // the same basis as columns of real coordinates
};

/// Fixed vectors of Ad(rho), as columns in algebra coordinates.
Subspace z0_space(const Representation& rho, const Presentation& p);
/// Kernel of the relator Jacobian, as columns of cocycle coordinates.
Subspace cocycle_space(const Representation& rho, const Presentation& p);
/// Image of v -> (v - Ad rho(g_i) v)_i.
Subspace coboundary_space(const Representation& rho, const Presentation& p);
CohomologyReport h1_basis(const Representation& rho, const Presentation& p);

/// The cocycle (v - Ad rho(g_i) v)_i.
Cocycle coboundary(const Representation& rho, const AlgebraVector& v);

/// tr(z(w) rho(w)) per factor; `second` is zero unless SU2xSU2. SU(2) values are real.
struct TraceValue {
  std::complex<double> first;
  std::complex<double> second;
};
TraceValue trace_differential(const Representation& rho, const Cocycle& z, const Word& w);

/// Images commute pairwise within tol (per factor: flagged when either factor is abelian).
bool is_abelian_image(const Representation& rho, double tol = 1e-8);

enum class Verdict { LocallyRigid, RankDeficient };
enum class DegenerateFlag { AbelianImage, MeridianIdentity, ReducibleImage };
const char* to_string(Verdict v);
const char* to_string(DegenerateFlag f);

struct RigidityReport {
  GroupKind kind = GroupKind::SL2C;
  std::string label;              // "hol", or "hol_1"/"hol_2" for SU2xSU2 factors
  int meridian_count = 0;
  int dim_H1 = 0;                 // complex for SL2C, real otherwise
  Eigen::MatrixXcd trace_jacobian;  // meridians x H^1 basis
  RankDecision rank_decision;
  int rank = 0;
  Verdict verdict = Verdict::RankDeficient;
  std::vector<DegenerateFlag> degenerate_flags;
  std::vector<std::string> notes;
  std::vector<RigidityReport> factors;  // SU2xSU2 only
};

/// Meridian rank test. AbelianImage and MeridianIdentity force RankDeficient; ReducibleImage is
/// advisory.
RigidityReport rigidity_test(const Representation& rho, const Presentation& p);

struct BoundaryComponent {
  int genus = 1;
  std::vector<std::string> generator_words;  // a_1, b_1, ..., a_g, b_g in the ambient group
};

struct IdentityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct AuditRecord {
  bool skipped = false;
  std::string notice;
  int torus_components = 0;
  int euler_characteristic = 0;
  int interior_H1 = 0;               // real
  int interior_Z1 = 0;               // real
  std::vector<int> boundary_H1;      // real, per component
  std::vector<IdentityCheck> checks;
  bool pass = false;
};

/// Presentation <a_1, b_1, ... | [a_1, b_1] ... [a_g, b_g]> of a closed orientable surface.
Presentation surface_presentation(int genus);

AuditRecord dimension_audit(const Representation& rho, const Presentation& p,
                            const std::vector<BoundaryComponent>& boundary);

enum class TorusForm { Ang, Shr, Tws, Len };
const char* to_string(TorusForm f);

/// Period cocycles of the four deformation forms on a boundary torus whose meridian acts as
/// (theta + alpha, z) and longitude as (theta - twist, z + length); generator order as given.
Cocycle torus_period_cocycle(TorusForm form, GroupKind kind, int generators, int meridian,
                             int longitude, double alpha, double twist, double length);

}  // namespace conerig
