#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conerig/curvature.hpp"

namespace conerig {

/// Values closer than this are one eigenvalue with multiplicity; also the width of the +-1/2
/// boundary band.
inline constexpr double spectral_merge_tol = 1e-12;

struct SpectralValue {
  double value = 0.0;
  int multiplicity = 1;
};

/// Origin of a value inside (-1/2, 1/2).
struct SpectralWitness {
  long n = 0;          // Fourier mode (circle spectra)
  double a = 0.0;      // holonomy angle
  double alpha = 0.0;  // cone angle
  double lambda = 0.0; // Laplace eigenvalue (link spectra)
  double value = 0.0;
};

struct SpectrumReport {
  std::vector<SpectralValue> values;  // ascending, within [-window, window]
  double window = 0.0;
  bool gap_ok = true;                 // nothing in the open interval (-1/2, 1/2)
  double min_abs = 0.0;
  std::vector<double> boundary_values;  // values at +-1/2
  std::optional<SpectralWitness> witness;
  std::string source;

  std::vector<double> flat() const;   // values repeated by multiplicity
};

struct ConePoint {
  double alpha = 2 * 3.141592653589793;
  std::vector<double> holonomy_angles;  // one per C(a) summand, each in [0, 2 pi)
  int trivial_rank = 0;                 // number of R summands
};

/// spec D = {+-|2 pi n - a| / alpha}.
SpectrumReport circle_dirac_spectrum(double alpha, double a, double window);
/// spec B over all summands of the cone point bundle.
SpectrumReport circle_B_spectrum(const ConePoint& cp, double window);
/// +-1 with multiplicity h0_dim and +-1/2 +- sqrt(1/4 + lambda) per positive lambda.
SpectrumReport link_B_spectrum(const std::vector<std::pair<double, int>>& lambdas, int h0_dim, double window);
/// The guaranteed bound lambda_1 = 1 with h0_dim = 0.
SpectrumReport link_B_spectrum_guaranteed(double window);

/// The closed-form gap criterion for one C(a) summand (a in [0, 2 pi)).
bool circle_gap_criterion(double alpha, double a);

enum class LinkKind { Smooth, Bigon, Triangle };

/// S^2(alpha, beta, gamma) or S^2(alpha, alpha); angles in (0, 2 pi].
class LinkSurface {
public:
  static LinkSurface smooth();
  static LinkSurface bigon(double alpha);
  static LinkSurface triangle(double alpha, double beta, double gamma);

  LinkKind kind() const { return kind_; }
  const std::vector<double>& angles() const { return angles_; }
  /// Whether the angles halve to those of a spherical triangle. Informational.
  bool spherical_triangle_realizable() const;

private:
  LinkSurface(LinkKind k, std::vector<double> a);
  LinkKind kind_;
  std::vector<double> angles_;
};

enum class BundleContext { SphericalE, HyperbolicE, EuclideanEtrans };
const char* to_string(BundleContext c);
BundleContext bundle_context(Curvature k);
/// Number of copies of F in the restriction of the bundle to the link.
int f_copies(BundleContext c);

std::vector<ConePoint> link_bundle_decomposition(const LinkSurface& link, BundleContext context);

struct SingularEdge {
  std::string id;
  double angle = 0.0;
};

struct SingularVertex {
  std::vector<std::string> edges;  // three incident edge ids
};

struct SingularGraph {
  std::vector<SingularEdge> edges;
  std::vector<SingularVertex> vertices;
};

struct SurfaceCheck {
  std::string location;  // "edge <id>" or "vertex <k>"
  int cone_point = 0;
  ConePoint point;
  SpectrumReport report;
};

struct LinkCheck {
  std::string location;
  bool applied = false;  // only when every surface check at this location passed
  SpectrumReport report;
};

struct AdmissibilityVerdict {
  bool admissible = true;
  bool angles_at_most_pi = true;
  BundleContext context = BundleContext::HyperbolicE;
  std::vector<SurfaceCheck> surface_checks;
  std::vector<LinkCheck> link_checks;
  std::optional<std::string> witness_location;
  std::optional<SpectralWitness> witness;
  std::vector<std::string> notes;
};

AdmissibilityVerdict cone_admissibility_verdict(const SingularGraph& graph, Curvature k);

}  // namespace conerig
