#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "conerig/error.hpp"
#include "conerig/spectral.hpp"

namespace conerig {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

struct Raw {
  double value;
  SpectralWitness origin;
};

// Modes n with |2 pi n - a| / alpha <= reach, plus the two nearest to a.
std::pair<long, long> mode_range(double alpha, double a, double reach) {
  const long lo = static_cast<long>(std::floor((a - reach * alpha) / two_pi));
  const long hi = static_cast<long>(std::ceil((a + reach * alpha) / two_pi));
  const long near = static_cast<long>(std::floor(a / two_pi));
  return {std::min(lo, near), std::max(hi, near + 1)};
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("cone angle must be positive");
}

// Values of -shift +- |2 pi n - a| / alpha; zero modes are emitted once.
void emit_complex(std::vector<Raw>& out, double alpha, double a, double shift, double reach) {
  const auto [lo, hi] = mode_range(alpha, a, reach);
  for (long n = lo; n <= hi; ++n) {
    const double v = std::abs(two_pi * static_cast<double>(n) - a) / alpha;
    out.push_back({shift + v, {n, a, alpha, 0.0, shift + v}});
    if (v != 0.0) out.push_back({shift - v, {n, a, alpha, 0.0, shift - v}});
  }
}

SpectrumReport finish(std::vector<Raw> raw, double window, std::string source) {
  SpectrumReport r;
  r.window = window;
  r.source = std::move(source);
  std::sort(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) { return x.value < y.value; });
  r.min_abs = std::numeric_limits<double>::infinity();
  const double inner = 0.5 - spectral_merge_tol;
  for (const Raw& x : raw) {
    const double m = std::abs(x.value);
    r.min_abs = std::min(r.min_abs, m);
    if (m < inner) {
      if (r.gap_ok || m < std::abs(r.witness->value)) r.witness = x.origin;
      r.gap_ok = false;
    } else if (std::abs(m - 0.5) <= spectral_merge_tol) {
      const double b = std::copysign(0.5, x.value);
      if (r.boundary_values.empty() || r.boundary_values.back() != b) r.boundary_values.push_back(b);
    }
    if (m > window + spectral_merge_tol) continue;
    if (!r.values.empty() && x.value - r.values.back().value <= spectral_merge_tol)
      ++r.values.back().multiplicity;
    else
      r.values.push_back({x.value, 1});
  }
  std::sort(r.boundary_values.begin(), r.boundary_values.end());
  r.boundary_values.erase(std::unique(r.boundary_values.begin(), r.boundary_values.end()), r.boundary_values.end());
  return r;
}

}  // namespace

std::vector<double> SpectrumReport::flat() const {
  std::vector<double> out;
  for (const auto& v : values) out.insert(out.end(), v.multiplicity, v.value);
  return out;
}

SpectrumReport circle_dirac_spectrum(double alpha, double a, double window) {
  check_alpha(alpha);
  if (!(window > 0.0)) throw DomainError("window must be positive");
  std::vector<Raw> raw;
  emit_complex(raw, alpha, a, 0.0, std::max(window, 1.0));
  return finish(std::move(raw), window, "+-|2 pi n - a| / alpha");
}

SpectrumReport circle_B_spectrum(const ConePoint& cp, double window) {
  check_alpha(cp.alpha);
  if (!(window > 0.0)) throw DomainError("window must be positive");
  if (cp.trivial_rank < 0) throw DomainError("trivial rank must be nonnegative");
  const double reach = std::max(window, 1.0) + 0.5;
  std::vector<Raw> raw;
  for (double a : cp.holonomy_angles) {
    if (!(a >= 0.0 && a < two_pi)) throw DomainError("holonomy angle outside [0, 2 pi)");
    emit_complex(raw, cp.alpha, a, -0.5, reach);
  }
  for (int copy = 0; copy < cp.trivial_rank; ++copy) {
    const auto [lo, hi] = mode_range(cp.alpha, 0.0, reach);
    for (long n = std::min(lo, -hi); n <= std::max(hi, -lo); ++n) {
      const double v = -0.5 + two_pi * static_cast<double>(n) / cp.alpha;
      raw.push_back({v, {n, 0.0, cp.alpha, 0.0, v}});
    }
  }
  return finish(std::move(raw), window, "-1/2 +- |2 pi n - a| / alpha; trivial: -1/2 + 2 pi n / alpha");
}

SpectrumReport link_B_spectrum(const std::vector<std::pair<double, int>>& lambdas, int h0_dim, double window) {
  if (!(window > 0.0)) throw DomainError("window must be positive");
  if (h0_dim < 0) throw DomainError("h0_dim must be nonnegative");
  std::vector<Raw> raw;
  for (int k = 0; k < h0_dim; ++k) {
    raw.push_back({1.0, {0, 0.0, 0.0, 0.0, 1.0}});
    raw.push_back({-1.0, {0, 0.0, 0.0, 0.0, -1.0}});
  }
  for (const auto& [lambda, mult] : lambdas) {
    if (!(lambda >= 0.0)) throw DomainError("negative Laplace eigenvalue");
    if (mult < 0) throw DomainError("negative multiplicity");
    if (lambda == 0.0) continue;
    const double s = std::sqrt(0.25 + lambda);
    for (double v : {-0.5 - s, -0.5 + s, 0.5 - s, 0.5 + s})
      for (int k = 0; k < mult; ++k) raw.push_back({v, {0, 0.0, 0.0, lambda, v}});
  }
  return finish(std::move(raw), window, "{-1, 1} + {+-1/2 +- sqrt(1/4 + lambda)}");
}

SpectrumReport link_B_spectrum_guaranteed(double window) {
  return link_B_spectrum({{1.0, 1}}, 0, window);
}

bool circle_gap_criterion(double alpha, double a) {
  // The boundary band of the spectra, carried over to angles: -1/2 + a / alpha >= 1/2 - tol.
  const double tol = spectral_merge_tol * alpha;
  return (a == 0.0 && alpha <= two_pi + tol) || (alpha - tol <= a && a <= two_pi - alpha + tol);
}

LinkSurface::LinkSurface(LinkKind k, std::vector<double> a) : kind_(k), angles_(std::move(a)) {
  for (double x : angles_)
    if (!(x > 0.0 && x <= two_pi)) throw DomainError("link cone angle outside (0, 2 pi]");
}

LinkSurface LinkSurface::smooth() { return LinkSurface(LinkKind::Smooth, {}); }
LinkSurface LinkSurface::bigon(double alpha) { return LinkSurface(LinkKind::Bigon, {alpha, alpha}); }
LinkSurface LinkSurface::triangle(double alpha, double beta, double gamma) {
  return LinkSurface(LinkKind::Triangle, {alpha, beta, gamma});
}

bool LinkSurface::spherical_triangle_realizable() const {
  if (kind_ != LinkKind::Triangle) return true;
  const double a = angles_[0] / 2, b = angles_[1] / 2, c = angles_[2] / 2;
  const double pi = std::numbers::pi;
  return a + b + c > pi && a + b - c < pi && a - b + c < pi && -a + b + c < pi;
}

const char* to_string(BundleContext c) {
  switch (c) {
    case BundleContext::SphericalE: return "SphericalE";
    case BundleContext::HyperbolicE: return "HyperbolicE";
    case BundleContext::EuclideanEtrans: return "EuclideanEtrans";
  }
  return "?";
}

BundleContext bundle_context(Curvature k) {
  switch (k.value()) {
    case 1: return BundleContext::SphericalE;
    case -1: return BundleContext::HyperbolicE;
    default: return BundleContext::EuclideanEtrans;
  }
}

int f_copies(BundleContext c) { return c == BundleContext::EuclideanEtrans ? 1 : 2; }

std::vector<ConePoint> link_bundle_decomposition(const LinkSurface& link, BundleContext context) {
  const int copies = f_copies(context);
  std::vector<ConePoint> out;
  for (double alpha : link.angles()) {
    ConePoint cp;
    cp.alpha = alpha;
    cp.holonomy_angles.assign(copies, std::fmod(alpha, two_pi));
    cp.trivial_rank = copies;
    out.push_back(cp);
  }
  return out;
}

AdmissibilityVerdict cone_admissibility_verdict(const SingularGraph& graph, Curvature k) {
  AdmissibilityVerdict v;
  v.context = bundle_context(k);
  const int copies = f_copies(v.context);

  auto angle_of = [&](const std::string& id) {
    for (const auto& e : graph.edges)
      if (e.id == id) return e.angle;
    throw DomainError("vertex refers to unknown edge '" + id + "'");
  };

  struct Site {
    std::string location;
    LinkSurface link;
    int h0_per_copy;
  };
  std::vector<Site> sites;
  for (const auto& e : graph.edges) sites.push_back({"edge " + e.id, LinkSurface::bigon(e.angle), 1});
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    const auto& ids = graph.vertices[i].edges;
    if (ids.size() != 3) throw DomainError("singular vertex is not trivalent");
    sites.push_back({"vertex " + std::to_string(i),
                     LinkSurface::triangle(angle_of(ids[0]), angle_of(ids[1]), angle_of(ids[2])), 0});
  }

  for (const auto& site : sites) {
    for (double a : site.link.angles()) v.angles_at_most_pi &= a <= std::numbers::pi;
    if (!site.link.spherical_triangle_realizable())
      v.notes.push_back(site.location + ": angles do not halve to a spherical triangle");
    const auto points = link_bundle_decomposition(site.link, v.context);
    bool surface_ok = true;
    for (std::size_t j = 0; j < points.size(); ++j) {
      SurfaceCheck c{site.location, static_cast<int>(j), points[j], circle_B_spectrum(points[j], 4.0)};
      if (!c.report.gap_ok) {
        surface_ok = false;
        if (!v.witness) {
          v.witness_location = site.location + ", cone point " + std::to_string(j);
          v.witness = c.report.witness;
        }
      }
      v.surface_checks.push_back(std::move(c));
    }
    LinkCheck lc;
    lc.location = site.location;
    lc.applied = surface_ok;
    v.admissible &= surface_ok;
    if (surface_ok) {
      // lambda_1 >= 1 holds for cone-admissible links; use that bound.
      lc.report = link_B_spectrum({{1.0, copies}}, site.h0_per_copy * copies, 4.0);
      if (!lc.report.gap_ok) {
        v.admissible = false;
        if (!v.witness) {
          v.witness_location = site.location;
          v.witness = lc.report.witness;
        }
      }
    }
    v.link_checks.push_back(std::move(lc));
  }
  if (v.angles_at_most_pi && !v.admissible)
    v.notes.push_back("inadmissible although every cone angle is at most pi");
  return v;
}

}  // namespace conerig
