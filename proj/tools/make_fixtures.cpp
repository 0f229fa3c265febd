// Regenerates the bundled manifests under fixtures/ (or the directory given as argv[1]).
#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>

#include "conerig/manifest.hpp"
#include "conerig/models.hpp"

using namespace conerig;

namespace {

constexpr double pi = std::numbers::pi;

Manifest from_model(const Model& model, int kappa, const std::string& generators) {
  Manifest m;
  m.curvature = Curvature(kappa);
  m.group = model.representation.kind();
  m.generators = generators;
  m.relators = {};
  for (const Word& r : model.presentation.relators()) m.relators.push_back(model.presentation.format(r));
  for (const Meridian& mu : model.presentation.meridians())
    m.meridians.push_back({model.presentation.format(mu.word), mu.edge_id, mu.cone_angle});
  m.holonomy = model.representation.images();
  return m;
}

void save(const Manifest& m, const std::filesystem::path& dir, const std::string& name) {
  const Manifest checked = parse_manifest(manifest_to_json(m));
  const double residual = relator_residual(checked.representation(), checked.presentation());
  write_manifest(m, (dir / name).string());
  std::cout << name << ": relator residual " << residual << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);

  Manifest torus = from_model(
      diagonal_torus_sl2c({0.3, 0.7}, {0.0, pi / 4}, pi / 2), -1, "ab");
  torus.singular_graph = SingularGraph{{{"e0", pi / 2}}, {}};
  save(torus, dir, "torus.json");

  Manifest pants = from_model(pants_sl2c(3 * pi / 4), -1, "abc");
  pants.singular_graph = SingularGraph{{{"e1", 3 * pi / 4}, {"e2", 3 * pi / 4}, {"e3", 3 * pi / 4}},
                                       {{{"e1", "e2", "e3"}}}};
  save(pants, dir, "pants.json");

  Manifest sphere = from_model(coaxial_torus_su2pair(pi / 2, 0.9, 0.4), 1, "ab");
  sphere.singular_graph = SingularGraph{{{"e0", pi / 2}}, {}};
  save(sphere, dir, "su2pair_torus.json");

  save(from_model(genus2_su2(7), 0, "abcd"), dir, "genus2_su2.json");

  const std::complex<double> u0 = riley_parabolic_root(7, 3, {-0.2, 1.3});
  const RileyResult knot = riley_cone_representation(7, 3, 2 * pi / 3, u0);
  Manifest k52 = from_model(knot.model, -1, "ab");
  k52.boundary = std::vector<BoundaryComponent>{{1, {"a", two_bridge_longitude(7, 3)}}};
  k52.singular_graph = SingularGraph{{{"K", 2 * pi / 3}}, {}};
  save(k52, dir, "knot52_cone.json");
  return 0;
}
