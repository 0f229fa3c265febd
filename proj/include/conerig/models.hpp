#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "conerig/word.hpp"

namespace conerig {

struct Model {
  Presentation presentation;
  Representation representation;
};

/// <a, b | abAB> with a the longitude and b the meridian of the given cone angle; diagonal
/// holonomy diag(e^{l_exp}), diag(e^{m_exp}).
Model diagonal_torus_sl2c(std::complex<double> l_exp, std::complex<double> m_exp, double cone_angle);

/// Coaxial SU(2)xSU(2) torus <a, b | abAB>: meridian b -> (diag e^{i alpha/2}, diag e^{i alpha/2}),
/// longitude a -> (diag e^{i t1}, diag e^{i t2}).
Model coaxial_torus_su2pair(double cone_angle, double t1, double t2);

/// <a, b, c | abc>, three meridians of cone angle alpha, elliptic SU(2) images embedded in SL2C.
Model pants_sl2c(double alpha);

/// Genus-2 surface group <a, b, c, d | abABcdCD> with an SU(2) representation: a, b random,
/// c, d solved from [c, d] = [b, a].
Model genus2_su2(std::uint32_t seed);

/// Relator a w B w^-1 of the two-bridge knot b(p, q) (q odd), generators a, b.
std::string two_bridge_relator(int p, int q);
/// Longitude w w~ a^{-2 sigma}, w~ the reversed word, sigma the exponent sum of w.
std::string two_bridge_longitude(int p, int q);

/// Riley representation a -> [[M, 1], [0, 1/M]], b -> [[M, 0], [u, 1/M]], M = e^{i alpha/2},
/// continued in alpha from the parabolic root u0 by Newton steps.
struct RileyResult {
  Model model;
  std::complex<double> u;
  double residual = 0.0;
};
RileyResult riley_cone_representation(int p, int q, double alpha, std::complex<double> u0, int steps = 200);

/// Root of the parabolic Riley equation closest to the seed (Newton).
std::complex<double> riley_parabolic_root(int p, int q, std::complex<double> seed);

}  // namespace conerig
