#pragma once

// Transverse-field XY chain H = sum_i (1+g)/2 X_i X_{i+1} + (1-g)/2 Y_i Y_{i+1} + l Z_i,
// i.e. xy_pair(g, l) on every bond of a ring.
//
// Only the first quadrant g, l >= 0 needs computing: a pi/2 rotation about z
// on every site swaps XX and YY (g -> -g), and a pi rotation about x flips Z
// and Y (l -> -l). Energies use |g|, |l|; states are rotated back.

#include <cstdint>
#include <vector>

#include "entgap/separability.hpp"

namespace entgap {

struct XYSeparable {
  double energy = 0.0;
  ProductState state;
};

/// Closed-form minimum product energy of xy_pair(g, l) and an optimal |A>|B>.
XYSeparable xy_sep_energy(double gamma, double lambda);

/// <A|<B| xy_pair |A>|B> for |j> = cos(th_j)|up> + e^{i ph_j} sin(th_j)|down>.
double xy_angle_energy(double gamma, double lambda, double th_a, double ph_a, double th_b, double ph_b);

/// Multi-start exact coordinate descent over the four angles.
double xy_sep_energy_numeric(double gamma, double lambda, std::size_t starts = 16, std::uint64_t seed = 1);

struct XYExtrema {
  double e0_site = 0.0;
  double e_max_site = 0.0;
};

/// Infinite chain: e0 = -(1/pi) int_0^pi sqrt((cos k + l)^2 + g^2 sin^2 k) dk,
/// e_max = -e0.
XYExtrema xy_chain_extrema_thermodynamic(double gamma, double lambda);

/// Ring of even N by Jordan-Wigner, both fermion-parity sectors.
XYExtrema xy_chain_extrema_ring(double gamma, double lambda, std::size_t n);

struct XYPoint {
  double gamma = 0.0;
  double lambda = 0.0;
  double e_sep_bond = 0.0;
  double e0_site = 0.0;
  double e_max_site = 0.0;
  double gap_bond = 0.0;
  double scaled_gap = 0.0;
};

XYPoint xy_point(double gamma, double lambda);

/// Row-major over (gamma, lambda): index = ig * lambdas.size() + il.
std::vector<XYPoint> xy_gap_surface(const std::vector<double>& gammas, const std::vector<double>& lambdas);

}  // namespace entgap
