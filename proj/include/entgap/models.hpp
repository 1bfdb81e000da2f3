#pragma once

// Named Hamiltonians. Two-site couplings use |0> = spin up, sigma_z = diag(1, -1).

#include <string>
#include <vector>

#include "entgap/operator.hpp"

namespace entgap {

/// Projector families are refused above this local dimension.
inline constexpr std::size_t kMaxProjectorDim = 10;

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// sigma_A . sigma_B, spectrum {-3, 1, 1, 1}.
HermitianOperator heisenberg_pair();

/// (1+g)/2 XX + (1-g)/2 YY + (lambda/2)(Z1 + Z2). Summed over the bonds of a
/// ring this gives a field lambda per site.
HermitianOperator xy_pair(double gamma, double lambda);

/// XX + YY + delta ZZ.
HermitianOperator xxz_pair(double delta);

/// |phi_d> = sum_i |ii> / sqrt(d).
Vector max_entangled_state(std::size_t d);

/// I - |phi_d><phi_d|.
HermitianOperator max_entangled_projector_hamiltonian(std::size_t d);

/// (I + SWAP)/2.
HermitianOperator symmetric_projector_hamiltonian(std::size_t d);

/// (I - SWAP)/2.
HermitianOperator antisymmetric_projector(std::size_t d);

/// Projector onto a completely entangled subspace of dimension (d-1)^2:
/// orthocomplement of span{v_t (x) v_t}, v_t = sum_i t^i |i>.
HermitianOperator ces_projector(std::size_t d);

/// I - ces_projector(d): the CES is the ground manifold.
HermitianOperator ces_hamiltonian(std::size_t d);

/// 2(|00><00|+|11><11|+|22><22|) + |02><02| + |10><10| + |21><21| - 3|psi+><psi+|.
HermitianOperator choi_hamiltonian();

/// The five product vectors of the 3x3 "Tiles" unextendable product basis.
std::vector<Vector> tiles_upb();

/// Projector onto the span of the named UPB ("tiles").
HermitianOperator upb_hamiltonian(const std::string& basis = "tiles");

enum class CouplingKind { Heisenberg, XY, XXZ, Custom };

struct CouplingSpec {
  CouplingKind kind = CouplingKind::Heisenberg;
  double gamma = 0.0;
  double lambda = 0.0;
  double delta = 1.0;
  std::vector<HermitianOperator> custom;  // exactly one two-site operator when kind == Custom
};

HermitianOperator coupling(const CouplingSpec& spec);

/// Model identifiers: heisenberg, xy:g:l, xxz:delta, maxent:d, symproj:d,
/// ces:d, choi, upb:tiles, file:<path.json>.
HermitianOperator model_from_id(const std::string& id);

}  // namespace entgap
