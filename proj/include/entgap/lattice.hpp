#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entgap/operator.hpp"

namespace entgap {

using Bond = std::pair<std::size_t, std::size_t>;

struct LatticeSpec {
  std::size_t n_sites = 0;
  std::size_t local_dim = 2;
  std::vector<Bond> bonds;                   // i < j
  std::string generator;                     // "star:5", "ring:8", ... or empty
  std::optional<std::vector<int>> coloring;  // two-coloring (0/1) when bipartite
};

/// Throws InvalidArgument on bad endpoints, duplicate bonds or a coloring that
/// some bond does not cross.
void validate(const LatticeSpec& spec);

LatticeSpec star_lattice(std::size_t k);      // site 0 is the centre
LatticeSpec ring_lattice(std::size_t n);
LatticeSpec chain_lattice(std::size_t n);     // open
LatticeSpec complete_lattice(std::size_t n);
LatticeSpec triangle_lattice();
LatticeSpec tetrahedron_lattice();

/// star:k, ring:N, chain:N, triangle, tetrahedron, complete:n, file:<path>.
LatticeSpec lattice_from_id(const std::string& id);

/// Two-coloring by BFS, or nullopt when an odd cycle exists.
std::optional<std::vector<int>> find_bipartition(const LatticeSpec& spec);

inline constexpr std::size_t kDefaultMaxSide = std::size_t{1} << 20;

struct AssembleOptions {
  std::size_t max_side = kDefaultMaxSide;
  std::size_t dense_cutoff = kDefaultDenseCutoff;
};

struct LatticeHamiltonian {
  LatticeSpec spec;
  HermitianOperator coupling;
  MatrixFreeOperator op;
  std::optional<HermitianOperator> dense;  // present when side <= dense_cutoff
};

/// H = sum over bonds of the coupling acting on sites (i, j).
LatticeHamiltonian assemble(const LatticeSpec& spec, const HermitianOperator& coupling,
                            const AssembleOptions& options = {});

/// Dense H regardless of the cutoff (still bounded by max_side).
HermitianOperator assemble_dense(const LatticeSpec& spec, const HermitianOperator& coupling);

/// -(k+2): the star Hamiltonian is (S_tot^2 - S_centre^2 - S_leaves^2) in disguise.
double star_ground_energy_heisenberg(std::size_t k);

/// tr[H_ij rho_ij] for every bond, in bond order.
std::vector<double> bond_energy_decomposition(const LatticeSpec& spec, const HermitianOperator& coupling,
                                              const HermitianOperator& rho);

/// Ground energy of the lattice Hamiltonian: dense eig at or below the cutoff,
/// Lanczos above it.
double lattice_ground_energy(const LatticeSpec& spec, const HermitianOperator& coupling,
                             const LanczosOptions& lanczos = {}, const AssembleOptions& options = {});

struct ChainExtrapolation {
  std::vector<std::size_t> sizes;
  std::vector<double> energy_per_site;
  double intercept = 0.0;  // a in a + b/N^2
  double slope = 0.0;      // b
};

/// Ring ground energies per site fitted to a + b/N^2 by least squares.
ChainExtrapolation extrapolate_ring_energy(const HermitianOperator& coupling,
                                           const std::vector<std::size_t>& sizes = {8, 10, 12, 14},
                                           const LanczosOptions& lanczos = {});

struct ReferenceLattice {
  std::string name;
  std::size_t coordination = 0;
  double e0_per_bond = 0.0;
  double esep_per_bond = 0.0;  // -1 bipartite, -1/2 triangle-based, -1/3 tetrahedron-based
  std::string source;
};

/// Literature Heisenberg ground energies per bond for lattices that are never
/// diagonalized here.
const std::vector<ReferenceLattice>& reference_energy_table();

}  // namespace entgap
