#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "entgap/lattice.hpp"
#include "entgap/operator.hpp"

namespace entgap {

struct ProductState {
  std::vector<Vector> locals;  // one unit vector per subsystem

  Vector full() const;  // kron of the factors
  Dims dims() const;
};

/// <psi|H|psi> for the product state, evaluated exactly.
double product_energy(const HermitianOperator& h, const ProductState& s);

/// Haar-random product state matching the operator's factorization.
ProductState random_product_state(const Dims& dims, std::uint64_t seed, std::uint64_t stream);

// ---------------------------------------------------------------------------
// Seesaw (upper bound)

struct SeesawOptions {
  std::size_t restarts = 64;
  std::uint64_t seed = 0;
  double tol = 1e-12;           // stop once a full sweep lowers the energy by less
  std::size_t max_sweeps = 5000;
};

struct SeesawRun {
  double energy = 0.0;
  ProductState state;
  std::vector<double> sweep_energies;  // energy after each sweep, starting value first
  std::size_t sweeps = 0;
};

/// One descent from `start`. Each step replaces a factor with the ground
/// vector of the effective local operator; throws if a step raises the energy
/// by more than 1e-12 (the sequence must be non-increasing).
SeesawRun seesaw_descent(const HermitianOperator& h, ProductState start, const SeesawOptions& options = {});

struct SeesawResult {
  double energy = 0.0;  // exact product energy of `state`
  ProductState state;
  std::size_t best_restart = 0;
};

/// Multi-start seesaw. Restart r starts from random_product_state(dims, seed, r).
/// Ties: lowest energy, then lowest restart index.
SeesawResult seesaw_upper(const HermitianOperator& h, const SeesawOptions& options = {});

// ---------------------------------------------------------------------------
// PPT relaxation (lower bound)

struct PptOptions {
  double gap_tol = 1e-9;         // relative duality gap
  double feasibility_tol = 1e-9; // relative primal/dual residuals
  std::size_t max_iterations = 100;
  std::size_t max_side = 64;     // larger problems are skipped by entanglement_gap
};

struct PptResult {
  double lower = 0.0;           // certified: lambda_min(H - Q+^{T_A}) for the best iterate
  double primal_objective = 0.0;  // tr[H rho]
  double dual_objective = 0.0;    // epsilon
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double duality_gap = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  Matrix rho;  // primal density matrix
  Matrix q;    // dual witness block, H - lower I - Q^{T_A} >= 0 with Q >= 0
};

/// min tr[H rho] over rho >= 0, tr rho = 1, rho^{T_A} >= 0 for a two-factor H,
/// equivalently max eps s.t. H - eps I = P + Q^{T_A}, P, Q >= 0.
/// Never throws NotConverged: the certified bound of the best iterate is
/// returned with converged = false.
PptResult ppt_lower(const HermitianOperator& h, const PptOptions& options = {});

/// Flattens H along the bipartition (part_a | rest) first.
PptResult ppt_lower(const HermitianOperator& h, std::span<const std::size_t> part_a, const PptOptions& options = {});

/// Max of ppt_lower over every contiguous cut [0, c) | [c, n).
double ppt_lower_multipartite(const HermitianOperator& h, const PptOptions& options = {});

// ---------------------------------------------------------------------------
// Gap reports

struct SepBracket {
  double lower = 0.0;
  double upper = 0.0;
  ProductState witness_state;
  bool lower_from_ppt = false;   // false: lower is the trivial bound E0
  bool ppt_converged = false;
  double ppt_primal_residual = 0.0;
  double ppt_dual_residual = 0.0;
  double ppt_duality_gap = 0.0;
};

struct GapOptions {
  SeesawOptions seesaw;
  PptOptions ppt;
  bool compute_ppt = true;
  EigOptions eig;
};

struct GapReport {
  double e0 = 0.0;
  double e_max = 0.0;
  SepBracket sep;
  double gap_lower = 0.0;
  double gap_upper = 0.0;
  double scaled_gap_lower = 0.0;
  double scaled_gap_upper = 0.0;
  double witness_offset = 0.0;  // Z = H - witness_offset I
};

/// Bracket [max(PPT, E0), seesaw] for E_sep. For more than two factors the
/// lower end is the best contiguous-cut PPT bound.
SepBracket separable_bracket(const HermitianOperator& h, double e0, const GapOptions& options = {});

GapReport entanglement_gap(const HermitianOperator& h, const GapOptions& options = {});

/// Z = H - e_sep I.
HermitianOperator build_witness(const HermitianOperator& h, double e_sep);

/// Largest squared Schmidt coefficient of a pure bipartite state.
double geometric_overlap(const Vector& psi, std::size_t d_a, std::size_t d_b);

struct LatticeSepResult {
  double per_bond = 0.0;
  ProductState global_state;
  double global_energy = 0.0;  // sum of exact bond energies of global_state
  ProductState pair_state;
};

/// Bipartite lattice: the single-bond optimum |A>|B> placed on the two
/// colours is a global minimum-energy separable state.
LatticeSepResult bipartite_lattice_sep_energy(const LatticeSpec& spec, const HermitianOperator& coupling,
                                              const SeesawOptions& options = {});

/// Seesaw on the complete graph of n sites; energy per bond.
double cluster_sep_energy(std::size_t n, const HermitianOperator& coupling, const SeesawOptions& options = {});

/// Lattice gap bracket per bond for a bipartite lattice: E0 from ED, E_sep
/// per bond from the single coupling's bracket.
struct LatticeGapReport {
  double e0_per_bond = 0.0;
  double e_max_per_bond = 0.0;
  double esep_lower_per_bond = 0.0;
  double esep_upper_per_bond = 0.0;
  double gap_lower_per_bond = 0.0;
  double gap_upper_per_bond = 0.0;
  double scaled_gap_lower = 0.0;
  double scaled_gap_upper = 0.0;
};

LatticeGapReport lattice_gap(const LatticeSpec& spec, const HermitianOperator& coupling, const GapOptions& options = {},
                             const LanczosOptions& lanczos = {});

}  // namespace entgap
