#include "entgap/separability.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "entgap/error.hpp"
#include "entgap/parallel.hpp"
#include "entgap/random.hpp"

namespace entgap {

namespace {

Vector kron_range(const std::vector<Vector>& locals, std::size_t begin, std::size_t end) {
  Vector out = Vector::Ones(1);
  for (std::size_t k = begin; k < end; ++k) out = kron(out, locals[k]);
  return out;
}

// <others| H |others> on factor k: columns of P are the product vectors with
// factor k replaced by each basis vector.
Matrix effective_local(const HermitianOperator& h, const std::vector<Vector>& locals, std::size_t k) {
  const Vector left = kron_range(locals, 0, k);
  const Vector right = kron_range(locals, k + 1, locals.size());
  const auto d = static_cast<Eigen::Index>(h.dims()[k]);
  Matrix p(static_cast<Eigen::Index>(h.side()), d);
  for (Eigen::Index a = 0; a < d; ++a) {
    Vector e = Vector::Zero(d);
    e(a) = 1.0;
    p.col(a) = kron(kron(left, e), right);
  }
  const Matrix hp = h.matrix() * p;
  const Matrix eff = p.adjoint() * hp;
  return 0.5 * (eff + eff.adjoint());
}

}  // namespace

Vector ProductState::full() const { return kron_range(locals, 0, locals.size()); }

Dims ProductState::dims() const {
  Dims d;
  for (const auto& v : locals) d.push_back(static_cast<std::size_t>(v.size()));
  return d;
}

double product_energy(const HermitianOperator& h, const ProductState& s) {
  require(s.dims() == h.dims(), "product state does not match the operator factorization",
          ErrorCode::DimensionMismatch);
  const Vector psi = s.full();
  return h.expectation(psi) / psi.squaredNorm();
}

ProductState random_product_state(const Dims& dims, std::uint64_t seed, std::uint64_t stream) {
  auto rng = make_rng(seed, stream);
  ProductState s;
  for (auto d : dims) s.locals.push_back(haar_vector(d, rng));
  return s;
}

SeesawRun seesaw_descent(const HermitianOperator& h, ProductState start, const SeesawOptions& options) {
  require(h.num_subsystems() >= 2, "seesaw needs an operator with at least two factors");
  SeesawRun run;
  run.state = std::move(start);
  for (auto& v : run.state.locals) v /= v.norm();
  double energy = product_energy(h, run.state);
  run.sweep_energies.push_back(energy);
  const std::size_t nf = h.num_subsystems();
  for (std::size_t sweep = 0; sweep < options.max_sweeps; ++sweep) {
    const double before = energy;
    for (std::size_t k = 0; k < nf; ++k) {
      Eigen::SelfAdjointEigenSolver<Matrix> es(effective_local(h, run.state.locals, k));
      const double e_new = es.eigenvalues()(0);
      require(e_new <= energy + 1e-12 * (1.0 + std::abs(energy)),
              "seesaw step raised the energy from " + std::to_string(energy) + " to " + std::to_string(e_new),
              ErrorCode::NotConverged);
      // Degenerate ground space: keep as much of the previous factor as possible.
      Eigen::Index g = 1;
      while (g < es.eigenvalues().size() && es.eigenvalues()(g) - e_new <= 1e-10) ++g;
      Vector next = es.eigenvectors().col(0);
      if (g > 1) {
        const Matrix vg = es.eigenvectors().leftCols(g);
        const Vector proj = vg * (vg.adjoint() * run.state.locals[k]);
        if (proj.norm() > 1e-8) next = proj;
      }
      run.state.locals[k] = next / next.norm();
      energy = std::min(energy, e_new);
    }
    ++run.sweeps;
    run.sweep_energies.push_back(energy);
    if (before - energy < options.tol) break;
  }
  run.energy = product_energy(h, run.state);
  return run;
}

SeesawResult seesaw_upper(const HermitianOperator& h, const SeesawOptions& options) {
  require(options.restarts >= 1, "seesaw_upper: restarts must be >= 1");
  const auto runs = parallel_map(options.restarts, [&](std::size_t r) {
    return seesaw_descent(h, random_product_state(h.dims(), options.seed, r), options);
  });
  SeesawResult best;
  best.energy = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < runs.size(); ++r)
    if (runs[r].energy < best.energy) {
      best.energy = runs[r].energy;
      best.state = runs[r].state;
      best.best_restart = r;
    }
  return best;
}

SepBracket separable_bracket(const HermitianOperator& h, double e0, const GapOptions& options) {
  SepBracket sep;
  const auto ss = seesaw_upper(h, options.seesaw);
  sep.upper = ss.energy;
  sep.witness_state = ss.state;
  sep.lower = e0;
  if (options.compute_ppt && h.side() <= options.ppt.max_side) {
    if (h.num_subsystems() == 2) {
      const auto ppt = ppt_lower(h, options.ppt);
      sep.ppt_converged = ppt.converged;
      sep.ppt_primal_residual = ppt.primal_residual;
      sep.ppt_dual_residual = ppt.dual_residual;
      sep.ppt_duality_gap = ppt.duality_gap;
      if (ppt.lower > sep.lower) {
        sep.lower = ppt.lower;
        sep.lower_from_ppt = true;
      }
    } else {
      const double lo = ppt_lower_multipartite(h, options.ppt);
      sep.ppt_converged = true;
      if (lo > sep.lower) {
        sep.lower = lo;
        sep.lower_from_ppt = true;
      }
    }
  }
  return sep;
}

GapReport entanglement_gap(const HermitianOperator& h, const GapOptions& options) {
  const auto spec = eig(h, options.eig);
  GapReport r;
  r.e0 = spec.ground_energy();
  r.e_max = spec.max_energy();
  r.sep = separable_bracket(h, r.e0, options);
  r.gap_lower = r.sep.lower - r.e0;
  r.gap_upper = r.sep.upper - r.e0;
  const double etot = r.e_max - r.e0;
  if (etot > 0.0) {
    r.scaled_gap_lower = r.gap_lower / etot;
    r.scaled_gap_upper = r.gap_upper / etot;
  }
  r.witness_offset = r.sep.upper;
  return r;
}

HermitianOperator build_witness(const HermitianOperator& h, double e_sep) { return h.shifted(-e_sep); }

double geometric_overlap(const Vector& psi, std::size_t d_a, std::size_t d_b) {
  require(static_cast<std::size_t>(psi.size()) == d_a * d_b, "geometric_overlap: state size does not match dims",
          ErrorCode::DimensionMismatch);
  // Row-major reshape: amplitude of |i j> sits at index i*d_b + j.
  Matrix a(static_cast<Eigen::Index>(d_a), static_cast<Eigen::Index>(d_b));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = psi(i * a.cols() + j);
  Eigen::JacobiSVD<Matrix> svd(a);
  const double s = svd.singularValues()(0);
  return s * s / psi.squaredNorm();
}

LatticeSepResult bipartite_lattice_sep_energy(const LatticeSpec& spec, const HermitianOperator& coupling,
                                              const SeesawOptions& options) {
  validate(spec);
  require(spec.coloring.has_value(), "lattice has no bipartition (odd cycle or no coloring supplied)");
  require(coupling.num_subsystems() == 2 && coupling.dims()[0] == spec.local_dim &&
              coupling.dims()[1] == spec.local_dim,
          "coupling does not match the lattice local dimension", ErrorCode::DimensionMismatch);
  const auto pair = seesaw_upper(coupling, options);
  LatticeSepResult out;
  out.pair_state = pair.state;
  out.per_bond = pair.energy;
  // Bonds listing the colour-1 site first see |B>|A>; a coupling that is not
  // swap-symmetric can differ there, so every bond is evaluated exactly.
  for (std::size_t s = 0; s < spec.n_sites; ++s)
    out.global_state.locals.push_back(pair.state.locals[(*spec.coloring)[s] == 0 ? 0 : 1]);
  out.global_energy = 0.0;
  for (const auto& [i, j] : spec.bonds) {
    ProductState ps{{out.global_state.locals[i], out.global_state.locals[j]}};
    out.global_energy += product_energy(coupling, ps);
  }
  return out;
}

double cluster_sep_energy(std::size_t n, const HermitianOperator& coupling, const SeesawOptions& options) {
  require(n >= 2, "cluster_sep_energy: n must be >= 2");
  require(coupling.num_subsystems() == 2 && coupling.dims()[0] == coupling.dims()[1],
          "cluster_sep_energy: coupling must be two-site with equal local dimensions", ErrorCode::DimensionMismatch);
  auto spec = complete_lattice(n);
  spec.local_dim = coupling.dims()[0];
  spec.coloring.reset();
  const auto h = assemble_dense(spec, coupling);
  require(h.side() <= kDefaultDenseCutoff, "cluster_sep_energy: cluster too large", ErrorCode::DimensionMismatch);
  return seesaw_upper(h, options).energy / static_cast<double>(spec.bonds.size());
}

LatticeGapReport lattice_gap(const LatticeSpec& spec, const HermitianOperator& coupling, const GapOptions& options,
                             const LanczosOptions& lanczos) {
  validate(spec);
  const double nb = static_cast<double>(spec.bonds.size());
  LatticeGapReport r;
  const double e0 = lattice_ground_energy(spec, coupling, lanczos);
  const double emax = -lattice_ground_energy(spec, coupling * -1.0, lanczos);
  r.e0_per_bond = e0 / nb;
  r.e_max_per_bond = emax / nb;

  // Each bond's reduced state of a separable state is separable, so n_bonds
  // times the single-coupling lower bound is valid on any graph.
  const auto pair = separable_bracket(coupling, eig(coupling).ground_energy(), options);
  r.esep_lower_per_bond = std::max(pair.lower, r.e0_per_bond);
  if (spec.coloring) {
    r.esep_upper_per_bond = bipartite_lattice_sep_energy(spec, coupling, options.seesaw).global_energy / nb;
  } else {
    const auto h = assemble_dense(spec, coupling);
    r.esep_upper_per_bond = seesaw_upper(h, options.seesaw).energy / nb;
  }
  r.gap_lower_per_bond = r.esep_lower_per_bond - r.e0_per_bond;
  r.gap_upper_per_bond = r.esep_upper_per_bond - r.e0_per_bond;
  const double etot = r.e_max_per_bond - r.e0_per_bond;
  if (etot > 0.0) {
    r.scaled_gap_lower = r.gap_lower_per_bond / etot;
    r.scaled_gap_upper = r.gap_upper_per_bond / etot;
  }
  return r;
}

}  // namespace entgap
