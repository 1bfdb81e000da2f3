#pragma once

// Dense Hermitian operators on tensor-product spaces.
//
// Convention shared by every module: subsystem 0 is the leftmost (most
// significant) tensor factor, so the basis index of |i0 i1 ... i(n-1)> is
// i0 * (d1 * ... * d(n-1)) + ... + i(n-1).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace entgap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Dims = std::vector<std::size_t>;

/// Asymmetry below this is symmetrized away; above it construction fails.
inline constexpr double kHermitianRepairTol = 1e-10;
inline constexpr std::size_t kDefaultDenseCutoff = 4096;

std::size_t product(std::span<const std::size_t> dims);

class HermitianOperator {
 public:
  /// Validates dims (non-empty, each >= 2, product == side) and Hermiticity.
  HermitianOperator(Dims dims, Matrix matrix);

  static HermitianOperator identity(Dims dims);
  static HermitianOperator zero(Dims dims);
  /// |psi><psi| for a (not necessarily normalized) vector.
  static HermitianOperator projector(Dims dims, const Vector& psi);

  const Dims& dims() const noexcept { return dims_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  std::size_t side() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  std::size_t num_subsystems() const noexcept { return dims_.size(); }

  double trace() const;
  /// Re <psi|H|psi>.
  double expectation(const Vector& psi) const;
  /// Re tr[H rho].
  double trace_with(const HermitianOperator& rho) const;

  HermitianOperator operator+(const HermitianOperator& other) const;
  HermitianOperator operator-(const HermitianOperator& other) const;
  HermitianOperator operator*(double s) const;
  HermitianOperator shifted(double s) const;  // H + s I

 private:
  Dims dims_;
  Matrix matrix_;
};

inline HermitianOperator operator*(double s, const HermitianOperator& h) { return h * s; }

struct Spectrum {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // columns
  std::size_t ground_degeneracy = 0;

  double ground_energy() const { return eigenvalues(0); }
  double max_energy() const { return eigenvalues(eigenvalues.size() - 1); }
};

struct EigOptions {
  std::size_t dense_cutoff = kDefaultDenseCutoff;
  double degeneracy_tol = 1e-8;
};

/// Full eigendecomposition. Throws DimensionMismatch above the dense cutoff.
Spectrum eig(const HermitianOperator& m, const EigOptions& options = {});

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b);
Vector kron(const Vector& a, const Vector& b);

/// Transposes the indices of one tensor factor.
HermitianOperator partial_transpose(const HermitianOperator& m, std::size_t subsystem);

/// Traces out every subsystem not in `keep`. Kept factors retain their
/// original relative order.
HermitianOperator partial_trace(const HermitianOperator& m, std::span<const std::size_t> keep);

/// Reorders tensor factors: factor k of the result is factor perm[k] of m.
HermitianOperator permute_subsystems(const HermitianOperator& m, std::span<const std::size_t> perm);

/// Groups factors [0, cut) and [cut, n) into a two-factor operator.
HermitianOperator flatten(const HermitianOperator& m, std::size_t cut);

/// Moves the subsystems in `part_a` to the front (in the given order) and
/// flattens to a two-factor operator A|B.
HermitianOperator bipartition(const HermitianOperator& m, std::span<const std::size_t> part_a);

/// Linear operator available only through its action on vectors.
struct MatrixFreeOperator {
  std::size_t dimension = 0;
  Dims dims;
  /// out = A in. `out` is resized by the callee. Must be safe to call
  /// concurrently from several threads.
  std::function<void(const Vector& in, Vector& out)> apply;
};

MatrixFreeOperator as_matrix_free(const HermitianOperator& m);

struct LanczosOptions {
  double tol = 1e-10;                 // residual ||Av - Ev||
  std::size_t max_iterations = 10000; // total matrix-vector products
  std::size_t krylov_dim = 80;        // restart length
  std::uint64_t seed = 12345;
};

struct LanczosResult {
  double energy = 0.0;
  Vector vector;
  double residual = 0.0;
  std::size_t iterations = 0;
};

/// Lowest eigenpair by explicitly restarted Lanczos with full
/// reorthogonalization. Throws NotConverged (message carries the residual).
LanczosResult lanczos_ground(const MatrixFreeOperator& op, const LanczosOptions& options = {});

/// Max |m - m^dagger| entrywise.
double hermiticity_defect(const Matrix& m);

}  // namespace entgap
