#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <random>

#include <Eigen/Eigenvalues>

#include "entgap/error.hpp"
#include "entgap/operator.hpp"

namespace entgap {

namespace {

Vector random_start(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Vector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

}  // namespace

LanczosResult lanczos_ground(const MatrixFreeOperator& op, const LanczosOptions& options) {
  require(op.dimension >= 2, "lanczos_ground: dimension must be >= 2");
  require(options.tol > 0.0, "lanczos_ground: tol must be positive");
  require(options.krylov_dim >= 2, "lanczos_ground: krylov_dim must be >= 2");
  require(static_cast<bool>(op.apply), "lanczos_ground: operator has no apply function");

  const auto n = static_cast<Eigen::Index>(op.dimension);
  const auto m_max = static_cast<Eigen::Index>(std::min(options.krylov_dim, op.dimension));

  LanczosResult best;
  best.residual = std::numeric_limits<double>::infinity();
  Vector x = random_start(op.dimension, options.seed);
  Vector w(n);
  std::size_t matvecs = 0;

  while (matvecs < options.max_iterations) {
    Matrix basis(n, m_max);
    RealVector alpha(m_max), beta(m_max);
    basis.col(0) = x;
    Eigen::Index m = 0;
    for (; m < m_max && matvecs < options.max_iterations; ++m) {
      op.apply(basis.col(m), w);
      ++matvecs;
      alpha(m) = basis.col(m).dot(w).real();
      // Full reorthogonalization, two passes.
      for (int pass = 0; pass < 2; ++pass) {
        const Vector coeffs = basis.leftCols(m + 1).adjoint() * w;
        w.noalias() -= basis.leftCols(m + 1) * coeffs;
      }
      beta(m) = w.norm();
      if (m + 1 < m_max) {
        if (beta(m) < 1e-13) {  // invariant subspace
          ++m;
          break;
        }
        basis.col(m + 1) = w / beta(m);
      }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(alpha.head(m), beta.head(std::max<Eigen::Index>(m - 1, 0)),
                               Eigen::ComputeEigenvectors);
    const RealVector s = tri.eigenvectors().col(0);
    x = basis.leftCols(m) * s.cast<Complex>();
    x /= x.norm();

    op.apply(x, w);
    ++matvecs;
    const double rayleigh = x.dot(w).real();
    const double residual = (w - rayleigh * x).norm();
    if (residual < best.residual) {
      best.energy = rayleigh;
      best.vector = x;
      best.residual = residual;
    }
    best.iterations = matvecs;
    if (residual <= options.tol) return best;
  }
  fail(ErrorCode::NotConverged, "lanczos_ground: no convergence after " + std::to_string(matvecs) +
                                    " matrix-vector products; best residual " +
                                    std::to_string(best.residual) + " at energy " +
                                    std::to_string(best.energy));
}

}  // namespace entgap
