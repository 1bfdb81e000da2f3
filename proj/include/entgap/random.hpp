#pragma once

#include <cstdint>
#include <random>

#include "entgap/operator.hpp"

namespace entgap {

/// Independent generator for task `stream` of a run seeded with `seed`.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

/// Haar-random unit vector: i.i.d. complex Gaussian entries, normalized.
inline Vector haar_vector(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Vector v(static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

/// Haar-random unitary via QR of a complex Ginibre matrix with the phases of
/// R's diagonal divided out.
inline Matrix haar_unitary(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  const auto n = static_cast<Eigen::Index>(d);
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    if (a > 0.0) q.col(j) *= rjj / a;
  }
  return q;
}

}  // namespace entgap
