#pragma once

#include <random>

#include "entgap/operator.hpp"
#include "entgap/random.hpp"

namespace entgap::test {

inline Matrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const auto k = static_cast<Eigen::Index>(n);
  Matrix m(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) {
      const double re = g(rng);
      const double im = g(rng);
      m(i, j) = Complex(re, im);
    }
  return (m + m.adjoint()) / 2.0;
}

inline HermitianOperator random_operator(const Dims& dims, std::mt19937_64& rng) {
  return {dims, random_hermitian(product(dims), rng)};
}

// Random density matrix of full rank (Ginibre G G^dagger, normalized).
inline Matrix random_density(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const auto k = static_cast<Eigen::Index>(n);
  Matrix a(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) {
      const double re = g(rng);
      const double im = g(rng);
      a(i, j) = Complex(re, im);
    }
  Matrix rho = a * a.adjoint();
  return rho / rho.trace();
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace entgap::test
