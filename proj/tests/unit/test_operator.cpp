#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "entgap/error.hpp"
#include "entgap/models.hpp"
#include "entgap/operator.hpp"
#include "helpers.hpp"

using namespace entgap;
using entgap::test::max_abs;
using entgap::test::random_density;
using entgap::test::random_hermitian;
using entgap::test::random_operator;

namespace {

HermitianOperator pauli(const Matrix& m) { return {Dims{2}, m}; }

std::vector<double> sorted_eigs(const HermitianOperator& h) {
  const auto s = eig(h);
  return {s.eigenvalues.data(), s.eigenvalues.data() + s.eigenvalues.size()};
}

void expect_eigs(const HermitianOperator& h, std::vector<double> want, double tol = 1e-12) {
  std::sort(want.begin(), want.end());
  const auto got = sorted_eigs(h);
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "eigenvalue " << i;
}

}  // namespace

TEST(HermitianOperator, RejectsBadInput) {
  Matrix m = Matrix::Identity(4, 4);
  EXPECT_THROW(HermitianOperator(Dims{}, m), Error);
  EXPECT_THROW(HermitianOperator(Dims{2, 3}, m), Error);
  EXPECT_THROW(HermitianOperator(Dims{1, 4}, m), Error);
  m(0, 1) = Complex(0.0, 1e-3);
  EXPECT_THROW(HermitianOperator(Dims{2, 2}, m), Error);
  try {
    HermitianOperator(Dims{2, 3}, Matrix::Identity(4, 4));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(HermitianOperator, SymmetrizesTinyDrift) {
  Matrix m = Matrix::Identity(4, 4);
  m(0, 1) = Complex(0.5, 1e-12);
  m(1, 0) = Complex(0.5, 0.0);
  const HermitianOperator h(Dims{2, 2}, m);
  EXPECT_EQ(hermiticity_defect(h.matrix()), 0.0);
  EXPECT_NEAR(h.matrix()(0, 1).imag(), 5e-13, 1e-20);
}

TEST(Kron, Examples) {
  const auto i4 = kron(HermitianOperator::identity({2}), HermitianOperator::identity({2}));
  EXPECT_EQ(i4.dims(), (Dims{2, 2}));
  EXPECT_LT(max_abs(i4.matrix() - Matrix::Identity(4, 4)), 1e-15);
  expect_eigs(kron(pauli(pauli_z()), pauli(pauli_z())), {1, 1, -1, -1});
  const auto heis = kron(pauli(pauli_x()), pauli(pauli_x())) + kron(pauli(pauli_y()), pauli(pauli_y())) +
                    kron(pauli(pauli_z()), pauli(pauli_z()));
  expect_eigs(heis, {-3, 1, 1, 1});
}

TEST(Kron, OrderingIsMostSignificantFirst) {
  Vector a = Vector::Zero(2), b = Vector::Zero(3);
  a(1) = 1.0;
  b(2) = 1.0;
  const Vector ab = kron(a, b);
  EXPECT_EQ(ab(5), Complex(1.0, 0.0));  // |1>|2> -> 1*3 + 2
}

TEST(PartialTranspose, InvolutionTraceHermiticity) {
  auto rng = make_rng(11, 0);
  for (const Dims& dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 3}, Dims{2, 2, 2}, Dims{3, 2, 2}}) {
    const auto m = random_operator(dims, rng);
    for (std::size_t f = 0; f < dims.size(); ++f) {
      const auto pt = partial_transpose(m, f);
      EXPECT_LT(max_abs(partial_transpose(pt, f).matrix() - m.matrix()), 1e-12);
      EXPECT_NEAR(pt.trace(), m.trace(), 1e-12);
      EXPECT_LT(hermiticity_defect(pt.matrix()), 1e-12);
    }
  }
}

TEST(PartialTranspose, ProductAndSinglet) {
  auto rng = make_rng(12, 0);
  const HermitianOperator ra({2}, random_density(2, rng));
  const HermitianOperator rb({3}, random_density(3, rng));
  const auto pt = partial_transpose(kron(ra, rb), 0);
  const HermitianOperator ra_t({2}, ra.matrix().transpose());
  EXPECT_LT(max_abs(pt.matrix() - kron(ra_t, rb).matrix()), 1e-14);
  EXPECT_GE(eig(pt).ground_energy(), -1e-14);

  Vector singlet = Vector::Zero(4);
  singlet(1) = 1.0 / std::sqrt(2.0);
  singlet(2) = -1.0 / std::sqrt(2.0);
  const auto proj = HermitianOperator::projector({2, 2}, singlet);
  EXPECT_NEAR(eig(partial_transpose(proj, 0)).ground_energy(), -0.5, 1e-14);
}

TEST(PartialTrace, Examples) {
  auto rng = make_rng(13, 0);
  const HermitianOperator ra({3}, random_density(3, rng));
  const HermitianOperator rb({2}, random_density(2, rng));
  const std::size_t keep_a[] = {0};
  EXPECT_LT(max_abs(partial_trace(kron(ra, rb), keep_a).matrix() - ra.matrix()), 1e-14);

  const auto phi = HermitianOperator::projector({2, 2}, max_entangled_state(2));
  EXPECT_LT(max_abs(partial_trace(phi, keep_a).matrix() - Matrix::Identity(2, 2) / 2.0), 1e-15);
}

TEST(PartialTrace, KronFactorScaledByTrace) {
  auto rng = make_rng(14, 0);
  for (int rep = 0; rep < 10; ++rep) {
    const auto a = random_operator({2}, rng);
    const auto b = random_operator({3}, rng);
    const std::size_t keep[] = {0};
    EXPECT_LT(max_abs(partial_trace(kron(a, b), keep).matrix() - a.matrix() * b.trace()), 1e-12);
    const std::size_t keep_b[] = {1};
    EXPECT_LT(max_abs(partial_trace(kron(a, b), keep_b).matrix() - b.matrix() * a.trace()), 1e-12);
  }
}

TEST(PartialTrace, RejectsBadKeepSets) {
  const auto h = HermitianOperator::identity({2, 2});
  const std::size_t dup[] = {0, 0};
  const std::size_t out[] = {2};
  EXPECT_THROW(partial_trace(h, dup), Error);
  EXPECT_THROW(partial_trace(h, out), Error);
  EXPECT_THROW(partial_trace(h, std::span<const std::size_t>{}), Error);
}

TEST(Permute, MatchesKronOrder) {
  auto rng = make_rng(15, 0);
  const auto a = random_operator({2}, rng);
  const auto b = random_operator({3}, rng);
  const std::size_t swap[] = {1, 0};
  EXPECT_LT(max_abs(permute_subsystems(kron(a, b), swap).matrix() - kron(b, a).matrix()), 1e-14);
  const auto c = random_operator({2}, rng);
  const std::size_t part[] = {2, 0};
  const auto bp = bipartition(kron(kron(a, b), c), part);
  EXPECT_EQ(bp.dims(), (Dims{4, 3}));
  EXPECT_LT(max_abs(bp.matrix() - kron(kron(c, a), b).matrix()), 1e-13);
}

TEST(Eig, Examples) {
  expect_eigs(max_entangled_projector_hamiltonian(2), {0, 1, 1, 1});
  expect_eigs(symmetric_projector_hamiltonian(2), {0, 1, 1, 1});
  expect_eigs(antisymmetric_projector(2), {0, 0, 0, 1});
  const auto s = eig(symmetric_projector_hamiltonian(2));
  EXPECT_NEAR(s.ground_energy(), 0.0, 1e-14);
  EXPECT_EQ(s.ground_degeneracy, 1u);
  EXPECT_THROW(eig(HermitianOperator::identity({2, 2}), EigOptions{2, 1e-8}), Error);
}

TEST(Eig, ReconstructionUpTo256) {
  auto rng = make_rng(16, 0);
  for (std::size_t n : {2, 7, 32, 100, 256}) {
    const Matrix m = random_hermitian(n, rng);
    const auto s = eig(HermitianOperator({n}, m));
    for (Eigen::Index i = 1; i < s.eigenvalues.size(); ++i) EXPECT_LE(s.eigenvalues(i - 1), s.eigenvalues(i));
    const Matrix back = s.eigenvectors * s.eigenvalues.cast<Complex>().asDiagonal() * s.eigenvectors.adjoint();
    EXPECT_LE((back - m).norm() / m.norm(), 1e-9) << "side " << n;
  }
}

TEST(Expectation, Identity) {
  auto rng = make_rng(17, 0);
  const auto psi = haar_vector(6, rng);
  EXPECT_NEAR(HermitianOperator::identity({2, 3}).expectation(psi), 1.0, 1e-14);
}

TEST(Lanczos, AgreesWithDenseOnRandomSparse) {
  auto rng = make_rng(18, 0);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t n : {64, 500, 1200}) {
    Matrix m = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = u(rng) * 2.0;
      for (int k = 0; k < 4; ++k) {
        const auto j = static_cast<std::size_t>(std::abs(u(rng)) * double(n)) % n;
        if (j == i) continue;
        const Complex z(u(rng), u(rng));
        m(i, j) += z;
        m(j, i) += std::conj(z);
      }
    }
    const HermitianOperator h({n}, m);
    const auto r = lanczos_ground(as_matrix_free(h));
    EXPECT_NEAR(r.energy, eig(h).ground_energy(), 1e-8) << "side " << n;
    EXPECT_LE(r.residual, 1e-10);
  }
}

TEST(Lanczos, Side4096BlockSparseWithHiddenStructure) {
  // 64 random 64x64 blocks, rows and columns scrambled by one permutation; the
  // reference is the minimum over the blocks.
  auto rng = make_rng(19, 0);
  const std::size_t block = 64, blocks = 64, n = block * blocks;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Matrix> parts;
  double reference = std::numeric_limits<double>::infinity();
  for (std::size_t b = 0; b < blocks; ++b) {
    parts.push_back(random_hermitian(block, rng));
    reference = std::min(reference, eig(HermitianOperator({block}, parts.back())).ground_energy());
  }
  MatrixFreeOperator op{n, {n}, [&](const Vector& in, Vector& out) {
                          out.setZero(static_cast<Eigen::Index>(n));
                          for (std::size_t b = 0; b < blocks; ++b)
                            for (std::size_t i = 0; i < block; ++i) {
                              Complex acc = 0.0;
                              for (std::size_t j = 0; j < block; ++j)
                                acc += parts[b](i, j) * in(perm[b * block + j]);
                              out(perm[b * block + i]) = acc;
                            }
                        }};
  LanczosOptions o;
  o.max_iterations = 40000;
  const auto r = lanczos_ground(op, o);
  EXPECT_NEAR(r.energy, reference, 1e-8);
}

TEST(Lanczos, ReportsNonConvergence) {
  auto rng = make_rng(20, 0);
  const HermitianOperator h({300}, random_hermitian(300, rng));
  LanczosOptions o;
  o.max_iterations = 5;
  o.krylov_dim = 4;
  try {
    lanczos_ground(as_matrix_free(h), o);
    FAIL() << "expected NotConverged";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotConverged);
    EXPECT_NE(std::string(e.what()).find("residual"), std::string::npos);
  }
}
