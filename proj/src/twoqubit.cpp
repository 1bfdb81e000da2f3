#include "entgap/twoqubit.hpp"

#include <cmath>
#include <cstring>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "entgap/error.hpp"
#include "entgap/models.hpp"
#include "entgap/parallel.hpp"
#include "entgap/random.hpp"
#include "entgap/thermo.hpp"

namespace entgap {

namespace {

const double kLn3 = std::log(3.0);

Vector singlet() {
  Vector s = Vector::Zero(4);
  s(1) = 1.0 / std::sqrt(2.0);
  s(2) = -1.0 / std::sqrt(2.0);
  return s;
}

// Autonne-Takagi: symmetric 2x2 C = W diag(s) W^T with W unitary, s >= 0.
// Returns W; its columns are the local basis in which the state is
// s0 |00> + s1 |11>.
Matrix takagi(const Matrix& c) {
  Eigen::JacobiSVD<Matrix> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(0) - sv(1) > 1e-8) {
    // C^T = C forces U = conj(V) D with D diagonal unitary.
    const Matrix u = svd.matrixU();
    const Matrix d = svd.matrixV().transpose() * u;
    Matrix w = u;
    for (Eigen::Index k = 0; k < 2; ++k) w.col(k) *= std::sqrt(std::conj(d(k, k)));
    return w;
  }
  // C = s * (symmetric unitary): real and imaginary parts commute, so one real
  // orthogonal O diagonalizes both.
  const Eigen::Matrix2d mix = c.real() + std::sqrt(2.0) * c.imag();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(mix);
  const Matrix o = es.eigenvectors().cast<Complex>();
  const Matrix diag = o.transpose() * c * o;
  Matrix w = o;
  for (Eigen::Index k = 0; k < 2; ++k) w.col(k) *= std::exp(Complex(0.0, 0.5 * std::arg(diag(k, k))));
  return w;
}

Matrix coefficient_matrix(const Vector& psi) {
  Matrix c(2, 2);
  c << psi(0), psi(1), psi(2), psi(3);
  return 0.5 * (c + c.transpose());  // triplet states are symmetric
}

std::string hash_matrix(const Matrix& m) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (double part : {m(i, j).real(), m(i, j).imag()}) {
        unsigned char bytes[sizeof(double)];
        std::memcpy(bytes, &part, sizeof part);
        for (unsigned char b : bytes) {
          h ^= b;
          h *= 1099511628211ull;
        }
      }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

HermitianOperator family_hamiltonian(const TwoQubitFamily& f) {
  require(0.0 <= f.e1 && f.e1 <= f.e2 && f.e2 <= 1.0, "two-qubit family needs 0 <= e1 <= e2 <= 1");
  require(f.basis.rows() == 4 && f.basis.cols() == 4, "two-qubit family basis must be 4x4", ErrorCode::DimensionMismatch);
  require((f.basis.adjoint() * f.basis - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-10,
          "two-qubit family basis is not unitary");
  Eigen::Vector4d e(0.0, f.e1, f.e2, 1.0);
  return {Dims{2, 2}, f.basis * e.cast<Complex>().asDiagonal() * f.basis.adjoint()};
}

double afm_reference_temperature() { return 1.0 / kLn3; }

double afm_pipeline_temperature() {
  const auto scaled = (heisenberg_pair().shifted(3.0)) * 0.25;
  const auto t = entanglement_gap_temperature(scaled, 0.5);
  require(t.has_value(), "afm_pipeline_temperature: no finite temperature", ErrorCode::NoSolution);
  return *t;
}

double family_thermal_energy(double e1, double e2, double T) {
  return thermal_energy(RealVector{{0.0, e1, e2, 1.0}}, T);
}

E2Bounds e2_bounds(double e1) {
  require(e1 > 0.25 && e1 <= 1.0, "e2_bounds: e1 must lie in (1/4, 1], got " + std::to_string(e1));
  const double t_ref = afm_reference_temperature();
  // Root of g on [e1, 1] by bisection; g is monotone there at fixed T.
  auto solve = [&](auto g, double below, double above) {
    double lo = e1, hi = 1.0;
    const double glo = g(lo), ghi = g(hi);
    if ((glo < 0) == (ghi < 0)) return glo >= 0 ? below : above;
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
      const double mid = 0.5 * (lo + hi);
      ((g(mid) < 0) == (glo < 0) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  E2Bounds b;
  // (e1+1)/4 <= U(e2) holds for e2 >= lb.
  b.lb = solve([&](double e2) { return family_thermal_energy(e1, e2, t_ref) - (e1 + 1.0) / 4.0; }, e1, 1.0);
  // e2/2 <= U(e2) holds for e2 <= ub.
  b.ub = solve([&](double e2) { return family_thermal_energy(e1, e2, t_ref) - e2 / 2.0; }, 1.0, e1);
  return b;
}

ProductState lemma_state_mid1(const TwoQubitFamily& f) {
  const Matrix w = takagi(coefficient_matrix(f.basis.col(1)));
  const Complex i1(0.0, 1.0);
  const Vector a = (w.col(0) + i1 * w.col(1)) / std::sqrt(2.0);
  const Vector b = (w.col(0) - i1 * w.col(1)) / std::sqrt(2.0);
  return ProductState{{a, b}};
}

ProductState lemma_state_top(const TwoQubitFamily& f) {
  const Matrix w = takagi(coefficient_matrix(f.basis.col(3)));
  return ProductState{{w.col(0), w.col(1)}};
}

std::optional<double> family_temperature(const TwoQubitFamily& f, const PptOptions& ppt) {
  const auto h = family_hamiltonian(f);
  const double e_sep = ppt_lower(h, ppt).lower;
  if (e_sep <= 1e-9) return std::nullopt;
  return entanglement_gap_temperature(RealVector{{0.0, f.e1, f.e2, 1.0}}, e_sep);
}

namespace {

struct Sample {
  TwoQubitFamily family;
  std::optional<double> t;
  bool crosschecked = false;
  double discrepancy = 0.0;
};

TwoQubitFamily draw_family(std::mt19937_64& rng, bool singlet_ground) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  TwoQubitFamily f;
  const double a = u(rng);
  const double b = u(rng);
  f.e1 = std::min(a, b);
  f.e2 = std::max(a, b);
  if (!singlet_ground) {
    f.basis = haar_unitary(4, rng);
    return f;
  }
  Matrix triplet = Matrix::Zero(4, 3);
  triplet(0, 0) = 1.0;
  triplet(3, 1) = 1.0;
  triplet(1, 2) = triplet(2, 2) = 1.0 / std::sqrt(2.0);
  f.basis.resize(4, 4);
  f.basis.col(0) = singlet();
  f.basis.rightCols(3) = triplet * haar_unitary(3, rng);
  return f;
}

}  // namespace

SearchResult random_search(const SearchOptions& options) {
  require(options.samples >= 1, "random_search: samples must be >= 1");
  const std::size_t stride =
      options.crosscheck_fraction > 0.0 ? std::max<std::size_t>(1, std::size_t(1.0 / options.crosscheck_fraction)) : 0;
  const auto samples = parallel_map(options.samples, [&](std::size_t i) {
    auto rng = make_rng(options.seed, i);
    Sample s;
    s.family = draw_family(rng, options.singlet_ground);
    const auto h = family_hamiltonian(s.family);
    const double e_sep = ppt_lower(h).lower;
    if (e_sep > 1e-9) s.t = entanglement_gap_temperature(RealVector{{0.0, s.family.e1, s.family.e2, 1.0}}, e_sep);
    if (stride && i % stride == 0) {
      SeesawOptions so = options.crosscheck_seesaw;
      so.seed = options.seed ^ (0x9e3779b97f4a7c15ull * (i + 1));
      s.crosschecked = true;
      s.discrepancy = std::abs(seesaw_upper(h, so).energy - e_sep);
    }
    return s;
  });

  SearchResult r;
  r.n_samples = samples.size();
  bool have = false;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (s.crosschecked) {
      ++r.n_crosschecked;
      r.max_crosscheck_discrepancy = std::max(r.max_crosscheck_discrepancy, s.discrepancy);
    }
    if (!s.t) {
      ++r.n_skipped_zero_gap;
      continue;
    }
    if (s.family.e1 <= 0.25) {
      ++r.n_e1_below_quarter;
      r.max_t_e1_below_quarter = std::max(r.max_t_e1_below_quarter, *s.t);
    }
    if (!have || *s.t > r.max_t) {
      have = true;
      r.max_t = *s.t;
      r.e1 = s.family.e1;
      r.e2 = s.family.e2;
      r.argmax_index = i;
      r.basis_hash = hash_matrix(s.family.basis);
    }
  }
  return r;
}

}  // namespace entgap
