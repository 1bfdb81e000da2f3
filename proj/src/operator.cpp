#include "entgap/operator.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "entgap/error.hpp"

namespace entgap {

namespace {

std::vector<std::size_t> strides_of(const Dims& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) strides[k - 1] = strides[k] * dims[k];
  return strides;
}

std::string dims_string(const Dims& dims) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < dims.size(); ++k) os << (k ? "," : "") << dims[k];
  os << ']';
  return os.str();
}

}  // namespace

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(Dims dims, Matrix matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
  require(!dims_.empty(), "operator dims must be non-empty");
  for (auto d : dims_) require(d >= 2, "every subsystem dimension must be >= 2, got " + dims_string(dims_));
  require(matrix_.rows() == matrix_.cols(), "operator matrix must be square",
          ErrorCode::DimensionMismatch);
  require(static_cast<std::size_t>(matrix_.rows()) == product(dims_),
          "matrix side " + std::to_string(matrix_.rows()) + " does not match dims " + dims_string(dims_),
          ErrorCode::DimensionMismatch);
  const double defect = hermiticity_defect(matrix_);
  require(defect <= kHermitianRepairTol,
          "matrix is not Hermitian (max asymmetry " + std::to_string(defect) + ")");
  if (defect > 0.0) matrix_ = (0.5 * (matrix_ + matrix_.adjoint())).eval();
}

HermitianOperator HermitianOperator::identity(Dims dims) {
  const auto n = static_cast<Eigen::Index>(product(dims));
  return {std::move(dims), Matrix::Identity(n, n)};
}

HermitianOperator HermitianOperator::zero(Dims dims) {
  const auto n = static_cast<Eigen::Index>(product(dims));
  return {std::move(dims), Matrix::Zero(n, n)};
}

HermitianOperator HermitianOperator::projector(Dims dims, const Vector& psi) {
  return {std::move(dims), psi * psi.adjoint()};
}

double HermitianOperator::trace() const { return matrix_.trace().real(); }

double HermitianOperator::expectation(const Vector& psi) const {
  return psi.dot(matrix_ * psi).real();
}

double HermitianOperator::trace_with(const HermitianOperator& rho) const {
  require(rho.side() == side(), "trace_with: side mismatch", ErrorCode::DimensionMismatch);
  // tr[A B] = sum_ij A_ij B_ji; B Hermitian so B_ji = conj(B_ij).
  return (matrix_.array() * rho.matrix_.array().conjugate()).sum().real();
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& other) const {
  require(dims_ == other.dims_, "operator+: dims mismatch", ErrorCode::DimensionMismatch);
  return {dims_, matrix_ + other.matrix_};
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& other) const {
  require(dims_ == other.dims_, "operator-: dims mismatch", ErrorCode::DimensionMismatch);
  return {dims_, matrix_ - other.matrix_};
}

HermitianOperator HermitianOperator::operator*(double s) const { return {dims_, matrix_ * s}; }

HermitianOperator HermitianOperator::shifted(double s) const {
  Matrix m = matrix_;
  m.diagonal().array() += s;
  return {dims_, std::move(m)};
}

Spectrum eig(const HermitianOperator& m, const EigOptions& options) {
  require(m.side() <= options.dense_cutoff,
          "dense eigendecomposition requested for side " + std::to_string(m.side()) +
              " above cutoff " + std::to_string(options.dense_cutoff) + "; use lanczos_ground",
          ErrorCode::DimensionMismatch);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.matrix());
  require(solver.info() == Eigen::Success, "eigensolver failed", ErrorCode::NotConverged);
  Spectrum s;
  s.eigenvalues = solver.eigenvalues();
  s.eigenvectors = solver.eigenvectors();
  const double e0 = s.eigenvalues(0);
  s.ground_degeneracy = 0;
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i)
    if (s.eigenvalues(i) - e0 <= options.degeneracy_tol) ++s.ground_degeneracy;
  return s;
}

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  const auto na = a.matrix().rows();
  const auto nb = b.matrix().rows();
  Matrix out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index j = 0; j < na; ++j)
      out.block(i * nb, j * nb, nb, nb) = a.matrix()(i, j) * b.matrix();
  return {std::move(dims), std::move(out)};
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

HermitianOperator partial_transpose(const HermitianOperator& m, std::size_t subsystem) {
  const auto& dims = m.dims();
  require(subsystem < dims.size(), "partial_transpose: subsystem index " + std::to_string(subsystem) +
                                       " out of range for " + std::to_string(dims.size()) + " factors");
  const auto strides = strides_of(dims);
  const std::size_t stride = strides[subsystem];
  const std::size_t d = dims[subsystem];
  const std::size_t n = m.side();
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t dr = (r / stride) % d;
    const std::size_t r_base = r - dr * stride;
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t dc = (c / stride) % d;
      const std::size_t c_base = c - dc * stride;
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          m.matrix()(static_cast<Eigen::Index>(r_base + dc * stride),
                     static_cast<Eigen::Index>(c_base + dr * stride));
    }
  }
  return {dims, std::move(out)};
}

namespace {

// Offsets of every multi-index over `which` factors, in lexicographic order.
std::vector<std::size_t> offsets_for(const Dims& dims, const std::vector<std::size_t>& strides,
                                     const std::vector<std::size_t>& which) {
  std::vector<std::size_t> offsets{0};
  for (auto f : which) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dims[f]);
    for (auto o : offsets)
      for (std::size_t v = 0; v < dims[f]; ++v) next.push_back(o + v * strides[f]);
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

HermitianOperator partial_trace(const HermitianOperator& m, std::span<const std::size_t> keep) {
  const auto& dims = m.dims();
  require(!keep.empty(), "partial_trace: keep set must be non-empty");
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  require(std::adjacent_find(kept.begin(), kept.end()) == kept.end(), "partial_trace: duplicate index in keep set");
  require(kept.back() < dims.size(), "partial_trace: keep index out of range");
  std::vector<std::size_t> traced;
  for (std::size_t f = 0; f < dims.size(); ++f)
    if (!std::binary_search(kept.begin(), kept.end(), f)) traced.push_back(f);

  const auto strides = strides_of(dims);
  const auto keep_off = offsets_for(dims, strides, kept);
  const auto trace_off = offsets_for(dims, strides, traced);
  const auto nk = static_cast<Eigen::Index>(keep_off.size());
  Matrix out = Matrix::Zero(nk, nk);
  for (Eigen::Index r = 0; r < nk; ++r)
    for (Eigen::Index c = 0; c < nk; ++c) {
      Complex acc{0.0, 0.0};
      for (auto t : trace_off)
        acc += m.matrix()(static_cast<Eigen::Index>(keep_off[r] + t), static_cast<Eigen::Index>(keep_off[c] + t));
      out(r, c) = acc;
    }
  Dims out_dims;
  for (auto f : kept) out_dims.push_back(dims[f]);
  return {std::move(out_dims), std::move(out)};
}

HermitianOperator permute_subsystems(const HermitianOperator& m, std::span<const std::size_t> perm) {
  const auto& dims = m.dims();
  require(perm.size() == dims.size(), "permute_subsystems: permutation length mismatch");
  std::vector<std::size_t> check(perm.begin(), perm.end());
  std::sort(check.begin(), check.end());
  for (std::size_t k = 0; k < check.size(); ++k)
    require(check[k] == k, "permute_subsystems: not a permutation");

  const auto old_strides = strides_of(dims);
  const auto offsets = offsets_for(dims, old_strides, std::vector<std::size_t>(perm.begin(), perm.end()));
  const auto n = static_cast<Eigen::Index>(m.side());
  Matrix out(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      out(r, c) = m.matrix()(static_cast<Eigen::Index>(offsets[r]), static_cast<Eigen::Index>(offsets[c]));
  Dims out_dims;
  for (auto f : perm) out_dims.push_back(dims[f]);
  return {std::move(out_dims), std::move(out)};
}

HermitianOperator flatten(const HermitianOperator& m, std::size_t cut) {
  const auto& dims = m.dims();
  require(cut >= 1 && cut < dims.size(), "flatten: cut must split the factors into two non-empty groups");
  const std::span<const std::size_t> all(dims);
  return {Dims{product(all.subspan(0, cut)), product(all.subspan(cut))}, m.matrix()};
}

HermitianOperator bipartition(const HermitianOperator& m, std::span<const std::size_t> part_a) {
  const auto n = m.num_subsystems();
  require(!part_a.empty() && part_a.size() < n, "bipartition: part A must be a proper non-empty subset");
  std::vector<bool> in_a(n, false);
  std::vector<std::size_t> perm;
  for (auto f : part_a) {
    require(f < n, "bipartition: subsystem index out of range");
    require(!in_a[f], "bipartition: duplicate subsystem index");
    in_a[f] = true;
    perm.push_back(f);
  }
  for (std::size_t f = 0; f < n; ++f)
    if (!in_a[f]) perm.push_back(f);
  bool identity = true;
  for (std::size_t k = 0; k < n; ++k) identity = identity && perm[k] == k;
  if (identity) return flatten(m, part_a.size());
  return flatten(permute_subsystems(m, perm), part_a.size());
}

MatrixFreeOperator as_matrix_free(const HermitianOperator& m) {
  auto shared = std::make_shared<const Matrix>(m.matrix());
  return {m.side(), m.dims(), [shared](const Vector& in, Vector& out) { out.noalias() = (*shared) * in; }};
}

}  // namespace entgap
