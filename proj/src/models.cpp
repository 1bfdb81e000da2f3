#include "entgap/models.hpp"

#include <cmath>
#include <string>

#include "entgap/error.hpp"
#include "entgap/io.hpp"

namespace entgap {

namespace {

const Complex I1{0.0, 1.0};

HermitianOperator pair_op(const Matrix& m) { return {Dims{2, 2}, m}; }

Matrix kron2(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void check_projector_dim(std::size_t d, std::size_t min_d, const char* name) {
  require(d >= min_d, std::string(name) + ": d must be >= " + std::to_string(min_d) + ", got " + std::to_string(d));
  require(d <= kMaxProjectorDim, std::string(name) + ": d = " + std::to_string(d) + " exceeds the memory guard of " +
                                     std::to_string(kMaxProjectorDim));
}

Matrix swap_matrix(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d * d);
  Matrix s = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      s(static_cast<Eigen::Index>(i * d + j), static_cast<Eigen::Index>(j * d + i)) = 1.0;
  return s;
}

Vector basis_vector(std::size_t d, std::size_t i) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_real(const std::string& text, const std::string& id) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == text.size() && !text.empty() && std::isfinite(v), "model id '" + id + "': '" + text + "' is not a number");
  return v;
}

std::size_t parse_dim(const std::string& text, const std::string& id) {
  const double v = parse_real(text, id);
  require(v >= 1 && v == std::floor(v), "model id '" + id + "': '" + text + "' is not a positive integer");
  return static_cast<std::size_t>(v);
}

}  // namespace

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, -I1, I1, 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

HermitianOperator heisenberg_pair() {
  return pair_op(kron2(pauli_x(), pauli_x()) + kron2(pauli_y(), pauli_y()) + kron2(pauli_z(), pauli_z()));
}

HermitianOperator xy_pair(double gamma, double lambda) {
  const Matrix id = Matrix::Identity(2, 2);
  return pair_op(0.5 * (1.0 + gamma) * kron2(pauli_x(), pauli_x()) +
                 0.5 * (1.0 - gamma) * kron2(pauli_y(), pauli_y()) +
                 0.5 * lambda * (kron2(pauli_z(), id) + kron2(id, pauli_z())));
}

HermitianOperator xxz_pair(double delta) {
  return pair_op(kron2(pauli_x(), pauli_x()) + kron2(pauli_y(), pauli_y()) + delta * kron2(pauli_z(), pauli_z()));
}

Vector max_entangled_state(std::size_t d) {
  require(d >= 2, "max_entangled_state: d must be >= 2");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d * d));
  for (std::size_t i = 0; i < d; ++i) v(static_cast<Eigen::Index>(i * d + i)) = 1.0 / std::sqrt(double(d));
  return v;
}

HermitianOperator max_entangled_projector_hamiltonian(std::size_t d) {
  check_projector_dim(d, 2, "max_entangled_projector_hamiltonian");
  const Vector phi = max_entangled_state(d);
  const auto n = static_cast<Eigen::Index>(d * d);
  return {Dims{d, d}, Matrix::Identity(n, n) - phi * phi.adjoint()};
}

HermitianOperator symmetric_projector_hamiltonian(std::size_t d) {
  check_projector_dim(d, 2, "symmetric_projector_hamiltonian");
  const auto n = static_cast<Eigen::Index>(d * d);
  return {Dims{d, d}, 0.5 * (Matrix::Identity(n, n) + swap_matrix(d))};
}

HermitianOperator antisymmetric_projector(std::size_t d) {
  check_projector_dim(d, 2, "antisymmetric_projector");
  const auto n = static_cast<Eigen::Index>(d * d);
  return {Dims{d, d}, 0.5 * (Matrix::Identity(n, n) - swap_matrix(d))};
}

// span{v_t (x) v_t} over any 2d-1 distinct t is spanned by the anti-diagonal
// vectors w_s = sum_{i+j=s} |ij>, s = 0..2d-2: (v_t (x) v_t)_{ij} = t^(i+j).
// The w_s have disjoint supports, so normalizing them gives an orthonormal basis.
HermitianOperator ces_projector(std::size_t d) {
  check_projector_dim(d, 3, "ces_projector");
  const auto n = static_cast<Eigen::Index>(d * d);
  Matrix p = Matrix::Identity(n, n);
  for (std::size_t s = 0; s + 1 < 2 * d; ++s) {
    Vector w = Vector::Zero(n);
    for (std::size_t i = 0; i < d; ++i)
      if (s >= i && s - i < d) w(static_cast<Eigen::Index>(i * d + (s - i))) = 1.0;
    w /= w.norm();
    p -= w * w.adjoint();
  }
  return {Dims{d, d}, p};
}

HermitianOperator ces_hamiltonian(std::size_t d) {
  const auto p = ces_projector(d);
  return HermitianOperator::identity(p.dims()) - p;
}

HermitianOperator choi_hamiltonian() {
  const auto n = 9;
  Matrix h = Matrix::Zero(n, n);
  auto idx = [](int a, int b) { return 3 * a + b; };
  for (int i = 0; i < 3; ++i) h(idx(i, i), idx(i, i)) += 2.0;
  h(idx(0, 2), idx(0, 2)) += 1.0;
  h(idx(1, 0), idx(1, 0)) += 1.0;
  h(idx(2, 1), idx(2, 1)) += 1.0;
  const Vector psi = max_entangled_state(3);
  h -= 3.0 * psi * psi.adjoint();
  return {Dims{3, 3}, h};
}

std::vector<Vector> tiles_upb() {
  const Vector e0 = basis_vector(3, 0), e1 = basis_vector(3, 1), e2 = basis_vector(3, 2);
  const double r2 = std::sqrt(2.0);
  const Vector m01 = (e0 - e1) / r2;
  const Vector m12 = (e1 - e2) / r2;
  const Vector all = (e0 + e1 + e2) / std::sqrt(3.0);
  return {kron(e0, m01), kron(m01, e2), kron(e2, m12), kron(m12, e0), kron(all, all)};
}

HermitianOperator upb_hamiltonian(const std::string& basis) {
  require(basis == "tiles", "upb_hamiltonian: unknown basis '" + basis + "' (known: tiles)");
  Matrix p = Matrix::Zero(9, 9);
  for (const auto& v : tiles_upb()) p += v * v.adjoint();
  return {Dims{3, 3}, p};
}

HermitianOperator coupling(const CouplingSpec& spec) {
  switch (spec.kind) {
    case CouplingKind::Heisenberg:
      return heisenberg_pair();
    case CouplingKind::XY:
      return xy_pair(spec.gamma, spec.lambda);
    case CouplingKind::XXZ:
      return xxz_pair(spec.delta);
    case CouplingKind::Custom:
      require(spec.custom.size() == 1, "custom coupling needs exactly one operator");
      require(spec.custom.front().num_subsystems() == 2, "custom coupling must act on two sites",
              ErrorCode::DimensionMismatch);
      return spec.custom.front();
  }
  fail(ErrorCode::InvalidArgument, "unknown coupling kind");
}

HermitianOperator model_from_id(const std::string& id) {
  if (id.rfind("file:", 0) == 0) return load_operator(id.substr(5));
  const auto parts = split(id, ':');
  const auto& name = parts.front();
  auto want = [&](std::size_t n) {
    require(parts.size() == n + 1, "model id '" + id + "': expected " + std::to_string(n) + " parameter(s)");
  };
  if (name == "heisenberg") {
    want(0);
    return heisenberg_pair();
  }
  if (name == "xy") {
    want(2);
    return xy_pair(parse_real(parts[1], id), parse_real(parts[2], id));
  }
  if (name == "xxz") {
    want(1);
    return xxz_pair(parse_real(parts[1], id));
  }
  if (name == "maxent") {
    want(1);
    return max_entangled_projector_hamiltonian(parse_dim(parts[1], id));
  }
  if (name == "symproj") {
    want(1);
    return symmetric_projector_hamiltonian(parse_dim(parts[1], id));
  }
  if (name == "ces") {
    want(1);
    return ces_hamiltonian(parse_dim(parts[1], id));
  }
  if (name == "choi") {
    want(0);
    return choi_hamiltonian();
  }
  if (name == "upb") {
    want(1);
    return upb_hamiltonian(parts[1]);
  }
  fail(ErrorCode::InvalidArgument, "unknown model id '" + id + "'");
}

}  // namespace entgap
