// PPT relaxation as a two-block SDP, solved by an infeasible primal-dual
// interior-point method (HKM direction, Mehrotra predictor-corrector).
//
//   primal: min <C, X>  s.t. A(X) = b, X = (X1, X2) >= 0
//   dual:   max b.y     s.t. A*(y) + S = C, S >= 0
//
// with C = (H, 0), y = (eps, q), A*(y) = (eps I + Q^{T_A}, -Q) and
// A(X) = (tr X1, coords(X1^{T_A}) - coords(X2)). Q is expanded in an
// orthonormal Hermitian basis with coordinates q, so X1 = rho, X2 = rho^{T_A}
// and S = (P, Q) is exactly the witness decomposition H - eps I = P + Q^{T_A}.

#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "entgap/error.hpp"
#include "entgap/separability.hpp"

namespace entgap {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

struct Entry {
  Eigen::Index r, c;
  Complex v;
};

// Orthonormal basis of Hermitian n x n matrices (or of real symmetric ones).
class HermBasis {
 public:
  HermBasis(Eigen::Index n, bool real_only) : n_(n) {
    for (Eigen::Index a = 0; a < n; ++a) {
      elems_.push_back({{a, a, 1.0}});
      for (Eigen::Index b = a + 1; b < n; ++b) {
        elems_.push_back({{a, b, kInvSqrt2}, {b, a, kInvSqrt2}});
        if (!real_only) elems_.push_back({{a, b, Complex(0, kInvSqrt2)}, {b, a, Complex(0, -kInvSqrt2)}});
      }
    }
  }

  Eigen::Index size() const { return static_cast<Eigen::Index>(elems_.size()); }
  const std::vector<Entry>& elem(Eigen::Index k) const { return elems_[static_cast<std::size_t>(k)]; }

  // Re tr[B_k W] for every k: the coordinates of herm(W).
  Eigen::VectorXd coords(const Matrix& w) const {
    Eigen::VectorXd out(size());
    for (Eigen::Index k = 0; k < size(); ++k) {
      Complex acc{0.0, 0.0};
      for (const auto& e : elem(k)) acc += e.v * w(e.c, e.r);
      out(k) = acc.real();
    }
    return out;
  }

  Matrix from_coords(const Eigen::Ref<const Eigen::VectorXd>& q) const {
    Matrix m = Matrix::Zero(n_, n_);
    for (Eigen::Index k = 0; k < size(); ++k)
      for (const auto& e : elem(k)) m(e.r, e.c) += q(k) * e.v;
    return m;
  }

 private:
  Eigen::Index n_;
  std::vector<std::vector<Entry>> elems_;
};

// Transpose of the first factor of a (da*db)-square matrix.
Matrix pt_first(const Matrix& m, Eigen::Index da, Eigen::Index db) {
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < da; ++i)
    for (Eigen::Index k = 0; k < da; ++k)
      out.block(k * db, i * db, db, db) = m.block(i * db, k * db, db, db);
  return out;
}

Matrix herm(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

double lambda_min(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

Matrix psd_part(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm(m));
  const Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * lam.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

// Largest alpha with M + alpha dM >= 0 (infinity when dM keeps M inside the cone).
double max_step(const Matrix& m, const Matrix& dm) {
  Eigen::LLT<Matrix> llt(herm(m));
  if (llt.info() != Eigen::Success) return 0.0;
  const Matrix linv_dm = llt.matrixL().solve(dm);
  const Matrix w = llt.matrixL().solve(linv_dm.adjoint()).adjoint();
  const double lam = lambda_min(w);
  return lam >= 0.0 ? std::numeric_limits<double>::infinity() : -1.0 / lam;
}

struct Blocks {
  Matrix b1, b2;
};

class PptProblem {
 public:
  PptProblem(const HermitianOperator& h)
      : h_(h.matrix()),
        da_(static_cast<Eigen::Index>(h.dims()[0])),
        db_(static_cast<Eigen::Index>(h.dims()[1])),
        n_(h_.rows()),
        basis_(n_, h_.imag().cwiseAbs().maxCoeff() == 0.0) {}

  Eigen::Index m() const { return 1 + basis_.size(); }
  Eigen::Index n() const { return n_; }
  const Matrix& h() const { return h_; }
  const HermBasis& basis() const { return basis_; }
  Matrix pt(const Matrix& w) const { return pt_first(w, da_, db_); }

  Eigen::VectorXd apply_a(const Matrix& w1, const Matrix& w2) const {
    Eigen::VectorXd out(m());
    out(0) = w1.trace().real();
    out.tail(basis_.size()) = basis_.coords(pt(w1)) - basis_.coords(w2);
    return out;
  }

  Blocks apply_at(const Eigen::VectorXd& y) const {
    const Matrix q = basis_.from_coords(y.tail(basis_.size()));
    Blocks out{pt(q), -q};
    out.b1.diagonal().array() += y(0);
    return out;
  }

  // Schur complement M_ij = <A*(e_i), herm(X A*(e_j) Z)>, built column by column
  // from the sparse basis elements.
  Eigen::MatrixXd schur(const Blocks& x, const Blocks& z) const {
    Eigen::MatrixXd mm(m(), m());
    mm.col(0) = apply_a(x.b1 * z.b1, Matrix::Zero(n_, n_));
    Matrix g1(n_, n_), g2(n_, n_);
    for (Eigen::Index k = 0; k < basis_.size(); ++k) {
      g1.setZero();
      g2.setZero();
      for (const auto& e : basis_.elem(k)) {
        // (r, c) = (i*db + j, k*db + l) moves to (k*db + j, i*db + l) under PT.
        const Eigen::Index i = e.r / db_, j = e.r % db_, kk = e.c / db_, l = e.c % db_;
        const Eigen::Index pr = kk * db_ + j, pc = i * db_ + l;
        g1.noalias() += e.v * x.b1.col(pr) * z.b1.row(pc);
        g2.noalias() -= e.v * x.b2.col(e.r) * z.b2.row(e.c);
      }
      mm.col(k + 1) = apply_a(g1, g2);
    }
    return 0.5 * (mm + mm.transpose());
  }

 private:
  Matrix h_;
  Eigen::Index da_, db_, n_;
  HermBasis basis_;
};

Blocks inverse(const Blocks& s) {
  auto inv = [](const Matrix& m) {
    Eigen::LLT<Matrix> llt(herm(m));
    return herm(llt.solve(Matrix::Identity(m.rows(), m.cols())));
  };
  return {inv(s.b1), inv(s.b2)};
}

double inner(const Blocks& a, const Blocks& b) {
  return (a.b1.adjoint() * b.b1).trace().real() + (a.b2.adjoint() * b.b2).trace().real();
}

double frob(const Blocks& a) { return std::sqrt(a.b1.squaredNorm() + a.b2.squaredNorm()); }

}  // namespace

PptResult ppt_lower(const HermitianOperator& hop, const PptOptions& options) {
  require(hop.num_subsystems() == 2, "ppt_lower: operator must have exactly two factors (flatten first)",
          ErrorCode::DimensionMismatch);
  const PptProblem prob(hop);
  const Eigen::Index n = prob.n();
  const Eigen::Index m = prob.m();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix zero = Matrix::Zero(n, n);

  Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
  b(0) = 1.0;
  const Blocks c{prob.h(), zero};
  const double c_norm = prob.h().norm();

  Eigen::SelfAdjointEigenSolver<Matrix> hes(prob.h(), Eigen::EigenvaluesOnly);
  const double h_scale = std::max(std::abs(hes.eigenvalues()(0)), std::abs(hes.eigenvalues()(n - 1)));

  Blocks x{id / double(n), id / double(n)};
  Blocks s{(1.0 + h_scale) * id, (1.0 + h_scale) * id};
  Eigen::VectorXd y = Eigen::VectorXd::Zero(m);

  PptResult res;
  res.lower = -std::numeric_limits<double>::infinity();

  auto certify = [&](const Eigen::VectorXd& yy) {
    const Matrix qp = psd_part(prob.basis().from_coords(yy.tail(m - 1)));
    const double cert = lambda_min(prob.h() - prob.pt(qp));
    if (cert > res.lower) {
      res.lower = cert;
      res.q = qp;
    }
  };

  for (std::size_t it = 0; it < options.max_iterations; ++it) {
    const Blocks aty = prob.apply_at(y);
    const Blocks rd{c.b1 - s.b1 - aty.b1, c.b2 - s.b2 - aty.b2};
    const Eigen::VectorXd rp = b - prob.apply_a(x.b1, x.b2);
    const double pobj = (prob.h() * x.b1).trace().real();
    const double dobj = y(0);
    res.primal_objective = pobj;
    res.dual_objective = dobj;
    res.primal_residual = rp.norm() / (1.0 + b.norm());
    res.dual_residual = frob(rd) / (1.0 + c_norm);
    res.duality_gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    res.iterations = it;
    res.rho = x.b1;
    certify(y);
    if (res.primal_residual <= options.feasibility_tol && res.dual_residual <= options.feasibility_tol &&
        res.duality_gap <= options.gap_tol) {
      res.converged = true;
      break;
    }

    const double mu = inner(x, s) / double(2 * n);
    const Blocks z = inverse(s);
    // Near the optimum the Schur matrix loses definiteness in double
    // precision; a tiny diagonal shift keeps the Newton step usable.
    Eigen::MatrixXd sm = prob.schur(x, z);
    Eigen::LLT<Eigen::MatrixXd> schur(sm);
    const double diag = sm.diagonal().cwiseAbs().maxCoeff();
    for (double shift = 1e-14; schur.info() != Eigen::Success && shift <= 1e-8; shift *= 100.0) {
      sm.diagonal().array() += shift * diag;
      schur.compute(sm);
    }
    if (schur.info() != Eigen::Success) break;

    const Eigen::VectorXd az = prob.apply_a(z.b1, z.b2);
    const Eigen::VectorXd a_xrz = prob.apply_a(herm(x.b1 * rd.b1 * z.b1), herm(x.b2 * rd.b2 * z.b2));

    auto direction = [&](double sigma, const Blocks* corr, Eigen::VectorXd& dy, Blocks& dx, Blocks& ds) {
      Eigen::VectorXd rhs = b - sigma * mu * az + a_xrz;
      if (corr) rhs += prob.apply_a(corr->b1, corr->b2);
      dy = schur.solve(rhs);
      const Blocks atdy = prob.apply_at(dy);
      ds = {rd.b1 - atdy.b1, rd.b2 - atdy.b2};
      dx = {sigma * mu * z.b1 - x.b1 - herm(x.b1 * ds.b1 * z.b1),
            sigma * mu * z.b2 - x.b2 - herm(x.b2 * ds.b2 * z.b2)};
      if (corr) {
        dx.b1 -= corr->b1;
        dx.b2 -= corr->b2;
      }
    };
    auto steps = [&](const Blocks& dx, const Blocks& ds, double tau) {
      const double ap = std::min({1.0, tau * max_step(x.b1, dx.b1), tau * max_step(x.b2, dx.b2)});
      const double ad = std::min({1.0, tau * max_step(s.b1, ds.b1), tau * max_step(s.b2, ds.b2)});
      return std::pair{ap, ad};
    };

    // Predictor.
    Eigen::VectorXd dy;
    Blocks dx, ds;
    direction(0.0, nullptr, dy, dx, ds);
    auto [ap, ad] = steps(dx, ds, 1.0);
    const Blocks xa{x.b1 + ap * dx.b1, x.b2 + ap * dx.b2};
    const Blocks sa{s.b1 + ad * ds.b1, s.b2 + ad * ds.b2};
    const double ratio = std::max(0.0, inner(xa, sa) / inner(x, s));
    const double sigma = std::min(1.0, ratio * ratio * ratio);

    // Corrector: second-order term herm(dXa dSa Z).
    const Blocks corr{herm(dx.b1 * ds.b1 * z.b1), herm(dx.b2 * ds.b2 * z.b2)};
    direction(sigma, &corr, dy, dx, ds);
    std::tie(ap, ad) = steps(dx, ds, 0.95);
    if (!(ap > 0.0 && ad > 0.0)) break;

    x.b1 += ap * dx.b1;
    x.b2 += ap * dx.b2;
    y += ad * dy;
    s.b1 += ad * ds.b1;
    s.b2 += ad * ds.b2;
    x.b1 = herm(x.b1);
    x.b2 = herm(x.b2);
    s.b1 = herm(s.b1);
    s.b2 = herm(s.b2);
    res.iterations = it + 1;
  }
  certify(y);
  return res;
}

PptResult ppt_lower(const HermitianOperator& h, std::span<const std::size_t> part_a, const PptOptions& options) {
  return ppt_lower(bipartition(h, part_a), options);
}

double ppt_lower_multipartite(const HermitianOperator& h, const PptOptions& options) {
  require(h.num_subsystems() >= 2, "ppt_lower_multipartite: need at least two factors");
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t cut = 1; cut < h.num_subsystems(); ++cut)
    best = std::max(best, ppt_lower(flatten(h, cut), options).lower);
  return best;
}

}  // namespace entgap
