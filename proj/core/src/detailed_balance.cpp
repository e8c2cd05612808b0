#include "specmix/detailed_balance.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace specmix {

namespace {

double inf_norm(const Matrix& M) {
  Eigen::JacobiSVD<Matrix> svd(M);
  return svd.singularValues()(0);
}

Matrix hermitian_power(const Matrix& H, double p) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(H);
  const RealVector& ev = es.eigenvalues();
  if (ev.minCoeff() <= 0.0)
    throw std::invalid_argument("hermitian_power: matrix not positive definite");
  RealVector powered = ev.array().pow(p);
  return es.eigenvectors() * powered.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

void DetailedBalanceCert::validate(double tol_psd) const {
  switch (kind) {
    case BalanceKind::classical_pi: {
      if (pi.size() == 0) throw std::invalid_argument("cert: empty pi");
      if (pi.minCoeff() <= 0.0)
        throw std::invalid_argument("cert: pi entries must be positive");
      if (std::abs(pi.sum() - 1.0) > 1e-9)
        throw std::invalid_argument("cert: pi must sum to 1");
      break;
    }
    case BalanceKind::quantum_sigma: {
      if ((sigma - sigma.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("cert: sigma not Hermitian");
      Eigen::SelfAdjointEigenSolver<Matrix> es(sigma);
      if (es.eigenvalues().minCoeff() <= tol_psd)
        throw std::invalid_argument("cert: sigma not positive definite");
      if (std::abs(sigma.trace().real() - 1.0) > 1e-9)
        throw std::invalid_argument("cert: sigma must have unit trace");
      break;
    }
    case BalanceKind::general_B: {
      if ((B - B.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("cert: B not Hermitian");
      Eigen::SelfAdjointEigenSolver<Matrix> es(B);
      if (es.eigenvalues().minCoeff() <= tol_psd)
        throw std::invalid_argument("cert: B not positive definite");
      break;
    }
  }
}

Matrix DetailedBalanceCert::balance_matrix() const {
  switch (kind) {
    case BalanceKind::classical_pi:
      return Matrix(pi.cast<Complex>().asDiagonal());
    case BalanceKind::quantum_sigma: {
      const Matrix rt = hermitian_power(sigma, 0.5);
      return sandwich_rep(rt, rt);
    }
    case BalanceKind::general_B:
      return B;
  }
  throw std::logic_error("unreachable");
}

Matrix DetailedBalanceCert::balance_sqrt() const {
  switch (kind) {
    case BalanceKind::classical_pi:
      return Matrix(pi.array().sqrt().matrix().cast<Complex>().asDiagonal());
    case BalanceKind::quantum_sigma: {
      const Matrix q = hermitian_power(sigma, 0.25);
      return sandwich_rep(q, q);
    }
    case BalanceKind::general_B:
      return hermitian_power(B, 0.5);
  }
  throw std::logic_error("unreachable");
}

Matrix DetailedBalanceCert::balance_inv_sqrt() const {
  switch (kind) {
    case BalanceKind::classical_pi:
      return Matrix(pi.array().rsqrt().matrix().cast<Complex>().asDiagonal());
    case BalanceKind::quantum_sigma: {
      const Matrix q = hermitian_power(sigma, -0.25);
      return sandwich_rep(q, q);
    }
    case BalanceKind::general_B:
      return hermitian_power(B, -0.5);
  }
  throw std::logic_error("unreachable");
}

double balance_residual(const TransitionMap& T, const DetailedBalanceCert& cert) {
  const Matrix B = cert.balance_matrix();
  const Matrix& M = T.matrix.entries;
  return inf_norm(M * B - B * M.adjoint());
}

bool cert_accepted(const TransitionMap& T, const DetailedBalanceCert& cert,
                   double tol_rel) {
  return balance_residual(T, cert) <= tol_rel * std::max(1.0, inf_norm(T.matrix.entries));
}

L2EigenData build_l2_data(const TransitionMap& T, const DetailedBalanceCert& cert,
                          double tol_unit) {
  const Matrix B = cert.balance_matrix();
  const Matrix Bh = cert.balance_sqrt();
  const Matrix Bih = cert.balance_inv_sqrt();
  const Matrix R = Bih * T.matrix.entries * Bh;
  const double herm_res = (R - R.adjoint()).cwiseAbs().maxCoeff();
  if (herm_res > 1e-7 * std::max(1.0, inf_norm(R)))
    throw std::runtime_error(
        "build_l2_data: conjugated map is not Hermitian; certificate invalid");

  Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(0.5 * (R + R.adjoint())));
  const RealVector& lam = es.eigenvalues();

  L2EigenData out;
  out.kind = cert.kind;
  out.base_dim = T.base_dim;
  std::vector<int> keep;
  for (int i = 0; i < lam.size(); ++i)
    if (std::abs(lam(i)) < 1.0 - tol_unit) keep.push_back(i);

  out.Y.resize(B.rows(), static_cast<Eigen::Index>(keep.size()));
  for (size_t t = 0; t < keep.size(); ++t) {
    out.lambdas.push_back(lam(keep[t]));
    out.Y.col(static_cast<Eigen::Index>(t)) = Bih * es.eigenvectors().col(keep[t]);
  }

  double worst = 0.0;
  const Matrix G = out.Y.adjoint() * B * out.Y;
  for (Eigen::Index i = 0; i < G.rows(); ++i)
    for (Eigen::Index j = 0; j < G.cols(); ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(G(i, j) - Complex(target, 0.0)));
    }
  out.gram_residual = worst;
  return out;
}

}  // namespace specmix
