#include "specmix/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace specmix {

namespace {

Matrix complex_gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix M(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) M(i, j) = Complex(g(rng), g(rng));
  return M;
}

Matrix hermitian_power(const Matrix& H, double p) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(H);
  RealVector powered = es.eigenvalues().array().pow(p);
  return es.eigenvectors() * powered.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

TransitionMap slow_chain(const std::vector<double>& lambdas) {
  for (double l : lambdas)
    if (l < 0.0 || l >= 1.0)
      throw std::invalid_argument("slow_chain: lambdas must lie in [0,1)");
  const int D = static_cast<int>(lambdas.size()) + 1;
  Matrix T = Matrix::Zero(D, D);
  for (int i = 0; i < D - 1; ++i) {
    T(i, i) = lambdas[i];
    T(i + 1, i) = 1.0 - lambdas[i];
  }
  T(D - 1, D - 1) = 1.0;
  TransitionMap out{MapMatrix(std::move(T)), MapKind::classical, 0,
                    {{NormKind::one_to_one_classical, 1.0}}};
  out.validate();
  return out;
}

std::pair<TransitionMap, DetailedBalanceCert> metropolis_chain(
    const RealVector& pi, const RealMatrix& proposal) {
  const int d = static_cast<int>(pi.size());
  if (pi.minCoeff() <= 0.0)
    throw std::invalid_argument("metropolis_chain: pi must be strictly positive");
  if ((proposal - proposal.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("metropolis_chain: proposal must be symmetric");

  Matrix T = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    double off = 0.0;
    for (int i = 0; i < d; ++i) {
      if (i == j) continue;
      const double a = proposal(i, j) * std::min(1.0, pi(i) / pi(j));
      T(i, j) = a;
      off += a;
    }
    T(j, j) = 1.0 - off;
  }
  TransitionMap map{MapMatrix(std::move(T)), MapKind::classical, 0,
                    {{NormKind::one_to_one_classical, 1.0}}};
  map.validate();

  DetailedBalanceCert cert;
  cert.kind = BalanceKind::classical_pi;
  cert.pi = pi / pi.sum();
  cert.residual = balance_residual(map, cert);
  return {std::move(map), std::move(cert)};
}

std::pair<TransitionMap, DetailedBalanceCert> sigma_depolarizing(
    const Matrix& sigma, double p) {
  const int d = static_cast<int>(sigma.rows());
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("sigma_depolarizing: p in [0,1]");
  Eigen::SelfAdjointEigenSolver<Matrix> es(sigma);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("sigma_depolarizing: sigma must be full rank");

  const int D = d * d;
  const Vector id_vec = vec(Matrix::Identity(d, d));
  Matrix T = (1.0 - p) * Matrix::Identity(D, D) +
             p * vec(sigma) * id_vec.transpose();
  TransitionMap map{MapMatrix(std::move(T)), MapKind::quantum_natural, d,
                    {{NormKind::one_to_one_hermitian, 1.0},
                     {NormKind::op_inf, std::pow(static_cast<double>(D), 0.25)}}};
  map.validate();

  DetailedBalanceCert cert;
  cert.kind = BalanceKind::quantum_sigma;
  cert.sigma = sigma;
  cert.residual = balance_residual(map, cert);
  return {std::move(map), std::move(cert)};
}

std::pair<TransitionMap, DetailedBalanceCert> pinching_mix(
    const Matrix& sigma, const std::vector<PinchingMixTerm>& terms) {
  const int d = static_cast<int>(sigma.rows());
  bool diagonal = true;
  for (int i = 0; i < d && diagonal; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j && std::abs(sigma(i, j)) > 1e-12) {
        diagonal = false;
        break;
      }
  if (!diagonal) {
    // pinching only commutes with sigma in its eigenbasis: rotate there,
    // build the map, rotate back
    Eigen::SelfAdjointEigenSolver<Matrix> es(sigma);
    Matrix diag_sigma = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) diag_sigma(i, i) = es.eigenvalues()(i);
    auto [T_diag, unused] = pinching_mix(diag_sigma, terms);
    const Matrix& U = es.eigenvectors();
    const Matrix S = sandwich_rep(U, U.adjoint());
    TransitionMap map{MapMatrix(Matrix(S * T_diag.matrix.entries * S.adjoint())),
                      MapKind::quantum_natural, d,
                      {{NormKind::one_to_one_hermitian, 1.0},
                       {NormKind::op_inf,
                        std::pow(static_cast<double>(d) * d, 0.25)}}};
    map.validate();
    DetailedBalanceCert cert;
    cert.kind = BalanceKind::quantum_sigma;
    cert.sigma = sigma;
    cert.residual = balance_residual(map, cert);
    return {std::move(map), std::move(cert)};
  }

  double wsum = 0.0;
  for (const auto& t : terms) {
    if (t.weight < 0.0) throw std::invalid_argument("pinching_mix: negative weight");
    wsum += t.weight;
  }
  if (std::abs(wsum - 1.0) > 1e-12)
    throw std::invalid_argument("pinching_mix: weights must be convex");

  const int D = d * d;
  Matrix T = Matrix::Zero(D, D);
  for (const auto& t : terms) {
    if (t.depolarizing_p >= 0.0) {
      T += t.weight * sigma_depolarizing(sigma, t.depolarizing_p).first.matrix.entries;
    } else {
      std::vector<int> block_of(d, -1);
      for (size_t b = 0; b < t.partition.size(); ++b)
        for (int idx : t.partition[b]) {
          if (idx < 0 || idx >= d || block_of[idx] != -1)
            throw std::invalid_argument("pinching_mix: invalid partition");
          block_of[idx] = static_cast<int>(b);
        }
      for (int idx = 0; idx < d; ++idx)
        if (block_of[idx] < 0)
          throw std::invalid_argument("pinching_mix: partition must cover all indices");
      Matrix P = Matrix::Zero(D, D);
      for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i)
          if (block_of[i] == block_of[j]) P(i + j * d, i + j * d) = 1.0;
      T += t.weight * P;
    }
  }
  TransitionMap map{MapMatrix(std::move(T)), MapKind::quantum_natural, d,
                    {{NormKind::one_to_one_hermitian, 1.0},
                     {NormKind::op_inf, std::pow(static_cast<double>(D), 0.25)}}};
  map.validate();

  DetailedBalanceCert cert;
  cert.kind = BalanceKind::quantum_sigma;
  cert.sigma = sigma;
  cert.residual = balance_residual(map, cert);
  return {std::move(map), std::move(cert)};
}

MapMatrix model_operator(const std::vector<Complex>& zeros) {
  const int m = static_cast<int>(zeros.size());
  if (m == 0) throw std::invalid_argument("model_operator: need at least one zero");
  for (int i = 0; i < m; ++i) {
    if (std::abs(zeros[i]) >= 1.0)
      throw std::invalid_argument("model_operator: zeros must lie inside the disc");
    for (int j = i + 1; j < m; ++j)
      if (std::abs(zeros[i] - zeros[j]) < 1e-12)
        throw std::invalid_argument("model_operator: zeros must be distinct");
  }

  // Gram matrix of the Cauchy reproducing kernels at the zeros; the adjoint
  // of the model operator acts diagonally on the kernels.
  Matrix G(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      G(i, j) = 1.0 / (1.0 - zeros[i] * std::conj(zeros[j]));

  Eigen::SelfAdjointEigenSolver<Matrix> es(G);
  if (es.eigenvalues().minCoeff() < 1e-12 * es.eigenvalues().maxCoeff())
    throw std::invalid_argument("model_operator: Gram matrix numerically singular "
                                "(zeros too close)");
  const Matrix Gh = hermitian_power(G, 0.5);
  const Matrix Gih = hermitian_power(G, -0.5);

  Vector conj_zeros(m);
  for (int i = 0; i < m; ++i) conj_zeros(i) = std::conj(zeros[i]);
  const Matrix adj = Gh * conj_zeros.asDiagonal() * Gih;
  return MapMatrix(Matrix(adj.adjoint()));
}

MapMatrix direct_sum(const Matrix& unitary_block, const MapMatrix& model_op) {
  const int a = static_cast<int>(unitary_block.rows());
  const int b = model_op.dim();
  Matrix S = Matrix::Zero(a + b, a + b);
  S.topLeftCorner(a, a) = unitary_block;
  S.bottomRightCorner(b, b) = model_op.entries;
  return MapMatrix(std::move(S));
}

TransitionMap random_stochastic(int d, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("random_stochastic: d >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix T(d, d);
  for (int j = 0; j < d; ++j) {
    // flat simplex draw: normalized unit exponentials
    double sum = 0.0;
    std::vector<double> col(d);
    for (int i = 0; i < d; ++i) {
      col[i] = -std::log(1.0 - u(rng));
      sum += col[i];
    }
    for (int i = 0; i < d; ++i) T(i, j) = col[i] / sum;
  }
  TransitionMap out{MapMatrix(std::move(T)), MapKind::classical, 0,
                    {{NormKind::one_to_one_classical, 1.0}}};
  out.validate();
  return out;
}

TransitionMap random_channel(int d, int kraus_count, std::uint64_t seed) {
  if (d < 2 || kraus_count < 1)
    throw std::invalid_argument("random_channel: need d >= 2, kraus_count >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Matrix> kraus;
  Matrix S = Matrix::Zero(d, d);
  for (int k = 0; k < kraus_count; ++k) {
    kraus.push_back(complex_gaussian(d, d, rng) / std::sqrt(2.0 * d));
    S += kraus.back().adjoint() * kraus.back();
  }
  const Matrix Sinv_half = hermitian_power(S, -0.5);
  const int D = d * d;
  Matrix T = Matrix::Zero(D, D);
  for (auto& K : kraus) {
    K = K * Sinv_half;
    T += kron(K.conjugate(), K);
  }
  TransitionMap out{MapMatrix(std::move(T)), MapKind::quantum_natural, d,
                    {{NormKind::one_to_one_hermitian, 1.0},
                     {NormKind::op_inf, std::pow(static_cast<double>(D), 0.25)}}};
  out.validate();
  return out;
}

MapMatrix jordan_synthetic(const std::vector<JordanBlockSpec>& blocks,
                           double kappa_target, std::uint64_t seed) {
  if (kappa_target < 1.0)
    throw std::invalid_argument("jordan_synthetic: kappa_target >= 1");
  int D = 0;
  for (const auto& b : blocks) {
    if (std::abs(b.lambda) >= 1.0)
      throw std::invalid_argument("jordan_synthetic: |lambda| < 1 per block");
    if (b.size < 1) throw std::invalid_argument("jordan_synthetic: block size >= 1");
    D += b.size;
  }
  Matrix J = Matrix::Zero(D, D);
  int at = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.size; ++i) {
      J(at + i, at + i) = b.lambda;
      if (i + 1 < b.size) J(at + i, at + i + 1) = 1.0;
    }
    at += b.size;
  }
  if (kappa_target == 1.0) return MapMatrix(std::move(J));

  std::mt19937_64 rng(seed);
  Eigen::HouseholderQR<Matrix> qr(complex_gaussian(D, D, rng));
  const Matrix Q = qr.householderQ() * Matrix::Identity(D, D);
  // unitary times diagonal scaling: cond(S) is exactly the scaling ratio
  RealVector scales(D);
  for (int i = 0; i < D; ++i)
    scales(i) = std::pow(kappa_target, D == 1 ? 0.0 : static_cast<double>(i) / (D - 1));
  const Matrix S = Q * scales.cast<Complex>().asDiagonal();
  const Matrix Sinv = scales.cwiseInverse().cast<Complex>().asDiagonal() * Q.adjoint();
  return MapMatrix(Matrix(S * J * Sinv));
}

}  // namespace specmix
