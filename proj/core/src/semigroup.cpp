#include "specmix/semigroup.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/LU>

namespace specmix {

MapMatrix power(const MapMatrix& M, long n) {
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  const int D = M.dim();
  Matrix result = Matrix::Identity(D, D);
  Matrix base = M.entries;
  long e = n;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return MapMatrix(std::move(result));
}

MapMatrix asymptotic_part(const MapMatrix& M, const Eigendecomposition& eig,
                          double tol_cluster, double tol_unit) {
  const int D = M.dim();
  const double spectral_radius = eig.values.cwiseAbs().maxCoeff();
  if (spectral_radius > 1.0 + tol_unit)
    throw std::invalid_argument("asymptotic_part: spectral radius exceeds 1, "
                                "semigroup not bounded");
  if (spectral_radius < 1.0 - tol_unit)
    return MapMatrix(Matrix::Zero(D, D));

  const auto clusters = cluster_eigenvalues(eig.values, tol_cluster);
  Matrix T_inf = Matrix::Zero(D, D);
  for (const auto& c : clusters) {
    if (std::abs(c.representative) < 1.0 - tol_unit) continue;
    const int k = c.multiplicity;
    Matrix V(D, k), W(D, k);
    for (int t = 0; t < k; ++t) {
      V.col(t) = eig.right.col(c.members[t]);
      W.col(t) = eig.left.col(c.members[t]);
    }
    // spectral projector P = V (W^* V)^{-1} W^*; a numerically singular
    // pairing signals a nontrivial Jordan block on the unit circle
    const Matrix G = W.adjoint() * V;
    Eigen::JacobiSVD<Matrix> svd(G, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double smin = svd.singularValues()(k - 1);
    if (smin < 1e-8)
      throw std::runtime_error(
          "asymptotic_part: defective unit-modulus eigenvalue (unbounded "
          "semigroup)");
    const Matrix P = V * G.fullPivLu().solve(W.adjoint());
    // normalize the representative onto the unit circle
    const Complex lambda = c.representative / std::abs(c.representative);
    T_inf += lambda * P;
  }
  return MapMatrix(std::move(T_inf));
}

MapMatrix asymptotic_part(const TransitionMap& T, double tol_unit) {
  const auto eig = eigendecompose(T.matrix);
  return asymptotic_part(T.matrix, eig, AnalysisOptions{}.tol_cluster, tol_unit);
}

std::vector<DistancePoint> distance_curve(const TransitionMap& T,
                                          const MapMatrix& T_inf,
                                          const std::vector<long>& n_values,
                                          NormKind norm,
                                          double crosscheck_tol) {
  const MapMatrix A(Matrix(T.matrix.entries - T_inf.entries));
  std::vector<DistancePoint> out;
  out.reserve(n_values.size());
  size_t idx = 0;
  for (long n : n_values) {
    const MapMatrix An = power(A, n);
    const double actual = op_norm(An, norm, T.base_dim);
    // subsample cross-check of the power identity T^n - T_inf^n = (T - T_inf)^n
    if (idx % 8 == 0 && n <= 128) {
      const Matrix direct =
          power(T.matrix, n).entries - power(T_inf, n).entries;
      const double diff = (direct - An.entries).cwiseAbs().maxCoeff();
      if (diff > crosscheck_tol * std::max(1.0, direct.cwiseAbs().maxCoeff()) +
                     crosscheck_tol)
        throw std::runtime_error(
            "distance_curve: power identity cross-check failed, residual " +
            std::to_string(diff));
    }
    out.push_back({n, actual});
    ++idx;
  }
  return out;
}

}  // namespace specmix
