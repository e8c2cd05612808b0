#include "specmix/norms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/SVD>

namespace specmix {

namespace {

double largest_singular_value(const Matrix& M) {
  if (M.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(M);
  return svd.singularValues()(0);
}

double max_column_abs_sum(const Matrix& M) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < M.cols(); ++j)
    best = std::max(best, M.col(j).cwiseAbs().sum());
  return best;
}

Vector random_pure_state(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector psi(d);
  for (int i = 0; i < d; ++i) psi(i) = Complex(g(rng), g(rng));
  psi.normalize();
  return psi;
}

}  // namespace

double trace_norm_of_image(const Matrix& M, const Vector& psi) {
  const int d = static_cast<int>(psi.size());
  const Matrix X = psi * psi.adjoint();
  const Matrix Y = unvec(M * vec(X), d);
  Eigen::JacobiSVD<Matrix> svd(Y);
  return svd.singularValues().sum();
}

double one_to_one_hermitian_norm(const Matrix& M, int base_dim,
                                 const HermNormOptions& opts) {
  const int d = base_dim;
  if (d <= 0 || static_cast<Eigen::Index>(d) * d != M.rows())
    throw std::invalid_argument("one_to_one_hermitian_norm: bad base_dim");
  std::mt19937_64 rng(opts.seed);
  double best = 0.0;

  for (int r = 0; r < opts.restarts; ++r) {
    Vector psi = random_pure_state(d, rng);
    double f = 0.0;
    for (int it = 0; it < opts.max_iters; ++it) {
      const Matrix Y = unvec(M * vec(Matrix(psi * psi.adjoint())), d);
      Eigen::JacobiSVD<Matrix> svd(Y, Eigen::ComputeFullU | Eigen::ComputeFullV);
      const double fn = svd.singularValues().sum();
      // dual certificate G with ||G||_inf = 1 and tr(G^* Y) = ||Y||_1
      const Matrix G = svd.matrixU() * svd.matrixV().adjoint();
      // f(psi) >= psi^* Q_H psi with equality at the current psi; ascending
      // to the top eigenvector of Q_H is monotone in f
      const Matrix Q = unvec(M.adjoint() * vec(G), d);
      const Matrix QH = 0.5 * (Q + Q.adjoint());
      Eigen::SelfAdjointEigenSolver<Matrix> es(QH);
      psi = es.eigenvectors().col(d - 1);
      if (fn - f <= opts.tol) {
        f = fn;
        break;
      }
      f = fn;
    }
    best = std::max(best, f);
  }
  return best;
}

double op_norm(const MapMatrix& M, NormKind norm, int base_dim) {
  switch (norm) {
    case NormKind::op_inf:
      return largest_singular_value(M.entries);
    case NormKind::one_to_one_classical:
      return max_column_abs_sum(M.entries);
    case NormKind::one_to_one_hermitian: {
      if (base_dim <= 0)
        throw std::invalid_argument("op_norm: hermitian norm requires base_dim");
      if (static_cast<Eigen::Index>(base_dim) * base_dim != M.entries.rows())
        throw std::invalid_argument("op_norm: dim must equal base_dim^2");
      return one_to_one_hermitian_norm(M.entries, base_dim);
    }
  }
  throw std::logic_error("op_norm: unreachable");
}

double conversion_factor(NormKind from, NormKind to, MapKind kind, int D) {
  if (from == to) return 1.0;
  const double Dd = static_cast<double>(D);
  const bool classical = (kind == MapKind::classical);
  const double c = classical ? std::sqrt(Dd) : std::pow(Dd, 0.25);
  const bool from_11 = from != NormKind::op_inf;
  const bool to_11 = to != NormKind::op_inf;
  if (from_11 == to_11)
    throw std::invalid_argument("conversion_factor: unsupported norm pair");
  // ||M||_{1->1} <= c ||M||_inf and ||M||_inf <= c ||M||_{1->1}
  return c;
}

Interval norm_convert(double value, NormKind from, ConvertTarget to,
                      MapKind kind, int D) {
  if (value < 0.0) throw std::invalid_argument("norm_convert: negative value");
  if (value == 0.0) return {0.0, 0.0};
  const double Dd = static_cast<double>(D);

  if (to == ConvertTarget::diamond) {
    if (from == NormKind::op_inf || kind == MapKind::classical)
      throw std::invalid_argument("norm_convert: diamond needs a quantum 1->1 value");
    return {value, std::sqrt(Dd) * value};
  }

  const bool from_11 = from != NormKind::op_inf;
  const bool to_11 = to == ConvertTarget::one_to_one;
  if (from_11 == to_11)
    throw std::invalid_argument("norm_convert: unsupported (from,to) combination");
  const double c = kind == MapKind::classical ? std::sqrt(Dd) : std::pow(Dd, 0.25);
  return {value / c, value * c};
}

}  // namespace specmix
