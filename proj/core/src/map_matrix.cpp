#include "specmix/map_matrix.hpp"

#include <cmath>

#include "specmix/norms.hpp"

namespace specmix {

MapMatrix::MapMatrix(Matrix m) : entries(std::move(m)) {
  if (entries.rows() != entries.cols())
    throw std::invalid_argument("MapMatrix: matrix must be square");
  if (!is_finite(entries))
    throw std::invalid_argument("MapMatrix: entries must be finite");
}

bool is_finite(const Matrix& M) {
  for (Eigen::Index j = 0; j < M.cols(); ++j)
    for (Eigen::Index i = 0; i < M.rows(); ++i)
      if (!std::isfinite(M(i, j).real()) || !std::isfinite(M(i, j).imag()))
        return false;
  return true;
}

std::string to_string(MapKind k) {
  switch (k) {
    case MapKind::classical: return "classical";
    case MapKind::quantum_natural: return "quantum_natural";
    case MapKind::generic: return "generic";
  }
  return "generic";
}

std::string to_string(NormKind k) {
  switch (k) {
    case NormKind::op_inf: return "op_inf";
    case NormKind::one_to_one_classical: return "one_to_one_classical";
    case NormKind::one_to_one_hermitian: return "one_to_one_hermitian";
  }
  return "op_inf";
}

MapKind map_kind_from_string(const std::string& s) {
  if (s == "classical") return MapKind::classical;
  if (s == "quantum_natural") return MapKind::quantum_natural;
  if (s == "generic") return MapKind::generic;
  throw std::invalid_argument("unknown map kind: " + s);
}

NormKind norm_kind_from_string(const std::string& s) {
  if (s == "op_inf") return NormKind::op_inf;
  if (s == "one_to_one_classical") return NormKind::one_to_one_classical;
  if (s == "one_to_one_hermitian") return NormKind::one_to_one_hermitian;
  throw std::invalid_argument("unknown norm kind: " + s);
}

double TransitionMap::power_bound(NormKind norm) const {
  for (const auto& pb : power_bounds)
    if (pb.norm == norm) return pb.value;
  const double D = static_cast<double>(dim());
  if (kind == MapKind::classical) {
    if (norm == NormKind::one_to_one_classical) return 1.0;
    if (norm == NormKind::op_inf) return std::sqrt(D);
  } else if (kind == MapKind::quantum_natural) {
    if (norm == NormKind::one_to_one_hermitian) return 1.0;
    if (norm == NormKind::op_inf) return std::pow(D, 0.25);
  }
  throw std::invalid_argument(
      "no power bound available for norm " + to_string(norm) +
      " on a " + to_string(kind) + " map");
}

void TransitionMap::validate(double tol) const {
  const int D = dim();
  if (D <= 0) throw std::invalid_argument("TransitionMap: empty matrix");
  const Matrix& M = matrix.entries;
  if (!is_finite(M)) throw std::invalid_argument("TransitionMap: non-finite entries");

  if (kind == MapKind::classical) {
    for (int j = 0; j < D; ++j) {
      double colsum = 0.0;
      for (int i = 0; i < D; ++i) {
        const Complex e = M(i, j);
        if (std::abs(e.imag()) > tol)
          throw std::invalid_argument("classical map has complex entries");
        if (e.real() < -tol)
          throw std::invalid_argument("classical map has negative entries");
        colsum += e.real();
      }
      if (std::abs(colsum - 1.0) > tol * D)
        throw std::invalid_argument("classical map columns do not sum to 1");
    }
  } else if (kind == MapKind::quantum_natural) {
    if (base_dim <= 0 || base_dim * base_dim != D)
      throw std::invalid_argument("quantum map needs base_dim with D = d^2");
    // trace preservation: the adjoint fixes the identity matrix
    const Vector id_vec = vec(Matrix::Identity(base_dim, base_dim));
    const Vector r = M.adjoint() * id_vec - id_vec;
    if (r.lpNorm<Eigen::Infinity>() > tol * base_dim)
      throw std::invalid_argument("quantum map is not trace preserving");
  }
}

Vector vec(const Matrix& X) {
  return Eigen::Map<const Vector>(X.data(), X.size());
}

Matrix unvec(const Vector& v, int d) {
  if (v.size() != static_cast<Eigen::Index>(d) * d)
    throw std::invalid_argument("unvec: size mismatch");
  return Eigen::Map<const Matrix>(v.data(), d, d);
}

Matrix kron(const Matrix& A, const Matrix& B) {
  Matrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

Matrix sandwich_rep(const Matrix& A, const Matrix& B) {
  // vec(A X B) = (B^T kron A) vec(X)
  return kron(B.transpose(), A);
}

}  // namespace specmix
