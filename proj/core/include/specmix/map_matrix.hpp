#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace specmix {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Dense square matrix representation of a linear map on a D-dimensional space.
struct MapMatrix {
  Matrix entries;

  MapMatrix() = default;
  explicit MapMatrix(Matrix m);

  int dim() const { return static_cast<int>(entries.rows()); }
};

enum class MapKind { classical, quantum_natural, generic };

enum class NormKind { op_inf, one_to_one_classical, one_to_one_hermitian };

std::string to_string(MapKind k);
std::string to_string(NormKind k);
MapKind map_kind_from_string(const std::string& s);
NormKind norm_kind_from_string(const std::string& s);

struct PowerBound {
  NormKind norm;
  double value;  // sup_n ||T^n|| in that norm is <= value
};

/// Transition map of a discrete-time semigroup: stochastic matrix, quantum
/// channel in natural representation, or a generic power-bounded map.
struct TransitionMap {
  MapMatrix matrix;
  MapKind kind = MapKind::generic;
  int base_dim = 0;  // quantum only, dim() == base_dim^2
  std::vector<PowerBound> power_bounds;

  int dim() const { return matrix.dim(); }

  /// Declared power bound for the given norm. Falls back to the kind-specific
  /// default (classical/1->1 -> 1, quantum/herm -> 1, quantum/op_inf -> D^{1/4},
  /// classical/op_inf -> D^{1/2}); throws for generic maps without a stored bound.
  double power_bound(NormKind norm) const;

  void validate(double tol = 1e-9) const;
};

// Column-major matricization conventions for superoperators acting on d x d
// matrices, D = d^2. vec stacks columns; natural representation N of a map
// X -> sum_i A_i X B_i is N = sum_i B_i^T (x) A_i.
Vector vec(const Matrix& X);
Matrix unvec(const Vector& v, int d);
Matrix kron(const Matrix& A, const Matrix& B);

/// Natural representation of X -> A X B.
Matrix sandwich_rep(const Matrix& A, const Matrix& B);

bool is_finite(const Matrix& M);

}  // namespace specmix
