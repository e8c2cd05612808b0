#pragma once

#include "specmix/map_matrix.hpp"

namespace specmix {

/// Operator norm of the map represented by M.
///  - op_inf: largest singular value (2->2 norm)
///  - one_to_one_classical: max column absolute sum
///  - one_to_one_hermitian: sup over Hermitian X of ||M(X)||_1 / ||X||_1,
///    reduced to rank-one projectors and solved by multi-start ascent.
double op_norm(const MapMatrix& M, NormKind norm, int base_dim = 0);

/// Trace norm of the image of the pure state psi psi^* under the superoperator
/// with natural representation M.
double trace_norm_of_image(const Matrix& M, const Vector& psi);

struct HermNormOptions {
  int restarts = 64;
  int max_iters = 500;
  double tol = 1e-10;
  std::uint64_t seed = 0x5eedULL;
};

double one_to_one_hermitian_norm(const Matrix& M, int base_dim,
                                 const HermNormOptions& opts = {});

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

enum class ConvertTarget { one_to_one, op_inf, diamond };

/// Two-sided norm conversion via the equivalence constants:
/// classical 1->1 vs op_inf differ by D^{1/2}, quantum by D^{1/4},
/// and the diamond norm lies in [v, D^{1/2} v] above the 1->1 norm.
Interval norm_convert(double value, NormKind from, ConvertTarget to,
                      MapKind kind, int D);

/// Multiplier c such that ||M||_to <= c ||M||_from for the given kind.
double conversion_factor(NormKind from, NormKind to, MapKind kind, int D);

}  // namespace specmix
