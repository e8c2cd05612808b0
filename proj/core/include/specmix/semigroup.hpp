#pragma once

#include <vector>

#include "specmix/map_matrix.hpp"
#include "specmix/norms.hpp"
#include "specmix/spectral.hpp"

namespace specmix {

/// M^n by binary exponentiation; M^0 is the identity.
MapMatrix power(const MapMatrix& M, long n);

inline constexpr double kTolUnit = 1e-8;  // |lambda| >= 1 - kTolUnit joins T_inf

/// Asymptotic part T_inf = sum over unit-modulus eigenvalue clusters of
/// lambda * P, with one spectral projector per cluster built from matched
/// right/left eigenvector blocks. Zero when the spectral radius is < 1 - tol.
/// Throws if a unit-modulus cluster is defective (unbounded semigroup).
MapMatrix asymptotic_part(const TransitionMap& T, double tol_unit = kTolUnit);
MapMatrix asymptotic_part(const MapMatrix& M, const Eigendecomposition& eig,
                          double tol_cluster, double tol_unit = kTolUnit);

struct DistancePoint {
  long n;
  double actual;
};

/// actual(n) = ||(T - T_inf)^n|| in the requested norm. Cross-checks
/// ||T^n - T_inf^n|| agreement on a subsample of the grid.
std::vector<DistancePoint> distance_curve(const TransitionMap& T,
                                          const MapMatrix& T_inf,
                                          const std::vector<long>& n_values,
                                          NormKind norm,
                                          double crosscheck_tol = 1e-8);

}  // namespace specmix
