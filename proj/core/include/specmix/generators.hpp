#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "specmix/detailed_balance.hpp"
#include "specmix/map_matrix.hpp"

namespace specmix {

/// Lower-bidiagonal stochastic matrix with diagonal (lambda_1..lambda_{D-1}, 1)
/// and subdiagonal (1-lambda_1, ..., 1-lambda_{D-1}). Distance to stationarity
/// stays exactly 2 in 1->1 norm for n <= D-2.
TransitionMap slow_chain(const std::vector<double>& lambdas);

/// Metropolis-Hastings chain targeting pi with a symmetric stochastic proposal.
/// The returned certificate is exact by construction.
std::pair<TransitionMap, DetailedBalanceCert> metropolis_chain(
    const RealVector& pi, const RealMatrix& proposal);

/// Natural representation of X -> (1-p) X + p sigma tr X, detailed balanced
/// with respect to B_sigma(X) = sqrt(sigma) X sqrt(sigma).
std::pair<TransitionMap, DetailedBalanceCert> sigma_depolarizing(
    const Matrix& sigma, double p);

struct PinchingMixTerm {
  // partition of {0..d-1} into blocks -> block pinching; a single block of all
  // indices is the identity, singleton blocks give the full pinching.
  std::vector<std::vector<int>> partition;  // used when depolarizing_p < 0
  double depolarizing_p = -1.0;             // >= 0 -> depolarizing term instead
  double weight = 0.0;
};

/// Convex combination of sigma-detailed-balanced channels (block pinchings in
/// the sigma eigenbasis and depolarizing terms). sigma must be diagonal.
std::pair<TransitionMap, DetailedBalanceCert> pinching_mix(
    const Matrix& sigma, const std::vector<PinchingMixTerm>& terms);

/// Model operator M_B on the |m|-dimensional model space K_B for distinct
/// zeros inside the disc, in an orthonormal basis of Cauchy kernels. Pinned by
/// postconditions: spectrum equals the zeros, ||M_B||_inf <= 1, and
/// ||M_B^n||_inf = 1 for n < |m|.
MapMatrix model_operator(const std::vector<Complex>& zeros);

/// Direct sum of a unitary block and M_B; generates the slow contractive
/// semigroup with prescribed minimal polynomial.
MapMatrix direct_sum(const Matrix& unitary_block, const MapMatrix& model_op);

TransitionMap random_stochastic(int d, std::uint64_t seed);

TransitionMap random_channel(int d, int kraus_count, std::uint64_t seed);

struct JordanBlockSpec {
  Complex lambda;
  int size;
};

/// Jordan form conjugated by a seeded random similarity whose condition
/// number equals kappa_target (orthogonal factor times diagonal scaling).
MapMatrix jordan_synthetic(const std::vector<JordanBlockSpec>& blocks,
                           double kappa_target, std::uint64_t seed);

}  // namespace specmix
