#pragma once

#include <optional>
#include <vector>

#include "specmix/map_matrix.hpp"

namespace specmix {

enum class BalanceKind { classical_pi, quantum_sigma, general_B };

/// Certificate that T satisfies the detailed balance condition T B = B T*
/// for a positive-definite map B: diagonal pi classically, conjugation by
/// sqrt(sigma) quantumly, or a general positive-definite matrix.
struct DetailedBalanceCert {
  BalanceKind kind = BalanceKind::general_B;
  RealVector pi;       // classical_pi
  Matrix sigma;        // quantum_sigma, d x d density matrix
  Matrix B;            // general_B, D x D positive definite
  double residual = 0.0;  // ||T B - B T*||_inf

  /// Natural-representation matrix of the balance map on the D-dim space.
  Matrix balance_matrix() const;
  Matrix balance_sqrt() const;      // B^{1/2} as a D x D matrix
  Matrix balance_inv_sqrt() const;  // B^{-1/2}

  void validate(double tol_psd = 1e-12) const;
};

/// ||T B - B T*||_inf for the certificate's balance map.
double balance_residual(const TransitionMap& T, const DetailedBalanceCert& cert);

inline constexpr double kTolDbRel = 1e-8;  // residual tolerance, relative to ||T||_inf

bool cert_accepted(const TransitionMap& T, const DetailedBalanceCert& cert,
                   double tol_rel = kTolDbRel);

/// Eigensystem of T* orthonormal in the B-weighted inner product, restricted
/// to real eigenvalues in (-1, 1). Y_i columns live on the D-dim space.
struct L2EigenData {
  std::vector<double> lambdas;
  Matrix Y;  // D x r, column i is vec(Y_i)
  double gram_residual = 0.0;
  BalanceKind kind = BalanceKind::general_B;
  int base_dim = 0;  // quantum: Y_i reshape to base_dim x base_dim
};

L2EigenData build_l2_data(const TransitionMap& T, const DetailedBalanceCert& cert,
                          double tol_unit = 1e-8);

}  // namespace specmix
