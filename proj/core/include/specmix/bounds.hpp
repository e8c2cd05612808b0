#pragma once

#include <string>

#include "specmix/blaschke.hpp"
#include "specmix/detailed_balance.hpp"
#include "specmix/spectral.hpp"

namespace specmix {

// Double-precision constant used in the Wiener-algebra bounds; pinned for
// bit-stable golden files.
inline constexpr double kESquared = 7.38905609893065;
inline constexpr double kE = 2.718281828459045;

struct BoundResult {
  double value = 0.0;
  bool applicable = false;
};

inline BoundResult not_applicable() { return {0.0, false}; }

/// Hypothesis of the Wiener-algebra theorems: n > mu / (1 - mu).
bool wiener_hypothesis(double mu, long n);

/// Schur-decomposition bound: 2 mu^{n-D+1} n^{D-1} (mu + 2C)^{D-1}
/// in operator norm, C the op_inf power bound.
BoundResult schur_bound(double mu, int D, double C, long n);

/// Jordan-form bound kappa * sum_{k=0}^{d_mu-1} n^{d_mu-1} mu^{n-d_mu+1} with
/// the computed condition number. Asymptotically valid only; flagged
/// "empirical" by the harness and excluded from dominance checks.
BoundResult jordan_empirical_bound(const SpectralData& spec, long n);

/// Wiener-algebra main bound:
/// mu^{n+1} 4 C e^2 sqrt(|m|) (|m|+1) / (n (1-(1+1/n)mu)^{3/2}) * sup|1/B|
/// with the sup taken on |z| = mu(1+1/n).
BoundResult wiener_main_bound(double mu, int m_degree, double C, long n,
                              double sup_inv_B);

/// Per-factor version: mu^n 4 C e^2 sqrt(|m|)(|m|+1)/(1-(1+1/n)mu)^{3/2}
/// * prod over roots of m, excluding one root of modulus mu, of
///   (1-(1+1/n) mu |lambda|)/(mu - |lambda| + mu/n).
BoundResult wiener_factorized_bound(const BlaschkeData& B, double mu, double C,
                                    long n);

/// Hilbert-space contraction bound:
/// mu^{n+1} 2 |m| e / (n (1-(1+1/n)^2 mu^2)) * sup|1/B|.
BoundResult contractive_bound(double mu, int m_degree, long n, double sup_inv_B);

/// Detailed-balance bound mu^n ||B^{1/2}||_inf ||B^{-1/2}||_inf (operator norm).
BoundResult db_general_bound(const DetailedBalanceCert& cert, double mu, long n);

struct TightSimple {
  double tight = 0.0;
  double simple = 0.0;
  bool applicable = false;
};

/// Classical detailed balance, 1->1 norm:
/// tight = mu^n sqrt(d) sqrt(max pi / min pi), simple = mu^n / min pi.
TightSimple db_classical_bound(const RealVector& pi, double mu, long n);

/// Quantum detailed balance, 1->1 norm, from the eigenvalues of sigma.
TightSimple db_quantum_bound(const RealVector& sigma_eigs, double mu, long n,
                             int d);

/// Gibbs-state specialization: mu^n d e^{2 beta ||H||}.
BoundResult db_gibbs_bound(double H_norm, double beta, int d, double mu, long n);

/// l2 overlap bound on ||(T^n - T_inf^n)(Z)||_1:
/// sqrt( sum_i |<Y_i, Z>|^2 lambda_i^{2n} ).
double l2_bound(const L2EigenData& data, const Vector& Z_vec, long n);

/// Input-independent consequence of the l2 bound, valid for the 1->1 norm:
/// classical: max over basis vectors e_j of l2_bound(e_j);
/// quantum:   sqrt( sum_i lambda_i^{2n} ||Y_i||_inf^2 ).
BoundResult l2_overlap_norm_bound(const L2EigenData& data, long n);

/// Steps to epsilon-convergence for an N-particle Gibbs sampler:
/// (N^alpha / c_mu) (2 beta c_H N^k + N log s + log(1/eps)).
double efficiency_threshold(long N, double alpha, double k, double c_mu,
                            double c_H, double beta, int s, double eps);

}  // namespace specmix
