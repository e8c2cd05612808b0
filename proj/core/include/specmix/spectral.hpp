#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "specmix/map_matrix.hpp"

namespace specmix {

struct Eigendecomposition {
  Vector values;
  Matrix right;  // columns v_i with M v_i = lambda_i v_i
  Matrix left;   // columns w_i with w_i^* M = lambda_i w_i^*
};

/// Dense nonsymmetric eigendecomposition with matched left/right vectors.
/// Residual contract: ||M v - lambda v||_2 <= 1e-9 ||M||_inf per pair.
Eigendecomposition eigendecompose(const MapMatrix& M);

struct Cluster {
  Complex representative;       // multiplicity-weighted mean
  int multiplicity = 0;         // algebraic
  std::vector<int> members;     // indices into the eigenvalue list
  std::vector<int> jordan_sizes;  // descending; empty until jordan analysis ran

  int largest_block() const {
    return jordan_sizes.empty() ? 1 : jordan_sizes.front();
  }
};

/// Single-linkage clustering of eigenvalues at absolute distance tol_cluster.
/// Output is ordered by non-decreasing modulus of the representative, ties by
/// increasing phase in (-pi, pi].
std::vector<Cluster> cluster_eigenvalues(const Vector& eigs, double tol_cluster);

/// Jordan block sizes per cluster from the rank sequence of (M - lambda I)^k,
/// ranks determined by singular-value thresholding.
void jordan_structure(const MapMatrix& M, std::vector<Cluster>& clusters,
                      double tol_rank);

enum class JordanMode { rank_test, diagonalizable };

struct AnalysisOptions {
  double tol_cluster = 1e-7;
  double tol_rank = 1e-9;
  JordanMode mode = JordanMode::rank_test;
};

struct SpectralData {
  Vector eigenvalues;
  std::vector<Cluster> clusters;
  double mu = 0.0;      // spectral radius
  double kappa = 1.0;   // condition number of the (Jordan) diagonalizing transform
  int d_mu = 1;         // largest Jordan block at magnitude mu
  double tol_cluster_used = 0.0;
  bool defective = false;
};

/// Full eigenstructure of a matrix whose spectrum lies in the closed unit disc.
/// Intended for T - T_inf; mu is its spectral radius and kappa the condition
/// number of the similarity to (block-)diagonal form.
SpectralData analyze_matrix(const MapMatrix& M, const AnalysisOptions& opts = {});

struct BlaschkeData {
  std::vector<std::pair<Complex, int>> roots;  // (zero, multiplicity)

  int degree() const {
    int s = 0;
    for (const auto& [z, m] : roots) s += m;
    return s;
  }
};

/// Minimal polynomial of the analyzed matrix: one root per cluster with
/// multiplicity equal to the largest Jordan block. Verifies the annihilation
/// residual ||m(M)||_inf <= tol_annihilate (scaled by kappa).
BlaschkeData minimal_polynomial(const SpectralData& spec, const MapMatrix& M,
                                double tol_annihilate = 1e-8);

/// Jordan chain basis S with S^{-1} M S in Jordan form; used for kappa in the
/// defective case. Requires jordan_sizes to be filled in.
Matrix jordan_chain_basis(const MapMatrix& M, const std::vector<Cluster>& clusters,
                          const Vector& eigs, double tol_rank);

double condition_number(const Matrix& A);

}  // namespace specmix
