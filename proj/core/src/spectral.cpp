#include "specmix/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace specmix {

namespace {

double inf_norm(const Matrix& M) {
  if (M.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(M);
  return svd.singularValues()(0);
}

// phase in (-pi, pi]
double phase_of(Complex z) {
  double p = std::arg(z);
  if (p <= -M_PI) p += 2 * M_PI;
  return p;
}

int rank_with_threshold(const Matrix& M, double threshold) {
  if (M.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(M);
  const auto& s = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > threshold) ++r;
  return r;
}

Matrix nullspace_basis(const Matrix& M, double threshold) {
  Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > threshold) ++r;
  return svd.matrixV().rightCols(M.cols() - r);
}

}  // namespace

Eigendecomposition eigendecompose(const MapMatrix& M) {
  const int D = M.dim();
  const Matrix& A = M.entries;
  if (!is_finite(A)) throw std::invalid_argument("eigendecompose: non-finite input");

  Eigen::ComplexEigenSolver<Matrix> right_solver(A, true);
  if (right_solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecompose: right eigensolver did not converge");
  Eigen::ComplexEigenSolver<Matrix> adj_solver(A.adjoint(), true);
  if (adj_solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecompose: adjoint eigensolver did not converge");

  Eigendecomposition out;
  out.values = right_solver.eigenvalues();
  out.right = right_solver.eigenvectors();
  out.left.resize(D, D);

  // match left vectors: A^* u = nu u gives u^* A = conj(nu) u^*
  const Vector adj_vals = adj_solver.eigenvalues();
  std::vector<bool> used(D, false);
  Vector matched_adj(D);
  for (int i = 0; i < D; ++i) {
    int best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int j = 0; j < D; ++j) {
      if (used[j]) continue;
      const double dist = std::abs(std::conj(adj_vals(j)) - out.values(i));
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    used[best] = true;
    matched_adj(i) = adj_vals(best);
    out.left.col(i) = adj_solver.eigenvectors().col(best);
  }

  // Each pair is checked against its own solver's eigenvalue: for a defective
  // cluster the right and adjoint eigenvalues agree only to O(eps^{1/k}), but
  // backward stability keeps both residuals at rounding level.
  const double scale = std::max(inf_norm(A), 1e-300);
  for (int i = 0; i < D; ++i) {
    const double res_r = (A * out.right.col(i) - out.values(i) * out.right.col(i)).norm();
    const double res_l =
        (A.adjoint() * out.left.col(i) - matched_adj(i) * out.left.col(i)).norm();
    const double res = std::max(res_r, res_l);
    if (res > 1e-9 * scale)
      throw std::runtime_error("eigendecompose: residual " + std::to_string(res) +
                               " exceeds contract at eigenvalue index " +
                               std::to_string(i));
  }
  return out;
}

std::vector<Cluster> cluster_eigenvalues(const Vector& eigs, double tol_cluster) {
  if (tol_cluster <= 0) throw std::invalid_argument("tol_cluster must be positive");
  const int n = static_cast<int>(eigs.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(eigs(i) - eigs(j)) <= tol_cluster) parent[find(i)] = find(j);

  std::vector<Cluster> clusters;
  std::vector<int> root_to_cluster(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (root_to_cluster[r] < 0) {
      root_to_cluster[r] = static_cast<int>(clusters.size());
      clusters.push_back({});
    }
    clusters[root_to_cluster[r]].members.push_back(i);
  }
  for (auto& c : clusters) {
    Complex sum = 0.0;
    for (int i : c.members) sum += eigs(i);
    c.multiplicity = static_cast<int>(c.members.size());
    c.representative = sum / static_cast<double>(c.multiplicity);
  }
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
    const double ma = std::abs(a.representative), mb = std::abs(b.representative);
    if (ma != mb) return ma < mb;
    return phase_of(a.representative) < phase_of(b.representative);
  });
  return clusters;
}

void jordan_structure(const MapMatrix& M, std::vector<Cluster>& clusters,
                      double tol_rank) {
  const int D = M.dim();
  for (auto& c : clusters) {
    const Matrix A = M.entries - c.representative * Matrix::Identity(D, D);
    const double base = std::max(inf_norm(A), 1.0);
    std::vector<int> ranks{D};  // rank(A^0) = D
    Matrix P = Matrix::Identity(D, D);
    double threshold_scale = 1.0;
    std::vector<int> blocks;  // counts of blocks of size >= k
    for (int k = 1; k <= D; ++k) {
      P = P * A;
      threshold_scale *= base;
      const int r = rank_with_threshold(P, tol_rank * threshold_scale);
      ranks.push_back(r);
      const int at_least_k = ranks[k - 1] - ranks[k];
      if (!blocks.empty() && at_least_k > blocks.back())
        throw std::runtime_error(
            "jordan_structure: non-monotone rank sequence, tolerance failure");
      blocks.push_back(at_least_k);
      if (at_least_k == 0) break;
    }
    c.jordan_sizes.clear();
    for (int k = static_cast<int>(blocks.size()); k >= 1; --k) {
      const int exactly_k =
          blocks[k - 1] - (k < static_cast<int>(blocks.size()) ? blocks[k] : 0);
      for (int b = 0; b < exactly_k; ++b) c.jordan_sizes.push_back(k);
    }
    const int total = std::accumulate(c.jordan_sizes.begin(), c.jordan_sizes.end(), 0);
    if (total != c.multiplicity)
      throw std::runtime_error(
          "jordan_structure: block sizes sum to " + std::to_string(total) +
          " but cluster multiplicity is " + std::to_string(c.multiplicity));
  }
}

Matrix jordan_chain_basis(const MapMatrix& M, const std::vector<Cluster>& clusters,
                          const Vector& /*eigs*/, double tol_rank) {
  const int D = M.dim();
  Matrix S(D, D);
  int col = 0;
  for (const auto& c : clusters) {
    const Matrix A = M.entries - c.representative * Matrix::Identity(D, D);
    const int s = c.largest_block();
    const double base = std::max(inf_norm(A), 1.0);

    std::vector<Matrix> nulls(s + 1);  // nulls[k] = basis of null(A^k)
    Matrix P = Matrix::Identity(D, D);
    double scale = 1.0;
    nulls[0] = Matrix(D, 0);
    for (int k = 1; k <= s; ++k) {
      P = P * A;
      scale *= base;
      nulls[k] = nullspace_basis(P, tol_rank * scale);
    }

    // blocks of size exactly k
    std::vector<int> exactly(s + 1, 0);
    for (int sz : c.jordan_sizes) exactly[sz]++;

    std::vector<std::vector<Vector>> carried(s + 2);  // vectors living at level k
    for (int k = s; k >= 1; --k) {
      // span to avoid: null(A^{k-1}) plus vectors carried down from longer chains
      Matrix avoid(D, nulls[k - 1].cols() + carried[k].size());
      avoid.leftCols(nulls[k - 1].cols()) = nulls[k - 1];
      for (size_t t = 0; t < carried[k].size(); ++t)
        avoid.col(nulls[k - 1].cols() + t) = carried[k][t];
      Eigen::HouseholderQR<Matrix> qr(avoid);
      Matrix Q = qr.householderQ() * Matrix::Identity(D, avoid.cols());
      if (avoid.cols() == 0) Q = Matrix(D, 0);

      for (int b = 0; b < exactly[k]; ++b) {
        // candidate in null(A^k) furthest from the avoided span
        Vector best;
        double best_norm = -1.0;
        for (Eigen::Index j = 0; j < nulls[k].cols(); ++j) {
          Vector v = nulls[k].col(j);
          if (Q.cols() > 0) v -= Q * (Q.adjoint() * v);
          if (v.norm() > best_norm) {
            best_norm = v.norm();
            best = v;
          }
        }
        if (best_norm < 1e-12)
          throw std::runtime_error("jordan_chain_basis: chain top not found");
        best.normalize();
        // chain best, A best, ..., A^{k-1} best, stored bottom-to-top
        std::vector<Vector> chain{best};
        for (int j = 1; j < k; ++j) chain.push_back(A * chain.back());
        for (int j = k - 1; j >= 0; --j) S.col(col++) = chain[j];
        for (int j = 1; j < k; ++j) carried[k - j].push_back(chain[j]);
        // extend the avoided span with the new top
        Matrix Q2(D, Q.cols() + 1);
        Q2.leftCols(Q.cols()) = Q;
        Vector w = best;
        if (Q.cols() > 0) w -= Q * (Q.adjoint() * w);
        Q2.col(Q.cols()) = w.normalized();
        Q = Q2;
      }
    }
  }
  if (col != D) throw std::runtime_error("jordan_chain_basis: incomplete basis");
  return S;
}

double condition_number(const Matrix& A) {
  Eigen::JacobiSVD<Matrix> svd(A);
  const auto& s = svd.singularValues();
  if (s(s.size() - 1) <= 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / (s(s.size() - 1));
}

SpectralData analyze_matrix(const MapMatrix& M, const AnalysisOptions& opts) {
  SpectralData out;
  const auto eig = eigendecompose(M);
  out.eigenvalues = eig.values;
  out.clusters = cluster_eigenvalues(eig.values, opts.tol_cluster);
  out.tol_cluster_used = opts.tol_cluster;

  if (opts.mode == JordanMode::rank_test) {
    jordan_structure(M, out.clusters, opts.tol_rank);
  } else {
    for (auto& c : out.clusters)
      c.jordan_sizes.assign(static_cast<size_t>(c.multiplicity), 1);
  }

  out.mu = 0.0;
  for (const auto& c : out.clusters)
    out.mu = std::max(out.mu, std::abs(c.representative));

  out.d_mu = 1;
  for (const auto& c : out.clusters)
    if (std::abs(std::abs(c.representative) - out.mu) <= opts.tol_cluster)
      out.d_mu = std::max(out.d_mu, c.largest_block());

  out.defective = false;
  for (const auto& c : out.clusters)
    if (c.largest_block() > 1) out.defective = true;

  if (!out.defective) {
    Matrix V = eig.right;
    for (Eigen::Index j = 0; j < V.cols(); ++j) V.col(j).normalize();
    out.kappa = std::max(1.0, condition_number(V));
  } else {
    const Matrix S = jordan_chain_basis(M, out.clusters, eig.values, opts.tol_rank);
    out.kappa = std::max(1.0, condition_number(S));
  }
  return out;
}

BlaschkeData minimal_polynomial(const SpectralData& spec, const MapMatrix& M,
                                double tol_annihilate) {
  BlaschkeData B;
  for (const auto& c : spec.clusters) {
    if (std::abs(c.representative) >= 1.0)
      throw std::invalid_argument(
          "minimal_polynomial: root on or outside the unit circle");
    B.roots.emplace_back(c.representative, c.largest_block());
  }
  const int D = M.dim();
  Matrix P = Matrix::Identity(D, D);
  for (const auto& [z, mult] : B.roots)
    for (int k = 0; k < mult; ++k)
      P = P * (M.entries - z * Matrix::Identity(D, D));
  const double residual = inf_norm(P);
  if (residual > tol_annihilate * std::max(1.0, spec.kappa))
    throw std::runtime_error("minimal_polynomial: annihilation residual " +
                             std::to_string(residual) + " exceeds tolerance");
  return B;
}

}  // namespace specmix
