#include <doctest.h>

#include <algorithm>

#include "specmix/generators.hpp"
#include "specmix/spectral.hpp"

using namespace specmix;

TEST_CASE("eigendecompose on diagonal and permutation matrices") {
  Matrix D = Matrix::Zero(2, 2);
  D(0, 0) = 0.3;
  D(1, 1) = 0.7;
  auto eig = eigendecompose(MapMatrix(D));
  std::vector<double> vals = {eig.values(0).real(), eig.values(1).real()};
  std::sort(vals.begin(), vals.end());
  CHECK(vals[0] == doctest::Approx(0.3));
  CHECK(vals[1] == doctest::Approx(0.7));

  Matrix S(2, 2);
  S << 0, 1, 1, 0;
  eig = eigendecompose(MapMatrix(S));
  std::vector<double> mods = {std::abs(eig.values(0)), std::abs(eig.values(1))};
  CHECK(mods[0] == doctest::Approx(1.0));
  CHECK(mods[1] == doctest::Approx(1.0));
  CHECK(eig.values.sum().real() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("eigenvalue product matches the determinant on a random chain") {
  const TransitionMap T = random_stochastic(5, 123);
  const auto eig = eigendecompose(T.matrix);
  Complex prod = 1.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) prod *= eig.values(i);
  CHECK(std::abs(prod - T.matrix.entries.determinant()) < 1e-8);
}

TEST_CASE("left and right eigenvectors satisfy their residual contract") {
  const TransitionMap T = random_stochastic(6, 77);
  const auto eig = eigendecompose(T.matrix);
  const double scale = 1e-9 * T.matrix.entries.cwiseAbs().maxCoeff() * 10;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double r_res =
        (T.matrix.entries * eig.right.col(i) - eig.values(i) * eig.right.col(i))
            .norm();
    const double l_res = (eig.left.col(i).adjoint() * T.matrix.entries -
                          eig.values(i) * eig.left.col(i).adjoint())
                             .norm();
    CHECK(r_res <= scale);
    CHECK(l_res <= scale);
  }
}

TEST_CASE("clustering merges close eigenvalues and orders by modulus") {
  Vector eigs(3);
  eigs << Complex(0.5, 0), Complex(0.5 + 1e-12, 0), Complex(-0.3, 0);
  auto clusters = cluster_eigenvalues(eigs, 1e-9);
  REQUIRE(clusters.size() == 2);
  CHECK(clusters[0].multiplicity == 1);
  CHECK(clusters[0].representative.real() == doctest::Approx(-0.3));
  CHECK(clusters[1].multiplicity == 2);
  CHECK(clusters[1].representative.real() == doctest::Approx(0.5));

  Vector split(2);
  split << Complex(0.5, 0), Complex(-0.5, 0);
  CHECK(cluster_eigenvalues(split, 1e-9).size() == 2);
}

TEST_CASE("slow-chain spectrum reads off the diagonal") {
  const TransitionMap T = slow_chain({0.3, 0.5, 0.7});
  const auto eig = eigendecompose(T.matrix);
  auto clusters = cluster_eigenvalues(eig.values, 1e-7);
  REQUIRE(clusters.size() == 4);
  CHECK(clusters[0].representative.real() == doctest::Approx(0.3));
  CHECK(clusters[1].representative.real() == doctest::Approx(0.5));
  CHECK(clusters[2].representative.real() == doctest::Approx(0.7));
  CHECK(clusters[3].representative.real() == doctest::Approx(1.0));
}

TEST_CASE("jordan structure of the canonical nilpotent") {
  Matrix N = Matrix::Zero(2, 2);
  N(0, 1) = 1.0;
  const SpectralData spec = analyze_matrix(MapMatrix(N));
  REQUIRE(spec.clusters.size() == 1);
  CHECK(spec.clusters[0].jordan_sizes == std::vector<int>{2});
  CHECK(spec.d_mu == 2);
  CHECK(spec.defective);
}

TEST_CASE("jordan structure of a scaled identity") {
  const SpectralData spec = analyze_matrix(MapMatrix(Matrix(0.5 * Matrix::Identity(2, 2))));
  REQUIRE(spec.clusters.size() == 1);
  CHECK(spec.clusters[0].jordan_sizes == std::vector<int>{1, 1});
  CHECK(spec.mu == doctest::Approx(0.5));
  CHECK(spec.d_mu == 1);
}

TEST_CASE("conjugated jordan form is recovered") {
  const MapMatrix M =
      jordan_synthetic({{Complex(0.4, 0), 2}, {Complex(0.9, 0), 1}}, 10.0, 3);
  AnalysisOptions opts;
  opts.tol_cluster = 1e-4;
  const SpectralData spec = analyze_matrix(M, opts);
  REQUIRE(spec.clusters.size() == 2);
  CHECK(std::abs(spec.clusters[0].representative - Complex(0.4, 0)) < 1e-5);
  CHECK(spec.clusters[0].jordan_sizes == std::vector<int>{2});
  CHECK(std::abs(spec.clusters[1].representative - Complex(0.9, 0)) < 1e-9);
  CHECK(spec.clusters[1].jordan_sizes == std::vector<int>{1});
  CHECK(spec.mu == doctest::Approx(0.9).epsilon(1e-9));
  CHECK(spec.d_mu == 1);
}

TEST_CASE("minimal polynomial roots and annihilation") {
  {
    Matrix A = Matrix::Zero(2, 2);
    A(1, 1) = 0.5;  // T - T_inf for T = diag(1, 0.5)
    const SpectralData spec = analyze_matrix(MapMatrix(A));
    const BlaschkeData m = minimal_polynomial(spec, MapMatrix(A));
    CHECK(m.degree() == 2);
  }
  {
    Matrix N = Matrix::Zero(2, 2);
    N(0, 1) = 1.0;
    const SpectralData spec = analyze_matrix(MapMatrix(N));
    const BlaschkeData m = minimal_polynomial(spec, MapMatrix(N));
    REQUIRE(m.roots.size() == 1);
    CHECK(m.roots[0].second == 2);
  }
}

TEST_CASE("slow chain with a repeated rate has a defective mixing part") {
  const TransitionMap T = slow_chain({0.5, 0.5});
  // mixing part: drop the stationary column
  Matrix A = T.matrix.entries;
  Matrix T_inf = Matrix::Zero(3, 3);
  T_inf.row(2).setConstant(1.0);
  A -= T_inf;
  const SpectralData spec = analyze_matrix(MapMatrix(A));
  CHECK(spec.mu == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(spec.d_mu == 2);
  const BlaschkeData m = minimal_polynomial(spec, MapMatrix(A));
  CHECK(m.degree() == 3);  // z (z - 0.5)^2
}

TEST_CASE("condition number of a diagonal scaling") {
  Matrix S = Matrix::Zero(2, 2);
  S(0, 0) = 1.0;
  S(1, 1) = 10.0;
  CHECK(condition_number(S) == doctest::Approx(10.0));
}
