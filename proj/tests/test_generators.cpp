#include <doctest.h>

#include <cmath>

#include "specmix/detailed_balance.hpp"
#include "specmix/generators.hpp"
#include "specmix/norms.hpp"
#include "specmix/semigroup.hpp"
#include "specmix/spectral.hpp"

using namespace specmix;

TEST_CASE("slow chain matrix layout") {
  const TransitionMap T = slow_chain({0.5, 0.5});
  Matrix expected(3, 3);
  expected << 0.5, 0.0, 0.0, 0.5, 0.5, 0.0, 0.0, 0.5, 1.0;
  CHECK((T.matrix.entries - expected).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(T.kind == MapKind::classical);
  CHECK_THROWS(slow_chain({0.5, 1.0}));
}

TEST_CASE("slow chain plateau at distance two") {
  std::vector<double> lambdas;
  for (int i = 0; i < 5; ++i) lambdas.push_back(0.2 + 0.1 * i);  // D = 6
  const TransitionMap T = slow_chain(lambdas);
  const MapMatrix T_inf = asymptotic_part(T);
  for (long n = 1; n <= 4; ++n) {
    const double dist = op_norm(
        MapMatrix(Matrix(power(T.matrix, n).entries - T_inf.entries)),
        NormKind::one_to_one_classical);
    CHECK(dist == doctest::Approx(2.0).epsilon(1e-12));
  }
  const double at5 = op_norm(
      MapMatrix(Matrix(power(T.matrix, 5).entries - T_inf.entries)),
      NormKind::one_to_one_classical);
  CHECK(at5 < 2.0 - 1e-10);
}

TEST_CASE("metropolis with a uniform target accepts every proposal") {
  RealVector pi = RealVector::Constant(3, 1.0 / 3.0);
  RealMatrix prop(3, 3);
  prop << 0.5, 0.3, 0.2, 0.3, 0.4, 0.3, 0.2, 0.3, 0.5;
  auto [T, cert] = metropolis_chain(pi, prop);
  CHECK((T.matrix.entries.real() - prop).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(cert_accepted(T, cert));

  CHECK_THROWS(metropolis_chain(pi, RealMatrix(prop.transpose() * 2)));
}

TEST_CASE("depolarizing endpoints and mixing spectrum") {
  Matrix sigma = Matrix::Zero(2, 2);
  sigma(0, 0) = 0.3;
  sigma(1, 1) = 0.7;

  auto [T0, c0] = sigma_depolarizing(sigma, 0.0);
  CHECK((T0.matrix.entries - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <
        1e-15);

  auto [T1, c1] = sigma_depolarizing(sigma, 1.0);
  Matrix X(2, 2);
  X << Complex(0.4, 0), Complex(0.1, 0.2), Complex(0.1, -0.2), Complex(0.6, 0);
  const Matrix img = unvec(T1.matrix.entries * vec(X), 2);
  CHECK((img - sigma).cwiseAbs().maxCoeff() < 1e-14);  // trace of X is 1

  auto [T, cert] = sigma_depolarizing(sigma, 0.4);
  CHECK(cert_accepted(T, cert));
  const MapMatrix T_inf = asymptotic_part(T);
  const MapMatrix A(Matrix(T.matrix.entries - T_inf.entries));
  const SpectralData spec = analyze_matrix(A);
  CHECK(spec.mu == doctest::Approx(0.6).epsilon(1e-10));
  const BlaschkeData m = minimal_polynomial(spec, A);
  REQUIRE(m.roots.size() == 2);
  // roots {0, 0.6}, each simple
  std::vector<double> mods = {std::abs(m.roots[0].first),
                              std::abs(m.roots[1].first)};
  std::sort(mods.begin(), mods.end());
  CHECK(mods[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(mods[1] == doctest::Approx(0.6).epsilon(1e-9));

  CHECK_THROWS(sigma_depolarizing(Matrix(Matrix::Zero(2, 2)), 0.5));
  CHECK_THROWS(sigma_depolarizing(sigma, 1.5));
}

TEST_CASE("pinching mix on a diagonal state") {
  Matrix sigma = Matrix::Zero(2, 2);
  sigma(0, 0) = 0.3;
  sigma(1, 1) = 0.7;
  PinchingMixTerm pinch;
  pinch.partition = {{0}, {1}};
  pinch.weight = 0.5;
  PinchingMixTerm depol;
  depol.depolarizing_p = 0.5;
  depol.weight = 0.5;
  auto [T, cert] = pinching_mix(sigma, {pinch, depol});
  CHECK(cert_accepted(T, cert));

  // the full pinching kills off-diagonals; mixed with depolarizing, the
  // off-diagonal entries decay at rate 0.5 * (1 - p)
  Matrix X(2, 2);
  X << Complex(0.5, 0), Complex(0.2, 0.1), Complex(0.2, -0.1), Complex(0.5, 0);
  const Matrix img = unvec(T.matrix.entries * vec(X), 2);
  CHECK(std::abs(img(0, 1) - 0.25 * X(0, 1)) < 1e-13);
  CHECK(std::abs(img(0, 0).imag()) < 1e-13);

  // trivial partition (one block) is the identity channel
  PinchingMixTerm trivial;
  trivial.partition = {{0, 1}};
  trivial.weight = 1.0;
  auto [Tid, cid] = pinching_mix(sigma, {trivial});
  CHECK((Tid.matrix.entries - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <
        1e-14);

  PinchingMixTerm bad;
  bad.partition = {{0}};
  bad.weight = 1.0;
  CHECK_THROWS(pinching_mix(sigma, {bad}));          // does not cover index 1
  pinch.weight = 0.9;
  CHECK_THROWS(pinching_mix(sigma, {pinch, depol}));  // weights not convex
}

TEST_CASE("pinching mix rotates to the eigenbasis for non-diagonal states") {
  Matrix sigma(2, 2);
  sigma << Complex(0.5, 0), Complex(0.2, 0.1), Complex(0.2, -0.1), Complex(0.5, 0);
  PinchingMixTerm pinch;
  pinch.partition = {{0}, {1}};
  pinch.weight = 0.7;
  PinchingMixTerm depol;
  depol.depolarizing_p = 0.3;
  depol.weight = 0.3;
  auto [T, cert] = pinching_mix(sigma, {pinch, depol});
  CHECK(cert_accepted(T, cert));
  // sigma itself is a fixed point
  CHECK((unvec(T.matrix.entries * vec(sigma), 2) - sigma).cwiseAbs().maxCoeff() <
        1e-12);
  // the spectrum is basis independent
  Matrix diag_sigma = Matrix::Zero(2, 2);
  Eigen::SelfAdjointEigenSolver<Matrix> es(sigma);
  for (int i = 0; i < 2; ++i) diag_sigma(i, i) = es.eigenvalues()(i);
  auto [Td, cd] = pinching_mix(diag_sigma, {pinch, depol});
  auto sorted_mods = [](const MapMatrix& M) {
    auto eig = eigendecompose(M);
    std::vector<double> mods(eig.values.size());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i)
      mods[i] = std::abs(eig.values(i));
    std::sort(mods.begin(), mods.end());
    return mods;
  };
  const auto a = sorted_mods(T.matrix);
  const auto b = sorted_mods(Td.matrix);
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-10));
}

TEST_CASE("model operator postconditions") {
  const std::vector<Complex> zeros = {Complex(0.2, 0), Complex(-0.3, 0.4),
                                      Complex(0, 0.5)};
  const MapMatrix M = model_operator(zeros);
  REQUIRE(M.dim() == 3);
  // spectrum equals the prescribed zeros
  auto eig = eigendecompose(M);
  for (const Complex& z : zeros) {
    double best = 1e300;
    for (Eigen::Index i = 0; i < eig.values.size(); ++i)
      best = std::min(best, std::abs(eig.values(i) - z));
    CHECK(best < 1e-9);
  }
  // contraction with a norm plateau at 1 until the degree is reached
  CHECK(op_norm(M, NormKind::op_inf) <= 1.0 + 1e-12);
  for (long n = 1; n < 3; ++n) {
    CHECK(op_norm(power(M, n), NormKind::op_inf) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK(op_norm(power(M, 3), NormKind::op_inf) < 1.0 - 1e-9);
}

TEST_CASE("model operator plateau for five zeros on one circle") {
  std::vector<Complex> zeros;
  for (int k = 0; k < 5; ++k) {
    const double t = 2.0 * 3.14159265358979323846 * k / 5.0;
    zeros.emplace_back(0.6 * std::cos(t), 0.6 * std::sin(t));
  }
  const MapMatrix M = model_operator(zeros);
  for (long n = 1; n < 5; ++n) {
    CHECK(op_norm(power(M, n), NormKind::op_inf) ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(op_norm(power(M, 5), NormKind::op_inf) < 1.0 - 1e-9);

  CHECK_THROWS(model_operator({Complex(0.5, 0), Complex(0.5, 0)}));
  CHECK_THROWS(model_operator({Complex(1.2, 0)}));
  CHECK_THROWS(model_operator({}));
}

TEST_CASE("direct sum shape and spectrum") {
  Matrix U = Matrix::Identity(2, 2);
  U(0, 0) = Complex(0, 1);
  const MapMatrix M = model_operator({Complex(0.3, 0)});
  const MapMatrix E = direct_sum(U, M);
  REQUIRE(E.dim() == 3);
  CHECK(op_norm(E, NormKind::op_inf) <= 1.0 + 1e-12);
  auto eig = eigendecompose(E);
  std::vector<double> mods(3);
  for (int i = 0; i < 3; ++i) mods[i] = std::abs(eig.values(i));
  std::sort(mods.begin(), mods.end());
  CHECK(mods[0] == doctest::Approx(0.3));
  CHECK(mods[1] == doctest::Approx(1.0));
  CHECK(mods[2] == doctest::Approx(1.0));
}

TEST_CASE("random stochastic matrices are column stochastic") {
  for (std::uint64_t seed : {1ULL, 7ULL, 42ULL}) {
    const TransitionMap T = random_stochastic(5, seed);
    for (int j = 0; j < 5; ++j) {
      CHECK(T.matrix.entries.col(j).sum().real() ==
            doctest::Approx(1.0).epsilon(1e-13));
      for (int i = 0; i < 5; ++i) {
        CHECK(T.matrix.entries(i, j).real() >= 0.0);
        CHECK(std::abs(T.matrix.entries(i, j).imag()) < 1e-15);
      }
    }
  }
  // deterministic in the seed
  const TransitionMap a = random_stochastic(4, 11);
  const TransitionMap b = random_stochastic(4, 11);
  CHECK((a.matrix.entries - b.matrix.entries).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("random channels are trace preserving contractions") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
    const TransitionMap T = random_channel(3, 4, seed);
    const Vector id_vec = vec(Matrix::Identity(3, 3));
    // trace preservation: the adjoint fixes the identity
    CHECK((T.matrix.entries.adjoint() * id_vec - id_vec).cwiseAbs().maxCoeff() <
          1e-12);
    const auto eig = eigendecompose(T.matrix);
    CHECK(eig.values.cwiseAbs().maxCoeff() <= 1.0 + 1e-10);
    CHECK(op_norm(T.matrix, NormKind::one_to_one_hermitian, 3) <= 1.0 + 1e-8);
  }
}

TEST_CASE("jordan synthetic with trivial conditioning is the jordan form") {
  const MapMatrix M =
      jordan_synthetic({{Complex(0.4, 0), 2}, {Complex(0.9, 0), 1}}, 1.0, 0);
  Matrix expected = Matrix::Zero(3, 3);
  expected(0, 0) = 0.4;
  expected(0, 1) = 1.0;
  expected(1, 1) = 0.4;
  expected(2, 2) = 0.9;
  CHECK((M.entries - expected).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS(jordan_synthetic({{Complex(1.1, 0), 1}}, 2.0, 0));
  CHECK_THROWS(jordan_synthetic({{Complex(0.5, 0), 1}}, 0.5, 0));
}

TEST_CASE("jordan synthetic eigenvalues survive the similarity") {
  const MapMatrix M =
      jordan_synthetic({{Complex(0.3, 0.2), 1}, {Complex(-0.6, 0), 2}}, 50.0, 5);
  AnalysisOptions opts;
  opts.tol_cluster = 1e-4;
  const SpectralData spec = analyze_matrix(M, opts);
  REQUIRE(spec.clusters.size() == 2);
  CHECK(spec.mu == doctest::Approx(0.6).epsilon(1e-6));
  CHECK(spec.d_mu == 2);
}
