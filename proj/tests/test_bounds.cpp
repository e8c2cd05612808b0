#include <doctest.h>

#include <cmath>

#include "specmix/blaschke.hpp"
#include "specmix/bounds.hpp"
#include "specmix/generators.hpp"
#include "specmix/norms.hpp"
#include "specmix/semigroup.hpp"

using namespace specmix;

TEST_CASE("schur bound worked values") {
  CHECK(schur_bound(0.5, 2, 1.0, 4).value == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(schur_bound(0.0, 3, 1.0, 5).value == 0.0);
  CHECK(schur_bound(0.9, 4, 2.0, 10).value ==
        doctest::Approx(112542.30397620006).epsilon(1e-12));
  CHECK_THROWS(schur_bound(1.0, 2, 1.0, 4));
}

TEST_CASE("jordan empirical bound") {
  SpectralData spec;
  spec.mu = 0.5;
  spec.d_mu = 1;
  spec.kappa = 1.0;
  CHECK(jordan_empirical_bound(spec, 10).value ==
        doctest::Approx(std::pow(0.5, 10)).epsilon(1e-12));
  spec.mu = 0.0;
  CHECK(jordan_empirical_bound(spec, 5).value == 0.0);
}

TEST_CASE("wiener main bound worked values") {
  const double sup = 26.3636;
  const auto b = wiener_main_bound(0.5, 2, 1.0, 10, sup);
  REQUIRE(b.applicable);
  const double expected = std::pow(0.5, 11) * 4.0 * kESquared * std::sqrt(2.0) *
                          3.0 / (10.0 * std::pow(0.45, 1.5)) * sup;
  CHECK(b.value == doctest::Approx(expected).epsilon(1e-12));
  CHECK(b.value == doctest::Approx(0.5347381).epsilon(1e-5));

  // degree-1 variant
  const auto b1 = wiener_main_bound(0.5, 1, 1.0, 10, 1.0 / 0.55);
  CHECK(b1.value == doctest::Approx(0.017384713517222584).epsilon(1e-12));

  // hypothesis n > mu/(1-mu)
  CHECK_FALSE(wiener_main_bound(0.5, 2, 1.0, 1, sup).applicable);
  CHECK(wiener_main_bound(0.0, 2, 1.0, 10, sup).value == 0.0);
}

TEST_CASE("wiener factorized bound worked values") {
  BlaschkeData B{{{Complex(0, 0), 1}, {Complex(0.5, 0), 1}}};
  const auto b = wiener_factorized_bound(B, 0.5, 1.0, 10);
  REQUIRE(b.applicable);
  CHECK(b.value == doctest::Approx(0.7375709290208116).epsilon(1e-10));

  BlaschkeData only_mu{{{Complex(0.5, 0), 1}}};
  const auto b1 = wiener_factorized_bound(only_mu, 0.5, 1.0, 10);
  const double expected = std::pow(0.5, 10) * 4.0 * kESquared * 2.0 /
                          std::pow(0.45, 1.5);
  CHECK(b1.value == doctest::Approx(expected).epsilon(1e-12));

  BlaschkeData no_mu{{{Complex(0.3, 0), 1}}};
  CHECK_THROWS(wiener_factorized_bound(no_mu, 0.5, 1.0, 10));
}

TEST_CASE("factorized dominates the main bound on identical inputs") {
  BlaschkeData B{{{Complex(0, 0), 1}, {Complex(0.5, 0), 1}}};
  for (long n : {2L, 5L, 10L, 40L}) {
    const double sup = blaschke_inv_sup(B, 0.5 * (1.0 + 1.0 / n));
    const auto main = wiener_main_bound(0.5, 2, 1.0, n, sup);
    const auto fact = wiener_factorized_bound(B, 0.5, 1.0, n);
    REQUIRE(main.applicable);
    CHECK(main.value <= fact.value * (1 + 1e-12));
  }
}

TEST_CASE("contractive bound worked value and domination") {
  const double sup = 26.3636;
  const auto b = contractive_bound(0.5, 2, 10, sup);
  REQUIRE(b.applicable);
  const double expected = std::pow(0.5, 11) * 2.0 * 2.0 * kE /
                          (10.0 * (1.0 - 0.3025)) * sup;
  CHECK(b.value == doctest::Approx(expected).epsilon(1e-12));
  CHECK(b.value == doctest::Approx(0.020067118843179573).epsilon(1e-12));
  CHECK(contractive_bound(0.0, 2, 10, sup).value == 0.0);
  CHECK_FALSE(contractive_bound(0.5, 2, 1, sup).applicable);

  // never exceeds the C=1 main bound
  for (long n : {2L, 10L, 30L}) {
    BlaschkeData B{{{Complex(0, 0), 1}, {Complex(0.5, 0), 1}}};
    const double s = blaschke_inv_sup(B, 0.5 * (1.0 + 1.0 / n));
    CHECK(contractive_bound(0.5, 2, n, s).value <=
          wiener_main_bound(0.5, 2, 1.0, n, s).value * (1 + 1e-12));
  }
}

TEST_CASE("detailed balance bounds worked values") {
  DetailedBalanceCert identity_cert;
  identity_cert.kind = BalanceKind::general_B;
  identity_cert.B = Matrix::Identity(3, 3);
  CHECK(db_general_bound(identity_cert, 0.5, 10).value ==
        doctest::Approx(std::pow(0.5, 10)).epsilon(1e-12));

  DetailedBalanceCert pi_cert;
  pi_cert.kind = BalanceKind::classical_pi;
  pi_cert.pi.resize(2);
  pi_cert.pi << 0.25, 0.75;
  CHECK(db_general_bound(pi_cert, 0.5, 10).value ==
        doctest::Approx(0.0016914558667664816).epsilon(1e-10));

  DetailedBalanceCert sigma_cert;
  sigma_cert.kind = BalanceKind::quantum_sigma;
  sigma_cert.sigma = 0.5 * Matrix::Identity(2, 2);
  CHECK(db_general_bound(sigma_cert, 0.5, 10).value ==
        doctest::Approx(std::pow(0.5, 10)).epsilon(1e-10));

  RealVector uniform(4);
  uniform.setConstant(0.25);
  const auto u = db_classical_bound(uniform, 0.5, 3);
  CHECK(u.tight == doctest::Approx(std::pow(0.5, 3) * 2.0).epsilon(1e-12));
  CHECK(u.simple == doctest::Approx(std::pow(0.5, 3) * 4.0).epsilon(1e-12));

  RealVector pi(2);
  pi << 0.25, 0.75;
  const auto c = db_classical_bound(pi, 0.5, 10);
  CHECK(c.tight == doctest::Approx(0.0023920798269366976).epsilon(1e-12));
  CHECK(c.simple == doctest::Approx(0.00390625).epsilon(1e-12));
  CHECK(c.tight <= c.simple);

  RealVector sig_eigs(2);
  sig_eigs << 0.2689414213699951, 0.7310585786300049;
  const auto q = db_quantum_bound(sig_eigs, 0.9, 50, 2);
  CHECK(q.simple == doctest::Approx(0.01916318870134115).epsilon(1e-10));
  RealVector mixed(2);
  mixed.setConstant(0.5);
  CHECK(db_quantum_bound(mixed, 0.5, 4, 2).tight ==
        doctest::Approx(std::pow(0.5, 4) * std::sqrt(2.0)).epsilon(1e-12));

  CHECK(db_gibbs_bound(0.0, 0.0, 3, 0.5, 4).value ==
        doctest::Approx(std::pow(0.5, 4) * 3.0).epsilon(1e-12));
  CHECK(db_gibbs_bound(1.0, 1.0, 2, 0.9, 50).value ==
        doctest::Approx(0.07616306825633261).epsilon(1e-12));
}

TEST_CASE("gibbs bound dominates the quantum simple bound for its own state") {
  const double beta = 0.7, Hn = 1.3;
  RealVector H(3);
  H << -Hn, 0.2, Hn;
  RealVector sigma_eigs(3);
  double Z = 0.0;
  for (int i = 0; i < 3; ++i) Z += std::exp(-beta * H(i));
  for (int i = 0; i < 3; ++i) sigma_eigs(i) = std::exp(-beta * H(i)) / Z;
  for (long n : {1L, 10L}) {
    const auto simple = db_quantum_bound(sigma_eigs, 0.8, n, 3).simple;
    const auto gibbs = db_gibbs_bound(Hn, beta, 3, 0.8, n).value;
    CHECK(simple <= gibbs * (1 + 1e-12));
  }
}

TEST_CASE("l2 bound: overlap decay and fixed point") {
  const Matrix sigma = 0.5 * Matrix::Identity(2, 2);
  auto [T, cert] = sigma_depolarizing(sigma, 0.5);
  const L2EigenData data = build_l2_data(T, cert);
  REQUIRE(data.lambdas.size() == 3);
  for (double l : data.lambdas) CHECK(l == doctest::Approx(0.5).epsilon(1e-10));

  CHECK(l2_bound(data, vec(sigma), 1) < 1e-10);

  Matrix Z = Matrix::Zero(2, 2);
  Z(0, 0) = 1.0;
  const MapMatrix T_inf = asymptotic_part(T);
  double prev = 1e300;
  for (long n = 1; n <= 6; ++n) {
    const double bound = l2_bound(data, vec(Z), n);
    const Matrix img =
        unvec((power(T.matrix, n).entries - T_inf.entries) * vec(Z), 2);
    Eigen::JacobiSVD<Matrix> svd(img);
    CHECK(svd.singularValues().sum() <= bound * (1 + 1e-9));
    CHECK(bound <= prev);
    prev = bound;
  }
}

TEST_CASE("l2 overlap norm bound dominates the 1->1 distance") {
  RealVector pi(4);
  pi << 0.1, 0.2, 0.3, 0.4;
  RealMatrix prop(4, 4);
  prop.setConstant(0.25);
  auto [T, cert] = metropolis_chain(pi, prop);
  const L2EigenData data = build_l2_data(T, cert);
  const MapMatrix T_inf = asymptotic_part(T);
  for (long n : {1L, 3L, 8L}) {
    const auto b = l2_overlap_norm_bound(data, n);
    REQUIRE(b.applicable);
    const Matrix diff = power(T.matrix, n).entries - T_inf.entries;
    const double actual =
        op_norm(MapMatrix(diff), NormKind::one_to_one_classical);
    CHECK(actual <= b.value * (1 + 1e-9));
  }
}

TEST_CASE("efficiency threshold") {
  CHECK(efficiency_threshold(4, 1.0, 1.0, 1.0, 1.0, 0.0, 2, std::exp(-1.0)) ==
        doctest::Approx(15.090354888959125).epsilon(1e-12));
  CHECK(efficiency_threshold(4, 1.0, 1.0, 1.0, 1.0, 0.0, 1, 0.5) ==
        doctest::Approx(4.0 * std::log(2.0)).epsilon(1e-12));
  const double a = efficiency_threshold(4, 1.0, 1.0, 1.0, 1.0, 0.5, 2, 0.5);
  const double b = efficiency_threshold(4, 1.0, 1.0, 1.0, 1.0, 0.5, 2, 0.25);
  CHECK(b - a == doctest::Approx(4.0 * std::log(2.0)).epsilon(1e-10));
}
