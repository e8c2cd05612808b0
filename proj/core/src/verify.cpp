#include "specmix/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "specmix/blaschke.hpp"
#include "specmix/bounds.hpp"
#include "specmix/generators.hpp"
#include "specmix/norms.hpp"
#include "specmix/semigroup.hpp"
#include "specmix/spectral.hpp"
#include "specmix/sweep.hpp"

namespace specmix {

namespace {

constexpr double kMarginFloor = -1.0;

PropertyResult finish(std::string name, int instances, double worst,
                      std::string detail = {}) {
  PropertyResult r;
  r.name = std::move(name);
  r.instances = instances;
  r.worst_margin = worst;
  r.pass = worst <= 0.0;
  r.detail = std::move(detail);
  return r;
}

RealVector random_pi(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.2, 1.0);
  RealVector pi(d);
  for (int i = 0; i < d; ++i) pi(i) = u(rng);
  return pi / pi.sum();
}

RealMatrix symmetric_proposal(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.1, 1.0);
  RealMatrix W = RealMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) W(i, j) = W(j, i) = u(rng);
  double smax = 0.0;
  for (int j = 0; j < d; ++j) smax = std::max(smax, W.col(j).sum());
  W /= 1.1 * smax;
  for (int j = 0; j < d; ++j) W(j, j) = 1.0 - W.col(j).sum();
  return W;
}

Matrix random_density(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix G(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) G(i, j) = Complex(g(rng), g(rng));
  Matrix sigma = G * G.adjoint() + 0.2 * Matrix::Identity(d, d);
  return sigma / sigma.trace().real();
}

std::vector<Complex> random_zeros(int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> rad(0.15, 0.7);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
  std::vector<Complex> zeros;
  while (static_cast<int>(zeros.size()) < m) {
    const double r = rad(rng);
    const double t = ang(rng);
    const Complex z(r * std::cos(t), r * std::sin(t));
    bool ok = true;
    for (const auto& w : zeros)
      if (std::abs(z - w) < 0.08) ok = false;
    if (ok) zeros.push_back(z);
  }
  return zeros;
}

std::vector<Instance> classical_instances(std::uint64_t seed) {
  std::vector<Instance> out;
  for (int d = 2; d <= 8; ++d)
    for (int k = 0; k < 17; ++k) {
      std::ostringstream id;
      id << "stoch_d" << d << "_" << k;
      out.push_back({id.str(), random_stochastic(d, seed + 1000 * d + k),
                     std::nullopt, false});
    }
  std::mt19937_64 rng(seed ^ 0x4d65740ULL);
  for (int k = 0; k < 25; ++k) {
    const int d = 3 + k % 6;
    auto [T, cert] = metropolis_chain(random_pi(d, rng), symmetric_proposal(d, rng));
    std::ostringstream id;
    id << "metropolis_d" << d << "_" << k;
    out.push_back({id.str(), std::move(T), std::move(cert), false});
  }
  return out;
}

std::vector<Instance> quantum_instances(std::uint64_t seed) {
  std::vector<Instance> out;
  for (int d = 2; d <= 3; ++d)
    for (int k = 0; k < 15; ++k) {
      std::ostringstream id;
      id << "channel_d" << d << "_" << k;
      out.push_back({id.str(), random_channel(d, 2 + k % 3, seed + 77 * d + k),
                     std::nullopt, false});
    }
  std::mt19937_64 rng(seed ^ 0x5160d1ULL);
  std::uniform_real_distribution<double> up(0.1, 0.9);
  for (int k = 0; k < 8; ++k) {
    const int d = 2 + k % 2;
    auto [T, cert] = sigma_depolarizing(random_density(d, rng), up(rng));
    std::ostringstream id;
    id << "depol_d" << d << "_" << k;
    out.push_back({id.str(), std::move(T), std::move(cert), false});
  }
  for (int k = 0; k < 8; ++k) {
    const int d = 3;
    Matrix sigma = Matrix::Zero(d, d);
    RealVector diag = random_pi(d, rng);
    for (int i = 0; i < d; ++i) sigma(i, i) = diag(i);
    std::vector<PinchingMixTerm> terms;
    if (k % 2 == 0)
      terms.push_back({{{0}, {1, 2}}, -1.0, 0.5});
    else
      terms.push_back({{{0, 1}, {2}}, -1.0, 0.5});
    terms.push_back({{}, 0.2 + 0.1 * (k % 4), 0.5});
    auto [T, cert] = pinching_mix(sigma, terms);
    std::ostringstream id;
    id << "pinchmix_" << k;
    out.push_back({id.str(), std::move(T), std::move(cert), false});
  }
  return out;
}

std::vector<Instance> model_instances(std::uint64_t seed) {
  std::vector<Instance> out;
  std::mt19937_64 rng(seed ^ 0xb1a5ULL);
  for (int k = 0; k < 20; ++k) {
    const int m = 2 + k % 5;
    TransitionMap T{model_operator(random_zeros(m, rng)), MapKind::generic, 0,
                    {{NormKind::op_inf, 1.0}}};
    std::ostringstream id;
    id << "model_m" << m << "_" << k;
    out.push_back({id.str(), std::move(T), std::nullopt, true});
  }
  return out;
}

NormKind native_norm(const Instance& inst) {
  switch (inst.map.kind) {
    case MapKind::classical:
      return NormKind::one_to_one_classical;
    case MapKind::quantum_natural:
      return NormKind::one_to_one_hermitian;
    case MapKind::generic:
      return NormKind::op_inf;
  }
  return NormKind::op_inf;
}

/// actual(n) <= bound(n) (1 + 1e-9) for every applicable bound except the
/// asymptotic-only Jordan estimate.
double curve_violation(const BoundCurve& curve) {
  double worst = kMarginFloor;
  for (const auto& row : curve.rows)
    for (const auto& [name, cell] : row.bounds) {
      if (!cell.applicable || name == "jordan_empirical") continue;
      worst = std::max(worst, row.actual - cell.value * (1.0 + 1e-9));
    }
  return worst;
}

}  // namespace

bool SuiteReport::pass() const {
  for (const auto& p : properties)
    if (!p.pass) return false;
  return true;
}

nlohmann::ordered_json SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["pass"] = pass();
  j["properties"] = nlohmann::ordered_json::array();
  for (const auto& p : properties)
    j["properties"].push_back({{"name", p.name},
                               {"instances", p.instances},
                               {"worst_margin", p.worst_margin},
                               {"pass", p.pass},
                               {"detail", p.detail}});
  return j;
}

SuiteReport verify_core(std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "core";
  rep.seed = seed;

  auto instances = classical_instances(seed);
  {
    auto q = quantum_instances(seed);
    std::move(q.begin(), q.end(), std::back_inserter(instances));
    auto m = model_instances(seed);
    std::move(m.begin(), m.end(), std::back_inserter(instances));
  }

  double bound_worst = kMarginFloor;
  std::string bound_detail;
  double power_worst = kMarginFloor;
  double asym_worst = kMarginFloor;
  double unit_worst = kMarginFloor;
  for (const auto& inst : instances) {
    RunConfig cfg;
    cfg.norm = native_norm(inst);
    cfg.seed = seed;
    const BoundCurve curve = sweep(inst, cfg);
    const double v = curve_violation(curve);
    if (v > bound_worst) {
      bound_worst = v;
      bound_detail = inst.id;
    }

    // Lemma-level invariants on the same instances
    const auto eig = eigendecompose(inst.map.matrix);
    const MapMatrix T_inf =
        asymptotic_part(inst.map.matrix, eig, cfg.tol_cluster, cfg.tol_unit);
    const Matrix A = inst.map.matrix.entries - T_inf.entries;
    const SpectralData aspec = analyze_matrix(MapMatrix(Matrix(A)));

    const double C = inst.map.power_bound(cfg.norm);
    Matrix Tn = inst.map.matrix.entries;
    Matrix In = T_inf.entries;
    Matrix An = A;
    for (long n = 1; n <= 64; ++n) {
      const double res = (Tn - In - An).cwiseAbs().maxCoeff();
      power_worst = std::max(power_worst, res - 1e-8 * std::max(1.0, aspec.kappa));
      const double inf_n =
          op_norm(MapMatrix(Matrix(In)), cfg.norm, inst.map.base_dim);
      asym_worst = std::max(asym_worst, inf_n - C - 1e-8);
      if (n == 64) break;
      Tn = inst.map.matrix.entries * Tn;
      In = T_inf.entries * In;
      An = A * An;
    }

    const SpectralData tspec = analyze_matrix(inst.map.matrix);
    for (const auto& c : tspec.clusters)
      if (std::abs(c.representative) >= 1.0 - 1e-8)
        for (int s : c.jordan_sizes)
          unit_worst = std::max(unit_worst, static_cast<double>(s - 1));
  }
  rep.properties.push_back(finish("bound_validity",
                                  static_cast<int>(instances.size()), bound_worst,
                                  bound_detail));
  rep.properties.push_back(
      finish("power_identity", static_cast<int>(instances.size()), power_worst));
  rep.properties.push_back(finish("asymptotic_power_bounded",
                                  static_cast<int>(instances.size()), asym_worst));
  rep.properties.push_back(finish("unit_clusters_diagonalizable",
                                  static_cast<int>(instances.size()), unit_worst));

  // synthetic Jordan structures round-trip through the analyzer
  std::mt19937_64 rng(seed ^ 0x10bdaULL);
  std::uniform_real_distribution<double> uk(1.0, 100.0);
  std::uniform_real_distribution<double> ur(0.2, 0.9);
  std::uniform_real_distribution<double> ua(0.0, 2.0 * M_PI);
  double jordan_worst = kMarginFloor;
  const int jordan_trials = 50;
  for (int t = 0; t < jordan_trials; ++t) {
    std::vector<Complex> lambdas;
    const int distinct = 2 + t % 2;
    while (static_cast<int>(lambdas.size()) < distinct) {
      const double r = ur(rng), a = ua(rng);
      const Complex z(r * std::cos(a), r * std::sin(a));
      bool ok = true;
      for (const auto& w : lambdas)
        if (std::abs(z - w) < 0.1) ok = false;
      if (ok) lambdas.push_back(z);
    }
    std::vector<JordanBlockSpec> blocks;
    std::vector<std::vector<int>> expect(distinct);
    for (int i = 0; i < distinct; ++i) {
      const int nb = 1 + (t + i) % 2;
      for (int b = 0; b < nb; ++b) {
        const int size = 1 + (t + i + b) % 3;
        blocks.push_back({lambdas[i], size});
        expect[i].push_back(size);
      }
      std::sort(expect[i].rbegin(), expect[i].rend());
    }
    const MapMatrix M = jordan_synthetic(blocks, uk(rng), seed + 31 * t);
    AnalysisOptions opts;
    opts.tol_cluster = 1e-4;  // defective eigenvalues scatter like eps^{1/k}
    const SpectralData spec = analyze_matrix(M, opts);
    bool ok = spec.clusters.size() == static_cast<size_t>(distinct);
    for (int i = 0; ok && i < distinct; ++i) {
      bool found = false;
      for (const auto& c : spec.clusters)
        if (std::abs(c.representative - lambdas[i]) < 1e-4) {
          found = c.jordan_sizes == expect[i];
          break;
        }
      ok = found;
    }
    jordan_worst = std::max(jordan_worst, ok ? kMarginFloor : 1.0);
  }
  rep.properties.push_back(finish("jordan_recovery", jordan_trials, jordan_worst));
  return rep;
}

SuiteReport verify_blaschke(std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "blaschke";
  rep.seed = seed;
  std::mt19937_64 rng(seed ^ 0xb1a5c4eULL);
  std::uniform_real_distribution<double> ur(0.0, 0.95);
  std::uniform_real_distribution<double> ua(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> uc(0.0, 1.0);

  double worst = kMarginFloor;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    const double r = ur(rng), a = ua(rng);
    const Complex lambda(r * std::cos(a), r * std::sin(a));
    const double c = r + 0.02 + uc(rng) * (1.0 - r - 0.02);
    const double closed = single_factor_sup(lambda, c);

    const auto f = [&](double th) {
      const Complex z = c * Complex(std::cos(th), std::sin(th));
      return std::abs((1.0 - std::conj(lambda) * z) / (z - lambda));
    };
    double grid = 0.0;
    double best_th = 0.0;
    const int N = 1 << 16;
    for (int i = 0; i < N; ++i) {
      const double th = 2.0 * M_PI * i / N;
      const double v = f(th);
      if (v > grid) {
        grid = v;
        best_th = th;
      }
    }
    // golden-section polish: the peak near the root is narrower than the
    // grid spacing when c grazes |lambda|
    double lo = best_th - 2.0 * M_PI / N, hi = best_th + 2.0 * M_PI / N;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int it = 0; it < 80; ++it) {
      const double m1 = hi - gr * (hi - lo), m2 = lo + gr * (hi - lo);
      if (f(m1) < f(m2)) lo = m1; else hi = m2;
    }
    grid = std::max(grid, f(0.5 * (lo + hi)));
    worst = std::max(worst, std::abs(closed - grid) / grid - 1e-6);
  }
  rep.properties.push_back(finish("single_factor_closed_form", trials, worst));
  return rep;
}

SuiteReport verify_model(std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "model";
  rep.seed = seed;
  std::mt19937_64 rng(seed ^ 0x0de1ULL);

  double plateau_worst = kMarginFloor;
  double bound_worst = kMarginFloor;
  const int trials = 50;
  for (int t = 0; t < trials; ++t) {
    const int m = 2 + t % 5;
    const auto zeros = random_zeros(m, rng);
    const MapMatrix M = model_operator(zeros);

    double mu = 0.0;
    BlaschkeData B;
    for (const auto& z : zeros) {
      mu = std::max(mu, std::abs(z));
      B.roots.emplace_back(z, 1);
    }

    for (long n = 1; n < m; ++n) {
      const double v = op_norm(power(M, n), NormKind::op_inf);
      plateau_worst = std::max(plateau_worst, std::abs(v - 1.0) - 1e-8);
    }
    const long n_lo = static_cast<long>(std::floor(mu / (1.0 - mu))) + 1;
    for (long n = n_lo; n <= n_lo + 30; ++n) {
      double sup;
      try {
        sup = blaschke_inv_sup(B, mu * (1.0 + 1.0 / static_cast<double>(n)));
      } catch (const std::invalid_argument&) {
        continue;  // radius grazes another root modulus
      }
      const auto bound = contractive_bound(mu, m, n, sup);
      if (!bound.applicable) continue;
      const double v = op_norm(power(M, n), NormKind::op_inf);
      bound_worst = std::max(bound_worst, v - bound.value * (1.0 + 1e-9));
    }
  }
  rep.properties.push_back(finish("power_plateau", trials, plateau_worst));
  rep.properties.push_back(finish("contractive_bound_dominates", trials, bound_worst));
  return rep;
}

SuiteReport verify_detailed_balance(std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "detailed_balance";
  rep.seed = seed;
  std::mt19937_64 rng(seed ^ 0xdbdbULL);

  double res_worst = kMarginFloor;
  double l2_worst = kMarginFloor;
  int count = 0;
  auto consider = [&](const TransitionMap& T, const DetailedBalanceCert& cert,
                      const Vector& fixed_point) {
    ++count;
    res_worst = std::max(res_worst, cert.residual - 1e-10);
    const L2EigenData data = build_l2_data(T, cert);
    l2_worst = std::max(l2_worst, l2_bound(data, fixed_point, 1) - 1e-10);
  };

  for (int k = 0; k < 10; ++k) {
    const int d = 3 + k % 5;
    auto [T, cert] = metropolis_chain(random_pi(d, rng), symmetric_proposal(d, rng));
    consider(T, cert, cert.pi.cast<Complex>());
  }
  std::uniform_real_distribution<double> up(0.1, 0.9);
  for (int k = 0; k < 5; ++k) {
    const Matrix sigma = random_density(2 + k % 2, rng);
    auto [T, cert] = sigma_depolarizing(sigma, up(rng));
    consider(T, cert, vec(sigma));
  }
  for (int k = 0; k < 5; ++k) {
    Matrix sigma = Matrix::Zero(3, 3);
    RealVector diag = random_pi(3, rng);
    for (int i = 0; i < 3; ++i) sigma(i, i) = diag(i);
    std::vector<PinchingMixTerm> terms = {{{{0}, {1, 2}}, -1.0, 0.6},
                                          {{}, 0.25, 0.4}};
    auto [T, cert] = pinching_mix(sigma, terms);
    consider(T, cert, vec(sigma));
  }
  rep.properties.push_back(finish("certificate_residual", count, res_worst));
  rep.properties.push_back(finish("l2_vanishes_at_fixed_point", count, l2_worst));

  // diagonal weight: the general bound reduces to the tight classical factor
  double agree_worst = kMarginFloor;
  int agree_count = 0;
  for (int k = 0; k < 10; ++k) {
    const int d = 3 + k % 5;
    const RealVector pi = random_pi(d, rng);
    DetailedBalanceCert cert;
    cert.kind = BalanceKind::general_B;
    cert.B = Matrix(pi.cast<Complex>().asDiagonal());
    const double mu = 0.7;
    for (long n : {1L, 5L, 20L}) {
      const double general = db_general_bound(cert, mu, n).value;
      const double expected = std::pow(mu, static_cast<double>(n)) *
                              std::sqrt(pi.maxCoeff() / pi.minCoeff());
      agree_worst = std::max(agree_worst,
                             std::abs(general - expected) / expected - 1e-12);
      ++agree_count;
    }
  }
  rep.properties.push_back(
      finish("general_matches_classical_factor", agree_count, agree_worst));
  return rep;
}

SuiteReport verify_slow(std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "slow";
  rep.seed = seed;

  double exact_worst = kMarginFloor;
  double drop_worst = kMarginFloor;
  int count = 0;
  for (int D = 3; D <= 10; ++D) {
    std::vector<double> lambdas;
    for (int i = 0; i < D - 1; ++i) lambdas.push_back(0.2 + 0.04 * i);
    const TransitionMap T = slow_chain(lambdas);
    const MapMatrix T_inf = asymptotic_part(T);
    ++count;
    for (long n = 1; n <= D - 2; ++n) {
      const Matrix diff = power(T.matrix, n).entries - T_inf.entries;
      const double v = op_norm(MapMatrix(Matrix(diff)),
                               NormKind::one_to_one_classical);
      exact_worst = std::max(exact_worst, std::abs(v - 2.0) - 1e-10);
    }
    const Matrix diff = power(T.matrix, D - 1).entries - T_inf.entries;
    const double v = op_norm(MapMatrix(Matrix(diff)),
                             NormKind::one_to_one_classical);
    drop_worst = std::max(drop_worst, v - 2.0 + 1e-10);
  }
  rep.properties.push_back(finish("distance_pinned_at_two", count, exact_worst));
  rep.properties.push_back(finish("strict_drop_after_coupling", count, drop_worst));
  return rep;
}

std::vector<SuiteReport> verify_all(std::uint64_t seed) {
  return {verify_core(seed), verify_blaschke(seed), verify_model(seed),
          verify_detailed_balance(seed), verify_slow(seed)};
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "core") return verify_core(seed);
  if (name == "blaschke") return verify_blaschke(seed);
  if (name == "model") return verify_model(seed);
  if (name == "detailed_balance") return verify_detailed_balance(seed);
  if (name == "slow") return verify_slow(seed);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace specmix
