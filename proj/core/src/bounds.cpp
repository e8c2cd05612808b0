#include "specmix/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specmix {

bool wiener_hypothesis(double mu, long n) {
  if (mu >= 1.0) return false;
  return static_cast<double>(n) > mu / (1.0 - mu);
}

BoundResult schur_bound(double mu, int D, double C, long n) {
  if (mu < 0.0 || mu >= 1.0) throw std::invalid_argument("schur_bound: need 0 <= mu < 1");
  if (n < 1 || C <= 0.0) throw std::invalid_argument("schur_bound: need n >= 1, C > 0");
  const double nn = static_cast<double>(n);
  if (mu == 0.0 && n >= D) return {0.0, true};
  const double value = 2.0 * std::pow(mu, nn - D + 1) * std::pow(nn, D - 1) *
                       std::pow(mu + 2.0 * C, D - 1);
  return {value, true};
}

BoundResult jordan_empirical_bound(const SpectralData& spec, long n) {
  if (!std::isfinite(spec.kappa)) return not_applicable();
  const double mu = spec.mu;
  const int d_mu = spec.d_mu;
  const double nn = static_cast<double>(n);
  if (mu == 0.0) return {0.0, n >= d_mu};
  const double value = spec.kappa * d_mu * std::pow(nn, d_mu - 1) *
                       std::pow(mu, nn - d_mu + 1);
  return {value, true};
}

BoundResult wiener_main_bound(double mu, int m_degree, double C, long n,
                              double sup_inv_B) {
  if (!wiener_hypothesis(mu, n)) return not_applicable();
  if (mu == 0.0) return {0.0, true};
  const double nn = static_cast<double>(n);
  const double md = static_cast<double>(m_degree);
  const double denom = nn * std::pow(1.0 - (1.0 + 1.0 / nn) * mu, 1.5);
  const double value = std::pow(mu, nn + 1.0) * 4.0 * C * kESquared *
                       std::sqrt(md) * (md + 1.0) / denom * sup_inv_B;
  return {value, true};
}

BoundResult wiener_factorized_bound(const BlaschkeData& B, double mu, double C,
                                    long n) {
  if (!wiener_hypothesis(mu, n)) return not_applicable();
  if (mu == 0.0) return {0.0, true};
  const int md = B.degree();
  // one root of modulus mu is excluded; the factor depends only on |lambda|,
  // so the first such root in canonical order is taken
  bool excluded = false;
  const double nn = static_cast<double>(n);
  double prod = 1.0;
  for (const auto& [lambda, mult] : B.roots) {
    const double al = std::abs(lambda);
    int reps = mult;
    if (!excluded && std::abs(al - mu) <= 1e-12) {
      excluded = true;
      reps -= 1;
    }
    const double factor =
        (1.0 - (1.0 + 1.0 / nn) * mu * al) / (mu - al + mu / nn);
    for (int k = 0; k < reps; ++k) prod *= factor;
  }
  if (!excluded)
    throw std::invalid_argument(
        "wiener_factorized_bound: no root of modulus mu in the minimal "
        "polynomial");
  const double value = std::pow(mu, nn) * 4.0 * C * kESquared *
                       std::sqrt(static_cast<double>(md)) * (md + 1.0) /
                       std::pow(1.0 - (1.0 + 1.0 / nn) * mu, 1.5) * prod;
  return {value, true};
}

BoundResult contractive_bound(double mu, int m_degree, long n, double sup_inv_B) {
  if (!wiener_hypothesis(mu, n)) return not_applicable();
  if (mu == 0.0) return {0.0, true};
  const double nn = static_cast<double>(n);
  const double s = (1.0 + 1.0 / nn) * mu;
  const double value = std::pow(mu, nn + 1.0) * 2.0 * m_degree * kE /
                       (nn * (1.0 - s * s)) * sup_inv_B;
  return {value, true};
}

BoundResult db_general_bound(const DetailedBalanceCert& cert, double mu, long n) {
  const Matrix Bh = cert.balance_sqrt();
  const Matrix Bih = cert.balance_inv_sqrt();
  Eigen::JacobiSVD<Matrix> s1(Bh), s2(Bih);
  const double cond = s1.singularValues()(0) * s2.singularValues()(0);
  return {std::pow(mu, static_cast<double>(n)) * cond, true};
}

TightSimple db_classical_bound(const RealVector& pi, double mu, long n) {
  const double pmin = pi.minCoeff();
  const double pmax = pi.maxCoeff();
  if (pmin <= 0.0) throw std::invalid_argument("db_classical_bound: min pi must be > 0");
  const double mun = std::pow(mu, static_cast<double>(n));
  const double d = static_cast<double>(pi.size());
  return {mun * std::sqrt(d) * std::sqrt(pmax / pmin), mun / pmin, true};
}

TightSimple db_quantum_bound(const RealVector& sigma_eigs, double mu, long n,
                             int d) {
  const double lmin = sigma_eigs.minCoeff();
  const double lmax = sigma_eigs.maxCoeff();
  if (lmin <= 0.0) throw std::invalid_argument("db_quantum_bound: lambda_min must be > 0");
  const double mun = std::pow(mu, static_cast<double>(n));
  return {mun * std::sqrt(static_cast<double>(d)) * std::sqrt(lmax / lmin),
          mun / lmin, true};
}

BoundResult db_gibbs_bound(double H_norm, double beta, int d, double mu, long n) {
  if (beta < 0.0 || H_norm < 0.0)
    throw std::invalid_argument("db_gibbs_bound: beta and ||H|| must be >= 0");
  const double value = std::pow(mu, static_cast<double>(n)) * d *
                       std::exp(2.0 * beta * H_norm);
  return {value, true};
}

double l2_bound(const L2EigenData& data, const Vector& Z_vec, long n) {
  if (data.gram_residual > 1e-8)
    throw std::runtime_error("l2_bound: Gram residual exceeds tolerance");
  double sum = 0.0;
  for (size_t i = 0; i < data.lambdas.size(); ++i) {
    const Complex overlap = data.Y.col(static_cast<Eigen::Index>(i)).dot(Z_vec);
    sum += std::norm(overlap) *
           std::pow(data.lambdas[i] * data.lambdas[i], static_cast<double>(n));
  }
  return std::sqrt(sum);
}

BoundResult l2_overlap_norm_bound(const L2EigenData& data, long n) {
  if (data.gram_residual > 1e-8) return not_applicable();
  if (data.kind == BalanceKind::classical_pi) {
    const int D = static_cast<int>(data.Y.rows());
    double best = 0.0;
    for (int j = 0; j < D; ++j) {
      Vector e = Vector::Zero(D);
      e(j) = 1.0;
      best = std::max(best, l2_bound(data, e, n));
    }
    return {best, true};
  }
  if (data.kind == BalanceKind::quantum_sigma && data.base_dim > 0) {
    double sum = 0.0;
    for (size_t i = 0; i < data.lambdas.size(); ++i) {
      const Matrix Yi = unvec(data.Y.col(static_cast<Eigen::Index>(i)), data.base_dim);
      Eigen::JacobiSVD<Matrix> svd(Yi);
      const double yinf = svd.singularValues()(0);
      sum += yinf * yinf *
             std::pow(data.lambdas[i] * data.lambdas[i], static_cast<double>(n));
    }
    return {std::sqrt(sum), true};
  }
  return not_applicable();
}

double efficiency_threshold(long N, double alpha, double k, double c_mu,
                            double c_H, double beta, int s, double eps) {
  if (N <= 0 || c_mu <= 0.0 || c_H <= 0.0 || s < 1 || eps <= 0.0 || eps > 1.0)
    throw std::invalid_argument("efficiency_threshold: parameter out of range");
  const double Nd = static_cast<double>(N);
  return std::pow(Nd, alpha) / c_mu *
         (2.0 * beta * c_H * std::pow(Nd, k) + Nd * std::log(static_cast<double>(s)) +
          std::log(1.0 / eps));
}

}  // namespace specmix
