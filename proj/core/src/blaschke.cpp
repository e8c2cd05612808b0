#include "specmix/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specmix {

Complex blaschke_eval(const BlaschkeData& B, Complex z) {
  if (std::abs(z) > 1.0 + 1e-12)
    throw std::invalid_argument("blaschke_eval: |z| must be <= 1");
  Complex prod = 1.0;
  for (const auto& [lambda, mult] : B.roots) {
    const Complex factor = (z - lambda) / (1.0 - std::conj(lambda) * z);
    for (int k = 0; k < mult; ++k) prod *= factor;
  }
  return prod;
}

int default_grid_points(const BlaschkeData& B, double radius) {
  double gap = 1.0;
  for (const auto& [lambda, mult] : B.roots)
    gap = std::min(gap, std::abs(radius - std::abs(lambda)));
  gap = std::max(gap, 1e-12);
  const double suggested = 64.0 * B.degree() / gap;
  const double capped = std::min(suggested, static_cast<double>(1 << 20));
  return std::max(4096, static_cast<int>(std::ceil(capped)));
}

double blaschke_inv_sup(const BlaschkeData& B, double radius,
                        const BlaschkeSupOptions& opts) {
  if (radius >= 1.0)
    throw std::invalid_argument("blaschke_inv_sup: radius must be < 1");
  for (const auto& [lambda, mult] : B.roots)
    if (std::abs(radius - std::abs(lambda)) < 1e-12)
      throw std::invalid_argument(
          "blaschke_inv_sup: radius coincides with a root modulus");

  const int N = opts.grid_points > 0 ? opts.grid_points
                                     : default_grid_points(B, radius);
  auto inv_abs = [&](double theta) {
    const Complex z = radius * Complex(std::cos(theta), std::sin(theta));
    return 1.0 / std::abs(blaschke_eval(B, z));
  };

  double best = 0.0;
  int best_i = 0;
  for (int i = 0; i < N; ++i) {
    const double v = inv_abs(2.0 * M_PI * i / N);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }

  // golden-section refinement around the best grid point
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 2.0 * M_PI * (best_i - 1) / N;
  double b = 2.0 * M_PI * (best_i + 1) / N;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = inv_abs(c), fd = inv_abs(d);
  while (b - a > opts.angular_tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = inv_abs(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = inv_abs(d);
    }
  }
  return std::max(best, std::max(fc, fd));
}

double single_factor_sup(Complex lambda, double c) {
  const double al = std::abs(lambda);
  if (al >= c || c > 1.0)
    throw std::invalid_argument("single_factor_sup: requires |lambda| < c <= 1");
  return (1.0 - al * c) / (c - al);
}

}  // namespace specmix
