#pragma once

#include "specmix/spectral.hpp"

namespace specmix {

/// B(z) = prod over roots (with multiplicity) of (z - lambda)/(1 - conj(lambda) z).
Complex blaschke_eval(const BlaschkeData& B, Complex z);

struct BlaschkeSupOptions {
  int grid_points = 0;        // 0 -> automatic, see default_grid_points
  double angular_tol = 1e-12;
};

/// max |1/B| over the circle |z| = radius: uniform angular grid plus
/// golden-section refinement around the best grid point. Rejects radii that
/// coincide with a root modulus (the sup would be infinite).
double blaschke_inv_sup(const BlaschkeData& B, double radius,
                        const BlaschkeSupOptions& opts = {});

int default_grid_points(const BlaschkeData& B, double radius);

/// Exact sup over |z| = c of |(1 - conj(lambda) z)/(z - lambda)|,
/// equal to (1 - |lambda| c)/(c - |lambda|) for |lambda| < c <= 1.
double single_factor_sup(Complex lambda, double c);

}  // namespace specmix
