#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specmix/bounds.hpp"
#include "specmix/semigroup.hpp"

namespace specmix {

struct RunConfig {
  long n_min = 1;
  long n_max = 0;  // 0 -> automatic: min(256, 20 ceil(1/(1-mu)))
  long n_step = 1;
  NormKind norm = NormKind::op_inf;
  double tol_unit = 1e-8;
  double tol_cluster = 1e-7;
  double tol_rank = 1e-9;
  double tol_db = 1e-8;
  std::uint64_t seed = 0;
  std::string csv_path;
  std::string svg_path;
};

struct BoundCell {
  double value = 0.0;
  bool applicable = false;
};

struct BoundRow {
  long n = 0;
  double actual = 0.0;
  std::map<std::string, BoundCell> bounds;
};

struct BoundCurve {
  std::string instance_id;
  NormKind norm = NormKind::op_inf;
  std::vector<BoundRow> rows;
};

/// Sweep grid: n_min..min(256, 20 ceil(1/(1-mu))) with geometric thinning
/// above n = 64.
std::vector<long> sweep_grid(double mu, const RunConfig& cfg);

struct Instance {
  std::string id;
  TransitionMap map;
  std::optional<DetailedBalanceCert> cert;
  bool contractive = false;  // ||T||_inf <= 1 declared
};

/// Computes actual(n) and every applicable bound per n, each bound converted
/// into the requested norm via the equivalence constants.
BoundCurve sweep(const Instance& inst, const RunConfig& cfg);

std::string curve_to_csv(const BoundCurve& curve);
BoundCurve curve_from_csv(const std::string& csv, const std::string& instance_id,
                          NormKind norm);

/// Log-scale line chart of a bound curve; hand-rolled SVG, no dependencies.
std::string curve_to_svg(const BoundCurve& curve);

}  // namespace specmix
