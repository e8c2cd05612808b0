#include "specmix/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "specmix/norms.hpp"

namespace specmix {

namespace {

struct NativeBound {
  BoundResult result;
  NormKind native = NormKind::op_inf;
};

BoundCell to_cell(const NativeBound& b, NormKind requested, MapKind kind, int D) {
  if (!b.result.applicable) return {0.0, false};
  double factor;
  try {
    factor = conversion_factor(b.native, requested, kind, D);
  } catch (const std::invalid_argument&) {
    return {0.0, false};
  }
  return {b.result.value * factor, true};
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::vector<long> sweep_grid(double mu, const RunConfig& cfg) {
  long n_max = cfg.n_max;
  if (n_max <= 0) {
    if (mu < 1.0 && mu >= 0.0) {
      const double scale = 20.0 * std::ceil(1.0 / (1.0 - mu));
      n_max = std::min<long>(256, static_cast<long>(scale));
    } else {
      n_max = 256;
    }
    n_max = std::max(n_max, cfg.n_min);
  }
  const long step = std::max<long>(1, cfg.n_step);
  std::vector<long> grid;
  long n = std::max<long>(1, cfg.n_min);
  while (n <= n_max) {
    grid.push_back(n);
    if (n < 64) {
      n += step;
    } else {
      // geometric thinning past the dense prefix
      n = std::max(n + step, static_cast<long>(std::ceil(1.1 * n)));
    }
  }
  if (grid.empty() || grid.back() != n_max) grid.push_back(n_max);
  return grid;
}

BoundCurve sweep(const Instance& inst, const RunConfig& cfg) {
  const TransitionMap& T = inst.map;
  const int D = T.matrix.dim();

  AnalysisOptions aopts;
  aopts.tol_cluster = cfg.tol_cluster;
  aopts.tol_rank = cfg.tol_rank;

  const auto eig = eigendecompose(T.matrix);
  const MapMatrix T_inf =
      asymptotic_part(T.matrix, eig, cfg.tol_cluster, cfg.tol_unit);
  const MapMatrix A(Matrix(T.matrix.entries - T_inf.entries));

  const SpectralData spec = analyze_matrix(A, aopts);
  const BlaschkeData B = minimal_polynomial(spec, A);
  const double mu = spec.mu;

  auto power_C = [&](NormKind norm) -> double {
    try {
      return T.power_bound(norm);
    } catch (const std::exception&) {
      return inst.contractive && norm == NormKind::op_inf ? 1.0 : -1.0;
    }
  };

  // Wiener-algebra bounds want a power bound in the norm they are stated in;
  // prefer the requested norm, fall back to op_inf.
  NormKind wiener_norm = cfg.norm;
  double wiener_C = power_C(wiener_norm);
  if (wiener_C <= 0.0) {
    wiener_norm = NormKind::op_inf;
    wiener_C = power_C(wiener_norm);
  }
  const double schur_C = power_C(NormKind::op_inf);

  std::optional<L2EigenData> l2;
  TightSimple db_ts;
  bool have_db_ts = false;
  NormKind db_ts_norm = NormKind::one_to_one_classical;
  if (inst.cert && cert_accepted(T, *inst.cert, cfg.tol_db)) {
    try {
      l2 = build_l2_data(T, *inst.cert, cfg.tol_unit);
    } catch (const std::exception&) {
      l2.reset();
    }
    if (inst.cert->kind == BalanceKind::classical_pi) {
      have_db_ts = true;
      db_ts_norm = NormKind::one_to_one_classical;
    } else if (inst.cert->kind == BalanceKind::quantum_sigma && T.base_dim > 0) {
      have_db_ts = true;
      db_ts_norm = NormKind::one_to_one_hermitian;
    }
  }
  RealVector sigma_eigs;
  if (have_db_ts && inst.cert->kind == BalanceKind::quantum_sigma) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(inst.cert->sigma);
    sigma_eigs = es.eigenvalues();
  }

  const auto grid = sweep_grid(mu, cfg);
  const auto actual = distance_curve(T, T_inf, grid, cfg.norm);

  BoundCurve curve;
  curve.instance_id = inst.id;
  curve.norm = cfg.norm;
  curve.rows.reserve(grid.size());

  for (size_t idx = 0; idx < grid.size(); ++idx) {
    const long n = grid[idx];
    BoundRow row;
    row.n = n;
    row.actual = actual[idx].actual;

    if (schur_C > 0.0)
      row.bounds["schur"] =
          to_cell({schur_bound(mu, D, schur_C, n), NormKind::op_inf}, cfg.norm,
                  T.kind, D);

    row.bounds["jordan_empirical"] =
        to_cell({jordan_empirical_bound(spec, n), NormKind::op_inf}, cfg.norm,
                T.kind, D);

    double sup_inv = -1.0;
    if (wiener_C > 0.0 && mu > 0.0 && wiener_hypothesis(mu, n)) {
      try {
        // fixed grid: the sweep evaluates the sup at up to a few hundred radii,
        // and 8192 points resolve every peak of a degree <= D product
        sup_inv = blaschke_inv_sup(B, mu * (1.0 + 1.0 / static_cast<double>(n)),
                                   {8192, 1e-12});
      } catch (const std::exception&) {
        sup_inv = -1.0;
      }
    }
    if (wiener_C > 0.0 && (sup_inv >= 0.0 || mu == 0.0)) {
      row.bounds["wiener_main"] =
          to_cell({wiener_main_bound(mu, B.degree(), wiener_C, n, sup_inv),
                   wiener_norm},
                  cfg.norm, T.kind, D);
      try {
        row.bounds["wiener_factorized"] =
            to_cell({wiener_factorized_bound(B, mu, wiener_C, n), wiener_norm},
                    cfg.norm, T.kind, D);
      } catch (const std::exception&) {
        row.bounds["wiener_factorized"] = {0.0, false};
      }
    }
    if (inst.contractive && (sup_inv >= 0.0 || mu == 0.0))
      row.bounds["contractive"] =
          to_cell({contractive_bound(mu, B.degree(), n, sup_inv),
                   NormKind::op_inf},
                  cfg.norm, T.kind, D);

    if (inst.cert)
      row.bounds["db_general"] =
          to_cell({db_general_bound(*inst.cert, mu, n), NormKind::op_inf},
                  cfg.norm, T.kind, D);
    if (have_db_ts) {
      db_ts = inst.cert->kind == BalanceKind::classical_pi
                  ? db_classical_bound(inst.cert->pi, mu, n)
                  : db_quantum_bound(sigma_eigs, mu, n, T.base_dim);
      row.bounds["db_tight"] =
          to_cell({{db_ts.tight, db_ts.applicable}, db_ts_norm}, cfg.norm,
                  T.kind, D);
      row.bounds["db_simple"] =
          to_cell({{db_ts.simple, db_ts.applicable}, db_ts_norm}, cfg.norm,
                  T.kind, D);
    }
    if (l2)
      row.bounds["l2_overlap"] =
          to_cell({l2_overlap_norm_bound(*l2, n), db_ts_norm}, cfg.norm, T.kind,
                  D);

    curve.rows.push_back(std::move(row));
  }
  return curve;
}

std::string curve_to_csv(const BoundCurve& curve) {
  std::set<std::string> names;
  for (const auto& row : curve.rows)
    for (const auto& [name, cell] : row.bounds) names.insert(name);

  std::ostringstream os;
  os << "n,actual";
  for (const auto& name : names) os << "," << name;
  os << "\n";
  for (const auto& row : curve.rows) {
    os << row.n << "," << format_double(row.actual);
    for (const auto& name : names) {
      os << ",";
      const auto it = row.bounds.find(name);
      if (it != row.bounds.end() && it->second.applicable)
        os << format_double(it->second.value);
    }
    os << "\n";
  }
  return os.str();
}

BoundCurve curve_from_csv(const std::string& csv, const std::string& instance_id,
                          NormKind norm) {
  BoundCurve curve;
  curve.instance_id = instance_id;
  curve.norm = norm;

  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("csv: empty input");
  std::vector<std::string> header;
  {
    std::istringstream hs(line);
    std::string field;
    while (std::getline(hs, field, ',')) header.push_back(field);
  }
  if (header.size() < 2 || header[0] != "n" || header[1] != "actual")
    throw std::invalid_argument("csv: malformed header");

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    while (fields.size() < header.size()) fields.emplace_back();
    BoundRow row;
    row.n = std::stol(fields[0]);
    row.actual = std::stod(fields[1]);
    for (size_t k = 2; k < header.size(); ++k)
      if (!fields[k].empty()) row.bounds[header[k]] = {std::stod(fields[k]), true};
    curve.rows.push_back(std::move(row));
  }
  return curve;
}

std::string curve_to_svg(const BoundCurve& curve) {
  const int W = 900, H = 540;
  const int ml = 70, mr = 180, mt = 40, mb = 50;
  const double floor_val = 1e-18;

  std::set<std::string> names;
  double vmin = 1e300, vmax = 0.0;
  long nmin = 0, nmax = 1;
  for (const auto& row : curve.rows) {
    nmin = nmin == 0 ? row.n : std::min(nmin, row.n);
    nmax = std::max(nmax, row.n);
    auto consider = [&](double v) {
      if (v > floor_val) {
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
      }
    };
    consider(row.actual);
    for (const auto& [name, cell] : row.bounds) {
      names.insert(name);
      if (cell.applicable) consider(cell.value);
    }
  }
  if (vmax <= 0.0) {
    vmin = floor_val;
    vmax = 1.0;
  }
  const double lmin = std::log10(vmin), lmax = std::log10(vmax);
  const double lspan = std::max(lmax - lmin, 1e-9);

  auto x_of = [&](long n) {
    return ml + (W - ml - mr) * static_cast<double>(n - nmin) /
                    std::max<long>(1, nmax - nmin);
  };
  auto y_of = [&](double v) {
    const double l = std::log10(std::max(v, floor_val));
    return mt + (H - mt - mb) * (lmax - l) / lspan;
  };

  const std::vector<std::string> palette = {
      "#1b6ca8", "#d1495b", "#66a182", "#edae49", "#8d5a97",
      "#00798c", "#c27ba0", "#5d576b", "#a87c32", "#3f784c"};

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
     << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << ml << "\" y=\"24\" font-family=\"sans-serif\" "
        "font-size=\"15\">"
     << curve.instance_id << " (" << to_string(curve.norm) << ")</text>\n";

  // axes
  os << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr
     << "\" y2=\"" << H - mb << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
     << "\" y2=\"" << H - mb << "\" stroke=\"black\"/>\n";
  for (int dec = static_cast<int>(std::ceil(lmin));
       dec <= static_cast<int>(std::floor(lmax)); ++dec) {
    const double y = y_of(std::pow(10.0, dec));
    os << "<line x1=\"" << ml - 4 << "\" y1=\"" << y << "\" x2=\"" << W - mr
       << "\" y2=\"" << y << "\" stroke=\"#dddddd\"/>\n";
    os << "<text x=\"" << ml - 8 << "\" y=\"" << y + 4
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
          "font-size=\"11\">1e"
       << dec << "</text>\n";
  }
  os << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 12
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"13\">n</text>\n";

  auto polyline = [&](const std::string& color, bool dashed,
                      const std::vector<std::pair<long, double>>& pts) {
    if (pts.empty()) return;
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\"";
    if (dashed) os << " stroke-dasharray=\"5,3\"";
    os << " points=\"";
    for (const auto& [n, v] : pts) os << x_of(n) << "," << y_of(v) << " ";
    os << "\"/>\n";
  };

  std::vector<std::pair<long, double>> pts;
  for (const auto& row : curve.rows)
    if (row.actual > floor_val) pts.emplace_back(row.n, row.actual);
  polyline("black", false, pts);

  int ci = 0, ly = mt + 14;
  os << "<text x=\"" << W - mr + 12 << "\" y=\"" << ly
     << "\" font-family=\"sans-serif\" font-size=\"12\">actual</text>\n";
  os << "<line x1=\"" << W - mr - 26 << "\" y1=\"" << ly - 4 << "\" x2=\""
     << W - mr + 6 << "\" y2=\"" << ly - 4 << "\" stroke=\"black\"/>\n";
  for (const auto& name : names) {
    const std::string& color = palette[ci % palette.size()];
    pts.clear();
    for (const auto& row : curve.rows) {
      const auto it = row.bounds.find(name);
      if (it != row.bounds.end() && it->second.applicable &&
          it->second.value > floor_val)
        pts.emplace_back(row.n, it->second.value);
    }
    polyline(color, true, pts);
    ly += 18;
    os << "<line x1=\"" << W - mr - 26 << "\" y1=\"" << ly - 4 << "\" x2=\""
       << W - mr + 6 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color
       << "\" stroke-dasharray=\"5,3\"/>\n";
    os << "<text x=\"" << W - mr + 12 << "\" y=\"" << ly
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << name
       << "</text>\n";
    ++ci;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace specmix
