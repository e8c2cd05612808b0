#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "specmix/blaschke.hpp"
#include "specmix/bounds.hpp"
#include "specmix/generators.hpp"
#include "specmix/json_io.hpp"
#include "specmix/norms.hpp"
#include "specmix/semigroup.hpp"
#include "specmix/spectral.hpp"
#include "specmix/sweep.hpp"
#include "specmix/verify.hpp"

namespace {

using namespace specmix;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value) {
  if (key == "n_min") cfg.n_min = std::stol(value);
  else if (key == "n_max") cfg.n_max = std::stol(value);
  else if (key == "n_step") cfg.n_step = std::stol(value);
  else if (key == "norm") cfg.norm = norm_kind_from_string(value);
  else if (key == "seed") cfg.seed = std::stoull(value);
  else if (key == "tol_unit") cfg.tol_unit = std::stod(value);
  else if (key == "tol_cluster") cfg.tol_cluster = std::stod(value);
  else if (key == "tol_rank") cfg.tol_rank = std::stod(value);
  else if (key == "tol_db") cfg.tol_db = std::stod(value);
  else if (key == "csv") cfg.csv_path = value;
  else if (key == "svg") cfg.svg_path = value;
  else throw std::invalid_argument("config: unknown key " + key);
}

/// --config accepts a JSON object or a flat key = value TOML file.
void load_config(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = trim(buf.str());
  if (!text.empty() && text.front() == '{') {
    const Json j = Json::parse(text);
    for (const auto& [key, value] : j.items())
      apply_config_entry(cfg, key,
                         value.is_string() ? value.get<std::string>()
                                           : value.dump());
    return;
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: malformed line: " + line);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    apply_config_entry(cfg, key, value);
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SPECMIX_SEED")) return std::stoull(env);
  return 0;
}

RealVector seeded_pi(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.2, 1.0);
  RealVector pi(d);
  for (int i = 0; i < d; ++i) pi(i) = u(rng);
  return pi / pi.sum();
}

RealMatrix seeded_proposal(int d, std::mt19937_64& rng) {
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

std::vector<Complex> parse_zeros(const std::vector<std::string>& specs) {
  std::vector<Complex> zeros;
  for (const auto& s : specs) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
      zeros.emplace_back(std::stod(s), 0.0);
    } else {
      zeros.emplace_back(std::stod(s.substr(0, comma)),
                         std::stod(s.substr(comma + 1)));
    }
  }
  return zeros;
}

int cmd_analyze(const std::string& file, const std::string& json_out,
                const RunConfig& cfg) {
  const TransitionMap T = load_map(file);
  const auto eig = eigendecompose(T.matrix);
  const MapMatrix T_inf =
      asymptotic_part(T.matrix, eig, cfg.tol_cluster, cfg.tol_unit);
  const MapMatrix A(Matrix(T.matrix.entries - T_inf.entries));

  AnalysisOptions opts;
  opts.tol_cluster = cfg.tol_cluster;
  opts.tol_rank = cfg.tol_rank;
  const SpectralData spec = analyze_matrix(A, opts);
  const BlaschkeData B = minimal_polynomial(spec, A);

  std::cout << "map: " << file << " (dim " << T.dim() << ", "
            << to_string(T.kind) << ")\n";
  std::cout << "eigenvalues of T:\n";
  for (Eigen::Index i = 0; i < eig.values.size(); ++i)
    std::cout << "  " << eig.values(i).real() << (eig.values(i).imag() < 0 ? " - " : " + ")
              << std::abs(eig.values(i).imag()) << "i  (|.| = "
              << std::abs(eig.values(i)) << ")\n";
  if (A.entries.cwiseAbs().maxCoeff() <= 1e-12) {
    std::cout << "already stationary: T coincides with its asymptotic part\n";
  }
  std::cout << "mixing part: mu = " << spec.mu << ", d_mu = " << spec.d_mu
            << ", kappa = " << spec.kappa << ", |m| = " << B.degree()
            << (spec.defective ? " (defective)" : "") << "\n";
  std::cout << "clusters of T - T_inf:\n";
  for (const auto& c : spec.clusters) {
    std::cout << "  lambda ~ " << c.representative.real()
              << (c.representative.imag() < 0 ? " - " : " + ")
              << std::abs(c.representative.imag()) << "i, multiplicity "
              << c.multiplicity << ", jordan sizes [";
    for (size_t k = 0; k < c.jordan_sizes.size(); ++k)
      std::cout << (k ? " " : "") << c.jordan_sizes[k];
    std::cout << "]\n";
  }

  if (!json_out.empty()) {
    Json j = spectral_to_json(spec);
    j["minimal_polynomial"] = blaschke_to_json(B);
    std::ofstream out(json_out);
    if (!out) throw std::runtime_error("cannot write " + json_out);
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_sweep(const std::string& file, const std::string& cert_file,
              bool contractive, RunConfig cfg) {
  Instance inst;
  inst.id = std::filesystem::path(file).stem().string();
  inst.map = load_map(file);
  if (!cert_file.empty()) inst.cert = load_cert(cert_file);
  inst.contractive = contractive;

  const BoundCurve curve = sweep(inst, cfg);
  const std::string csv = curve_to_csv(curve);
  if (cfg.csv_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(cfg.csv_path);
    if (!out) throw std::runtime_error("cannot write " + cfg.csv_path);
    out << csv;
    std::cout << "wrote " << cfg.csv_path << " (" << curve.rows.size()
              << " rows)\n";
  }
  if (!cfg.svg_path.empty()) {
    std::ofstream out(cfg.svg_path);
    if (!out) throw std::runtime_error("cannot write " + cfg.svg_path);
    out << curve_to_svg(curve);
    std::cout << "wrote " << cfg.svg_path << "\n";
  }
  return 0;
}

int cmd_generate(const std::string& family, int dim, int kraus, double p,
                 const std::vector<double>& lambdas,
                 const std::vector<std::string>& zeros, std::uint64_t seed,
                 const std::string& out) {
  TransitionMap T;
  std::optional<DetailedBalanceCert> cert;
  std::mt19937_64 rng(seed);

  if (family == "stochastic") {
    T = random_stochastic(dim, seed);
  } else if (family == "channel") {
    T = random_channel(dim, kraus, seed);
  } else if (family == "metropolis") {
    auto [map, c] = metropolis_chain(seeded_pi(dim, rng), seeded_proposal(dim, rng));
    T = std::move(map);
    cert = std::move(c);
  } else if (family == "slow") {
    T = slow_chain(lambdas);
  } else if (family == "depolarizing") {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix G(dim, dim);
    for (int j = 0; j < dim; ++j)
      for (int i = 0; i < dim; ++i) G(i, j) = Complex(g(rng), g(rng));
    Matrix sigma = G * G.adjoint() + 0.2 * Matrix::Identity(dim, dim);
    sigma /= sigma.trace().real();
    auto [map, c] = sigma_depolarizing(sigma, p);
    T = std::move(map);
    cert = std::move(c);
  } else if (family == "model") {
    T.matrix = model_operator(parse_zeros(zeros));
    T.kind = MapKind::generic;
    T.power_bounds = {{NormKind::op_inf, 1.0}};
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }

  save_map(T, out);
  std::cout << "wrote " << out << "\n";
  if (cert) {
    const std::string cert_path = out + ".cert.json";
    save_cert(*cert, cert_path);
    std::cout << "wrote " << cert_path << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed,
               const std::string& json_out) {
  std::vector<SuiteReport> reports;
  if (suite == "all")
    reports = verify_all(seed);
  else
    reports.push_back(run_suite(suite, seed));

  Json j = Json::array();
  bool pass = true;
  for (const auto& r : reports) {
    j.push_back(r.to_json());
    pass = pass && r.pass();
  }
  std::cout << j.dump(2) << "\n";
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) throw std::runtime_error("cannot write " + json_out);
    out << j.dump(2) << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_convert_norm(double value, const std::string& from, const std::string& to,
                     const std::string& kind, int dim) {
  const NormKind from_norm = norm_kind_from_string(from);
  ConvertTarget target;
  if (to == "one_to_one") target = ConvertTarget::one_to_one;
  else if (to == "op_inf") target = ConvertTarget::op_inf;
  else if (to == "diamond") target = ConvertTarget::diamond;
  else throw std::invalid_argument("unknown target norm: " + to);

  const Interval iv =
      norm_convert(value, from_norm, target, map_kind_from_string(kind), dim);
  std::cout.precision(17);
  std::cout << "lower: " << iv.lower << "\nupper: " << iv.upper << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral convergence analysis for classical and quantum Markov semigroups"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.seed = default_seed();
  std::string config_file;
  app.add_option("--config", config_file, "RunConfig as JSON or flat TOML");

  std::string file, cert_file, json_out, norm_name, out_path;
  bool contractive = false;

  auto* analyze = app.add_subcommand("analyze", "spectral report for a map file");
  analyze->add_option("file", file)->required();
  analyze->add_option("--json", json_out, "write the report as JSON");

  auto* sw = app.add_subcommand("sweep", "bound-vs-actual table over n");
  sw->add_option("file", file)->required();
  sw->add_option("--cert", cert_file, "detailed balance certificate JSON");
  auto* o_nmin = sw->add_option("--n-min", cfg.n_min);
  auto* o_nmax = sw->add_option("--n-max", cfg.n_max);
  auto* o_nstep = sw->add_option("--n-step", cfg.n_step);
  auto* norm_opt = sw->add_option("--norm", norm_name,
                                  "op_inf | one_to_one_classical | one_to_one_hermitian");
  auto* o_csv = sw->add_option("--csv", cfg.csv_path);
  auto* o_svg = sw->add_option("--svg", cfg.svg_path);
  sw->add_flag("--contractive", contractive, "declare ||T||_inf <= 1");

  std::string family;
  int dim = 4, kraus = 2;
  double p = 0.5;
  std::vector<double> lambdas;
  std::vector<std::string> zeros;
  auto* gen = app.add_subcommand("generate", "write a map JSON (plus certificate)");
  gen->add_option("family", family,
                  "stochastic | channel | metropolis | slow | depolarizing | model")
      ->required();
  gen->add_option("--dim", dim);
  gen->add_option("--kraus", kraus);
  gen->add_option("--p", p);
  gen->add_option("--lambdas", lambdas, "slow-chain diagonal entries");
  gen->add_option("--zero", zeros, "model zero as re,im (repeatable)");
  gen->add_option("--out", out_path)->required();
  auto* gen_seed = gen->add_option("--seed", cfg.seed);

  std::string suite;
  auto* ver = app.add_subcommand("verify", "run a property suite");
  ver->add_option("suite", suite,
                  "core | blaschke | model | detailed_balance | slow | all")
      ->required();
  auto* ver_seed = ver->add_option("--seed", cfg.seed);
  ver->add_option("--json", json_out, "also write the report to a file");

  double value = 0.0;
  std::string from_norm = "op_inf", to_norm = "one_to_one", kind = "classical";
  auto* conv = app.add_subcommand("convert-norm", "norm equivalence interval");
  conv->add_option("--value", value)->required();
  conv->add_option("--from", from_norm);
  conv->add_option("--to", to_norm);
  conv->add_option("--kind", kind);
  conv->add_option("--dim", dim)->required();

  try {
    app.parse(argc, argv);

    if (!config_file.empty()) {
      // explicit flags win over the config file
      RunConfig from_file = cfg;
      load_config(config_file, from_file);
      if (o_nmin->count() == 0) cfg.n_min = from_file.n_min;
      if (o_nmax->count() == 0) cfg.n_max = from_file.n_max;
      if (o_nstep->count() == 0) cfg.n_step = from_file.n_step;
      if (o_csv->count() == 0) cfg.csv_path = from_file.csv_path;
      if (o_svg->count() == 0) cfg.svg_path = from_file.svg_path;
      if (norm_opt->count() == 0) cfg.norm = from_file.norm;
      if (gen_seed->count() == 0 && ver_seed->count() == 0)
        cfg.seed = from_file.seed;
      cfg.tol_unit = from_file.tol_unit;
      cfg.tol_cluster = from_file.tol_cluster;
      cfg.tol_rank = from_file.tol_rank;
      cfg.tol_db = from_file.tol_db;
    }
    if (norm_opt->count() > 0) cfg.norm = norm_kind_from_string(norm_name);

    if (analyze->parsed()) return cmd_analyze(file, json_out, cfg);
    if (sw->parsed()) return cmd_sweep(file, cert_file, contractive, cfg);
    if (gen->parsed())
      return cmd_generate(family, dim, kraus, p, lambdas, zeros, cfg.seed,
                          out_path);
    if (ver->parsed()) return cmd_verify(suite, cfg.seed, json_out);
    if (conv->parsed())
      return cmd_convert_norm(value, from_norm, to_norm, kind, dim);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
