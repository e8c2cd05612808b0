#include "specmix/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace specmix {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2)
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw std::invalid_argument("json: expected number or [re, im] pair");
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_file(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace

Json matrix_to_json(const Matrix& M) {
  Json rows = Json::array();
  bool real_only = true;
  for (Eigen::Index i = 0; i < M.rows() && real_only; ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j)
      if (M(i, j).imag() != 0.0) {
        real_only = false;
        break;
      }
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j)
      row.push_back(real_only ? Json(M(i, j).real()) : complex_to_json(M(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("json: matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols)
      throw std::invalid_argument("json: ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c) M(i, c) = complex_from_json(j[i][c]);
  }
  return M;
}

Json map_to_json(const TransitionMap& T) {
  Json j;
  j["dim"] = T.matrix.dim();
  j["kind"] = to_string(T.kind);
  if (T.base_dim > 0) j["base_dim"] = T.base_dim;
  j["entries"] = matrix_to_json(T.matrix.entries);
  if (!T.power_bounds.empty()) {
    Json pb = Json::array();
    for (const auto& b : T.power_bounds)
      pb.push_back({{"norm", to_string(b.norm)}, {"constant", b.value}});
    j["power_bounds"] = std::move(pb);
  }
  return j;
}

TransitionMap map_from_json(const Json& j) {
  TransitionMap T;
  if (j.contains("kraus")) {
    const int d = j.at("base_dim").get<int>();
    Matrix M = Matrix::Zero(d * d, d * d);
    Matrix completeness = Matrix::Zero(d, d);
    for (const auto& kj : j.at("kraus")) {
      const Matrix K = matrix_from_json(kj);
      if (K.rows() != d || K.cols() != d)
        throw std::invalid_argument("json: Kraus operator dimension mismatch");
      M += kron(K.conjugate(), K);
      completeness += K.adjoint() * K;
    }
    if ((completeness - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-8)
      throw std::invalid_argument("json: Kraus operators not trace preserving");
    T.matrix = MapMatrix(std::move(M));
    T.kind = MapKind::quantum_natural;
    T.base_dim = d;
  } else {
    T.matrix = MapMatrix(matrix_from_json(j.at("entries")));
    T.kind = j.contains("kind") ? map_kind_from_string(j.at("kind").get<std::string>())
                                : MapKind::generic;
    T.base_dim = j.value("base_dim", 0);
    if (j.contains("dim") && j.at("dim").get<int>() != T.matrix.dim())
      throw std::invalid_argument("json: declared dim does not match entries");
  }
  if (j.contains("power_bounds"))
    for (const auto& b : j.at("power_bounds"))
      T.power_bounds.push_back({norm_kind_from_string(b.at("norm").get<std::string>()),
                                b.at("constant").get<double>()});
  T.validate();
  return T;
}

TransitionMap load_map(const std::string& path) { return map_from_json(read_file(path)); }

void save_map(const TransitionMap& T, const std::string& path) {
  write_file(map_to_json(T), path);
}

Json cert_to_json(const DetailedBalanceCert& cert) {
  Json j;
  switch (cert.kind) {
    case BalanceKind::classical_pi: {
      j["kind"] = "classical_pi";
      Json pi = Json::array();
      for (Eigen::Index i = 0; i < cert.pi.size(); ++i) pi.push_back(cert.pi(i));
      j["pi"] = std::move(pi);
      break;
    }
    case BalanceKind::quantum_sigma:
      j["kind"] = "quantum_sigma";
      j["sigma"] = matrix_to_json(cert.sigma);
      break;
    case BalanceKind::general_B:
      j["kind"] = "general_B";
      j["B"] = matrix_to_json(cert.B);
      break;
  }
  j["residual"] = cert.residual;
  return j;
}

DetailedBalanceCert cert_from_json(const Json& j) {
  DetailedBalanceCert cert;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "classical_pi") {
    cert.kind = BalanceKind::classical_pi;
    const auto& pj = j.at("pi");
    cert.pi.resize(static_cast<Eigen::Index>(pj.size()));
    for (Eigen::Index i = 0; i < cert.pi.size(); ++i) cert.pi(i) = pj[i].get<double>();
  } else if (kind == "quantum_sigma") {
    cert.kind = BalanceKind::quantum_sigma;
    cert.sigma = matrix_from_json(j.at("sigma"));
  } else if (kind == "general_B") {
    cert.kind = BalanceKind::general_B;
    cert.B = matrix_from_json(j.at("B"));
  } else {
    throw std::invalid_argument("json: unknown balance kind " + kind);
  }
  cert.residual = j.value("residual", 0.0);
  cert.validate();
  return cert;
}

DetailedBalanceCert load_cert(const std::string& path) {
  return cert_from_json(read_file(path));
}

void save_cert(const DetailedBalanceCert& cert, const std::string& path) {
  write_file(cert_to_json(cert), path);
}

Json spectral_to_json(const SpectralData& spec) {
  Json j;
  Json evs = Json::array();
  for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i)
    evs.push_back(complex_to_json(spec.eigenvalues(i)));
  j["eigenvalues"] = std::move(evs);
  Json clusters = Json::array();
  for (const auto& c : spec.clusters) {
    Json cj;
    cj["representative"] = complex_to_json(c.representative);
    cj["multiplicity"] = c.multiplicity;
    cj["jordan_sizes"] = c.jordan_sizes;
    clusters.push_back(std::move(cj));
  }
  j["clusters"] = std::move(clusters);
  j["mu"] = spec.mu;
  j["d_mu"] = spec.d_mu;
  j["kappa"] = spec.kappa;
  j["defective"] = spec.defective;
  j["tol_cluster"] = spec.tol_cluster_used;
  return j;
}

Json blaschke_to_json(const BlaschkeData& B) {
  Json roots = Json::array();
  for (const auto& [lambda, mult] : B.roots)
    roots.push_back({{"root", complex_to_json(lambda)}, {"multiplicity", mult}});
  return Json{{"degree", B.degree()}, {"roots", std::move(roots)}};
}

}  // namespace specmix
