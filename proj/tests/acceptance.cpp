// Acceptance harness: runs the verification suites plus a worked-value
// regression and prints one line per criterion. Exit status is nonzero when
// any criterion fails.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "specmix/blaschke.hpp"
#include "specmix/bounds.hpp"
#include "specmix/verify.hpp"

namespace {

constexpr std::uint64_t kSeed = 20260823;

bool property_pass(const specmix::SuiteReport& rep, const std::string& name) {
  for (const auto& p : rep.properties)
    if (p.name == name) return p.pass;
  return false;
}

bool rel_close(double got, double want, double tol = 1e-3) {
  return std::abs(got - want) <= tol * std::max(1e-300, std::abs(want));
}

bool worked_values() {
  using namespace specmix;
  bool ok = true;

  ok &= rel_close(schur_bound(0.5, 2, 1.0, 4).value, 2.5);
  ok &= rel_close(schur_bound(0.9, 4, 2.0, 10).value, 112542.30397620006);

  ok &= rel_close(wiener_main_bound(0.5, 2, 1.0, 10, 26.3636).value,
                  0.5347381859691596);
  ok &= rel_close(wiener_main_bound(0.5, 1, 1.0, 10, 1.0 / 0.55).value,
                  0.017384713517222584);

  BlaschkeData two{{{Complex(0, 0), 1}, {Complex(0.5, 0), 1}}};
  ok &= rel_close(wiener_factorized_bound(two, 0.5, 1.0, 10).value,
                  0.7375709290208116);
  ok &= rel_close(contractive_bound(0.5, 2, 10, 26.3636).value,
                  0.020067118843179573);

  DetailedBalanceCert pi_cert;
  pi_cert.kind = BalanceKind::classical_pi;
  pi_cert.pi.resize(2);
  pi_cert.pi << 0.25, 0.75;
  ok &= rel_close(db_general_bound(pi_cert, 0.5, 10).value,
                  0.0016914558667664816);

  RealVector pi(2);
  pi << 0.25, 0.75;
  const auto cb = db_classical_bound(pi, 0.5, 10);
  ok &= rel_close(cb.tight, 0.0023920798269366976);
  ok &= rel_close(cb.simple, 0.00390625);

  RealVector sig(2);
  sig << 0.2689414213699951, 0.7310585786300049;
  ok &= rel_close(db_quantum_bound(sig, 0.9, 50, 2).simple,
                  0.01916318870134115);
  ok &= rel_close(db_gibbs_bound(1.0, 1.0, 2, 0.9, 50).value,
                  0.07616306825633261);

  ok &= rel_close(
      efficiency_threshold(4, 1.0, 1.0, 1.0, 1.0, 0.0, 2, std::exp(-1.0)),
      15.090354888959125);

  ok &= rel_close(blaschke_inv_sup(two, 0.55), 26.36363636363634, 1e-4);
  ok &= rel_close(std::abs(blaschke_eval(two, Complex(0.55, 0))),
                  0.03793103448275863);
  ok &= rel_close(single_factor_sup(Complex(-0.3, 0), 0.6), 2.733333333333334);

  return ok;
}

}  // namespace

int main() {
  using specmix::SuiteReport;

  const SuiteReport core = specmix::verify_core(kSeed);
  const SuiteReport slow = specmix::verify_slow(kSeed);
  const SuiteReport model = specmix::verify_model(kSeed);
  const SuiteReport blaschke = specmix::verify_blaschke(kSeed);
  const SuiteReport db = specmix::verify_detailed_balance(kSeed);

  struct Criterion {
    const char* name;
    bool pass;
  };
  const std::vector<Criterion> criteria = {
      {"bound validity across the instance corpus",
       property_pass(core, "bound_validity")},
      {"slow-chain distance exactness", slow.pass()},
      {"model operator norm plateau", model.pass()},
      {"circle supremum vs closed form", blaschke.pass()},
      {"semigroup structure identities",
       property_pass(core, "power_identity") &&
           property_pass(core, "asymptotic_power_bounded") &&
           property_pass(core, "unit_clusters_diagonalizable")},
      {"detailed balance certificates and bounds", db.pass()},
      {"jordan structure recovery", property_pass(core, "jordan_recovery")},
      {"worked-value regression", worked_values()},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::printf("criterion %zu (%s): %s\n", i + 1, criteria[i].name,
                criteria[i].pass ? "PASS" : "FAIL");
    all &= criteria[i].pass;
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
