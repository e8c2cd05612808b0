#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace specmix {

struct PropertyResult {
  std::string name;
  int instances = 0;
  double worst_margin = 0.0;  // signed; <= 0 means the property held everywhere
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;

  bool pass() const;
  nlohmann::ordered_json to_json() const;
};

// Property suites behind the `verify` CLI subcommand and the acceptance
// harness. Deterministic for fixed (suite, seed).
SuiteReport verify_core(std::uint64_t seed);             // semigroup + bound validity + jordan oracle
SuiteReport verify_blaschke(std::uint64_t seed);         // closed form vs grid search
SuiteReport verify_model(std::uint64_t seed);            // model operator plateau
SuiteReport verify_detailed_balance(std::uint64_t seed); // certificates + db bound agreement
SuiteReport verify_slow(std::uint64_t seed);             // slow-chain exactness
std::vector<SuiteReport> verify_all(std::uint64_t seed);

SuiteReport run_suite(const std::string& name, std::uint64_t seed);

}  // namespace specmix
