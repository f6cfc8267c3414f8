#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bsdw {

struct CheckResult {
  int criterion = 0;  // acceptance criterion number, 0 for extra property suites
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  // flips the sign of gamma_1 before the Clifford check (exercises the failure path)
  bool inject_gamma_fault = false;
};

std::vector<CheckResult> check_clifford(const SuiteOptions& o);
std::vector<CheckResult> check_spectra(const SuiteOptions& o);
std::vector<CheckResult> check_lp(const SuiteOptions& o);
std::vector<CheckResult> check_reference_numbers(const SuiteOptions& o);
std::vector<CheckResult> check_epr();
std::vector<CheckResult> check_vertex_detection();
std::vector<CheckResult> check_hs_rest();
std::vector<CheckResult> check_hs_boost(const std::vector<double>& xis);
std::vector<CheckResult> check_kind1_pt();
std::vector<CheckResult> check_kind2_decomposable(const std::vector<int>& ms, const std::vector<int>& ds);
std::vector<CheckResult> check_approx_detection();
std::vector<CheckResult> check_properties(const SuiteOptions& o);
std::vector<CheckResult> check_optimality_suite(const SuiteOptions& o);
// duality round-trip, region sampling, PT involution, detection closed form, boost product structure
std::vector<CheckResult> check_extra_properties(const SuiteOptions& o);

// criteria 1 to 6 in order
std::vector<CheckResult> acceptance_checks(const SuiteOptions& o);
// acceptance checks followed by the extra property suites
std::vector<CheckResult> all_checks(const SuiteOptions& o);

}  // namespace bsdw
