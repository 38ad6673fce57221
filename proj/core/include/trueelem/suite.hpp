#pragma once

// Seeded property harness covering every module. Identical configs give
// byte-identical reports.

#include <cstdint>
#include <string>
#include <vector>

#include "trueelem/io.hpp"

namespace trueelem {

struct SuiteConfig {
  std::uint64_t seed = 1;
  int cases = 40;  // per randomized property
  std::vector<std::string> rings{"Z", "Z/8", "Z/12"};
  std::vector<long> ideal_generators{2, 3};
  std::vector<int> dims{3, 4};
  std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
  int free_syllables = 8;  // freeness smoke test: words up to this many syllables
  int free_exponent = 2;   // ... with exponents in [-e, e] \ {0}
  std::vector<std::string> only;  // property names to run; empty runs all

  /// Throws Error(InvalidArgument) on an unusable config.
  void validate() const;
};

SuiteConfig suite_config_from_json(const Json& j);
Json to_json(const SuiteConfig& c);

struct PropertyResult {
  std::string name;  // "<module>.<property>"
  int cases = 0;
  int passed = 0;
  int failed = 0;
  int rejected = 0;  // inputs refused with a documented precondition error
  std::string rejection;
  std::vector<std::string> counterexamples;  // first few failing cases

  bool pass() const { return failed == 0 && passed + rejected == cases; }
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<PropertyResult> properties;
  bool all_pass() const;
};

/// Names of all properties in execution order.
std::vector<std::string> suite_property_names();

SuiteReport run_suite(const SuiteConfig& config);

Json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

}  // namespace trueelem
