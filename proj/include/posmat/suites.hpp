#pragma once

// Seeded property suites, one per structural fact the decomposition relies
// on. Each suite counts individual checks and keeps the first counterexample.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "posmat/json_io.hpp"

namespace posmat {

struct SuiteConfig {
  RingId ring = RingId::Q;
  int n = 3;
  int trials = 100;
  std::uint64_t seed = 0;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  long checks = 0;
  long failures = 0;
  std::optional<Json> counterexample;

  bool ok() const { return failures == 0 && checks > 0; }
};

/// "ring-axioms", "1", "2", "3", "4", "5", "7", "8", "9", "10", "11", "12",
/// "13", "theorem-identities".
const std::vector<std::string>& suite_names();

/// Throws UnsupportedRing when the suite has no meaning over the ring (the
/// inverse oracle of suite 1 needs a commutative ring) and Error for unknown
/// names or n < 3 where the suite needs it.
SuiteReport run_suite(std::string_view name, const SuiteConfig& config);

Json to_json(const SuiteReport& r);

}  // namespace posmat
