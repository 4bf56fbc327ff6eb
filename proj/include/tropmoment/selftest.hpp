#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tropmoment {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first failure, if any
};

inline constexpr std::uint64_t kDefaultSeed = 20240101;

// Seeded run of the cross-module identities (remarkable formula, theta
// functional equations, height assembly, Tate curve identities).
std::vector<CheckResult> run_selftest(std::uint64_t seed = kDefaultSeed);

}  // namespace tropmoment
