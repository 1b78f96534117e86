#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fano {

/// One golden or property check. `origin` is "published" for values printed
/// in the source text, "derived" for values computed independently here, and
/// "property" for randomized identities (expected/computed are trial counts).
struct Check {
  std::string name;
  std::string anchor;
  std::string origin;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
};

/// core, action, classify, chow, zariski, delta.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 20240601;

}  // namespace fano
