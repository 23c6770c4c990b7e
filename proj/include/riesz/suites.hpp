#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riesz/spacespec.hpp"

namespace riesz {

struct CheckResult {
  std::string key;     // stable identity, also the sort key
  bool pass = false;
  bool demo = false;   // expected-failure demonstration, not a regular law
  std::string detail;  // witness on failure, summary on success
};

struct RunReport {
  std::string suite;
  std::uint64_t seed = 0;
  int cases = 0;
  Index max_omega = 0;
  std::vector<CheckResult> checks;
  double elapsed_seconds = 0;  // console only, never part of the text form

  int failures() const;
  // Byte-deterministic rendering given (spec, seed, suite); excludes timing.
  std::string to_text() const;
};

// Runs the named invariant suite (lattice, charges, integration, duality,
// or all) on the fixed instance from the model description plus `cases`
// random instances with sizes up to max_omega. Failures are report
// content, never throws.
RunReport run_suite(const SpaceSpec& spec, const std::string& suite, std::uint64_t seed,
                    int cases, Index max_omega);

// Exact-value walkthrough of one theorem-level identity. Topics: dual1,
// dual2, dualinf, lebesgue, sombrero, conjecture.
std::string demo(const SpaceSpec& spec, const std::string& topic);

}  // namespace riesz
