#pragma once

// The property battery behind `eopkit suite`: every invariant of the library
// as a list of verdicts, grouped into named sections.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eopkit/exceptional.hpp"
#include "eopkit/verdict.hpp"

namespace eop {

struct SuiteConfig {
  /// Largest codimension swept; Hermite uses even m <= max_m + 1.
  int max_m = 3;
  /// Degrees run up to max_n (types I, II) or m + max_n (type III).
  int max_n = 4;
  /// Random parameter choices per grid point.
  int samples = 3;
  std::uint64_t seed = 1;
  /// Section names to run; empty runs all.
  std::vector<std::string> only;
};

inline constexpr std::array<std::string_view, 7> kSuiteSections = {
    "algebra", "classical", "exceptional", "limits", "quadratic", "identities", "guards"};

struct SuiteSection {
  std::string name;
  std::vector<VerdictReport> reports;

  /// Claims including nested sub-claims.
  std::size_t claims() const;
  std::size_t passed() const;
  /// First report, depth first, whose own status is not Pass; null if none.
  const VerdictReport* first_failure() const;
};

/// Runs sections in kSuiteSections order. Each section seeds its own
/// sampler from (seed, section), so filtering does not shift samples.
/// Throws SpecError on an unknown section name.
std::vector<SuiteSection> run_suite(const SuiteConfig& config);

/// A request the library must reject.
struct InvalidSpecCase {
  Family family;
  EopType type;
  int m;
  int n;
  Rat alpha;
  Rat beta;
  Rule expected;

  /// Arguments for `eopkit eop ...`.
  std::vector<std::string> cli_args() const;
};

/// Random gap-degree, odd-Hermite-codimension and pole requests, spread
/// evenly over the three rules.
std::vector<InvalidSpecCase> random_invalid_specs(std::uint64_t seed, int count);

}  // namespace eop
