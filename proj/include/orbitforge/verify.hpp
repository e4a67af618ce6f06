#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orbitforge/conjecture.hpp"

namespace orbitforge {

struct SuiteConfig {
  std::uint64_t seed = 1;
  int n_max = 7;  // caps every suite's own size limit
  std::int64_t bound = 1000000;
  std::size_t samples = 7;
  ConjectureCatalog catalog;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;  // first failing case, or a summary
  double seconds = 0;
};

SuiteResult suite_jm_triples(const SuiteConfig& cfg);
SuiteResult suite_parabolic_independence(const SuiteConfig& cfg);
SuiteResult suite_richardson(const SuiteConfig& cfg);
SuiteResult suite_partition_sum(const SuiteConfig& cfg);
SuiteResult suite_codimension(const SuiteConfig& cfg);
SuiteResult suite_transitivity(const SuiteConfig& cfg);
SuiteResult suite_semisimple_conjugacy(const SuiteConfig& cfg);
SuiteResult suite_descent(const SuiteConfig& cfg);
SuiteResult suite_relative_invariant(const SuiteConfig& cfg);
SuiteResult suite_speciality_catalog(const SuiteConfig& cfg);
SuiteResult suite_nc_soundness(const SuiteConfig& cfg);
SuiteResult suite_conjecture_batch(const SuiteConfig& cfg);
SuiteResult suite_fibration(const SuiteConfig& cfg);

// Module invariants beyond the numbered criteria.
SuiteResult suite_exact_linear_algebra(const SuiteConfig& cfg);
SuiteResult suite_polynomials(const SuiteConfig& cfg);
SuiteResult suite_grading(const SuiteConfig& cfg);
SuiteResult suite_action_models(const SuiteConfig& cfg);

struct NamedSuite {
  std::string name;
  std::function<SuiteResult(const SuiteConfig&)> run;
};

/// The thirteen criterion suites, in order.
std::vector<NamedSuite> criterion_suites();
/// Criterion suites followed by the module-invariant suites.
std::vector<NamedSuite> all_suites();

/// Runs one suite, timing it and turning any library error into a failure.
SuiteResult run_suite(const NamedSuite& s, const SuiteConfig& cfg);

/// Random nilpotent of Jordan type p: J_p conjugated by a random integer matrix.
QMat random_nilpotent(const Partition& p, Rng& rng);
/// Random invertible integer matrix with entries in [-bound, bound].
QMat random_invertible(std::size_t n, std::int64_t bound, Rng& rng);

}  // namespace orbitforge
