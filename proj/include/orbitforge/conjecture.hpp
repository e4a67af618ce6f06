#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitforge/orbits.hpp"
#include "orbitforge/prehomo.hpp"

namespace orbitforge {

/// Random element of P: invertible integer Levi blocks times exp(n).
QMat random_parabolic_element(const LeviSpec& levi, Rng& rng);

struct NCResult {
  Subspace nc_basis;
  Subspace q;             // canonical parabolic of gamma
  Subspace start;         // n cap (1 - Ad gamma^-1)(p cap q)
  Subspace nq_invariant;  // largest p-invariant subspace of n cap q (diagnostic)
  std::size_t iterations = 0;
  std::size_t randomized_confirmations = 0;
  bool randomized_match = false;
  bool is_p_ideal = false;
};

/// Translating gamma along n' keeps the canonical parabolic (inside the
/// inflated class) iff n' lies in n cap (1 - Ad gamma^-1)(p cap q), the
/// directions along which gamma moves inside its Q-orbit. n^C is the largest
/// p-invariant subspace of that start set, found by the fixed-point iteration
/// W_{k+1} = {w in W_k : [p, w] in W_k} and cross-checked against
/// W_0 cap Ad(xi_1) W_0 cap ... for `confirmations` random xi_i in P.
NCResult nc_subspace(const QMat& gamma, const LeviSpec& levi, std::uint64_t seed = 1,
                     std::size_t confirmations = 20);

struct TranslateReport {
  std::size_t translates = 0;
  std::size_t in_class = 0;
  std::size_t same_parabolic = 0;
  bool passed = false;
};
/// gamma exp(xi) for random xi in n^C: every translate in the class of gamma
/// must have the same canonical parabolic as gamma.
TranslateReport nc_translate_check(const QMat& gamma, const NCResult& nc, std::size_t count,
                                   std::uint64_t seed);

/// Ad(p) n^C(gamma) = n^C(p gamma p^-1) for a random p in P.
bool nc_equivariance_check(const QMat& gamma, const LeviSpec& levi, const NCResult& nc,
                           std::uint64_t seed);

enum class Verdict { special, not_special, inconclusive };
std::string to_string(Verdict v);

struct ConjectureOptions {
  SamplingOptions sampling;
  std::size_t gamma_attempts = 10;
  std::size_t open_orbit_trials = 20;
  std::size_t nc_confirmations = 20;
  std::size_t translates = 10;
  bool fibration = true;
  GcdOptions gcd;
};

struct ConjectureVerdict {
  LeviSpec levi;
  MClassLabel cls;
  QMat gamma;
  ClassLabel gamma_label;
  std::size_t nc_dim = 0;
  std::size_t quotient_dim = 0;
  SpecialityReport speciality;
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
  NCResult nc;
  TranslateReport translates;
  std::optional<TranslateReport> nq_translates;  // along nq_invariant when it is larger
  bool equivariant = false;
  std::optional<FibrationReport> fibration;
  bool fibration_quotient_agrees = false;  // quotient speciality matches the direct model
};

ConjectureVerdict conjecture_check(const LeviSpec& levi, const MClassLabel& c,
                                   const ConjectureOptions& opts = {});

/// M-classes tried per composition. A "mixed" class gives a block of size 1
/// the eigenvalue mixed_eigenvalues[j % len] (j the block index) and a block
/// of size m > 1 the label [(e0, (m-1)), (e1, (1))].
struct ConjectureCatalog {
  std::vector<std::string> classes{"trivial", "regular", "mixed"};
  std::vector<Rat> mixed_eigenvalues{Rat(1), Rat(2)};
};
ConjectureCatalog load_catalog(const std::string& path);
std::vector<MClassLabel> catalog_classes(const LeviSpec& levi, const ConjectureCatalog& cat);

struct BatchSummary {
  std::size_t special = 0;
  std::size_t not_special = 0;
  std::size_t inconclusive = 0;
};
struct BatchReport {
  std::vector<ConjectureVerdict> cases;
  BatchSummary summary;
};
BatchReport conjecture_batch(int n_max, const ConjectureCatalog& cat,
                             const ConjectureOptions& opts = {});

}  // namespace orbitforge
