#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orbitforge/partition.hpp"
#include "orbitforge/qmat.hpp"
#include "orbitforge/random.hpp"
#include "orbitforge/subspace.hpp"

namespace orbitforge {

/// Complete GL_n-conjugacy invariant of an invertible element with rational
/// spectrum: (eigenvalue of sigma, Jordan type of nu on that eigenspace),
/// sorted by eigenvalue.
struct ClassLabel {
  std::vector<std::pair<Rat, Partition>> pairs;

  int size() const;
  /// Partition at eigenvalue lambda, or the empty partition.
  Partition at(const Rat& lambda) const;
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

std::string to_string(const ClassLabel& c);
/// The unipotent class [(1, p)].
ClassLabel unipotent_label(const Partition& p);
/// Sorts by eigenvalue and checks the label invariants.
ClassLabel make_label(std::vector<std::pair<Rat, Partition>> pairs);

/// True iff a and b have the same eigenvalue multiplicities and every
/// partition of a dominates the matching partition of b.
bool label_dominates(const ClassLabel& a, const ClassLabel& b);

/// Standard block upper triangular parabolic P = M N of GL_n.
struct LeviSpec {
  std::vector<int> composition;

  LeviSpec() = default;
  explicit LeviSpec(std::vector<int> comp);
  int n() const;
  std::size_t blocks() const { return composition.size(); }
  std::size_t offset(std::size_t block) const;
  /// Block index of each coordinate.
  std::vector<std::size_t> block_of() const;
  Subspace p() const;
  Subspace m() const;
  Subspace nrad() const;
  bool in_p(const QMat& a) const;
  /// Zeroes every entry outside the diagonal blocks.
  QMat levi_projection(const QMat& a) const;
  QMat block(const QMat& a, std::size_t k) const;
};

std::string to_string(const LeviSpec& l);

struct MClassLabel {
  std::vector<ClassLabel> per_block;
  friend bool operator==(const MClassLabel&, const MClassLabel&) = default;
};

std::string to_string(const MClassLabel& c);
MClassLabel trivial_class(const LeviSpec& levi);
MClassLabel regular_unipotent_class(const LeviSpec& levi);
/// Unipotent per-block classes with the given Jordan types.
MClassLabel unipotent_class(const std::vector<Partition>& per_block);

ClassLabel class_label(const QMat& g);
QMat class_representative(const ClassLabel& label);
/// Block diagonal representative mu of an M-class.
QMat m_representative(const LeviSpec& levi, const MClassLabel& c);

struct SamplingOptions {
  std::size_t samples = 7;
  std::int64_t bound = 10;
  std::uint64_t seed = 1;
};

/// Random element of n with integer entries in [-bound, bound].
QMat random_nrad(const LeviSpec& levi, std::int64_t bound, Rng& rng);
/// mu * exp(xi) for a random xi in n.
QMat sample_inflation(const LeviSpec& levi, const QMat& mu, std::int64_t bound, Rng& rng);

struct InductionResult {
  ClassLabel label;
  std::size_t samples_used = 0;
  bool unanimous = false;
  bool dominance_max_applied = false;
  QMat witness;  // a sample carrying the returned label
};

/// Sample s draws from Rng(seed, "induce", s).
InductionResult induce(const LeviSpec& levi, const MClassLabel& c,
                       const SamplingOptions& opts = {});

struct RichardsonReport {
  InductionResult result;
  Partition predicted;
  bool passed = false;
};
RichardsonReport richardson(const LeviSpec& levi, const SamplingOptions& opts = {});

struct CodimReport {
  ClassLabel induced;
  bool unanimous = false;
  std::size_t dim_m_mu = 0;
  std::vector<std::size_t> dim_g_gamma;  // per generic sample
  std::vector<std::size_t> dim_p_gamma;
  bool centralizer_in_p = false;
  bool passed = false;
};
CodimReport check_codim(const LeviSpec& levi, const MClassLabel& c,
                        const SamplingOptions& opts = {});

struct AssocCase {
  std::string description;
  ClassLabel label;
  bool unanimous = false;
};
struct AssocReport {
  ClassLabel base;
  std::vector<AssocCase> permutations;
  std::vector<AssocCase> chains;
  bool passed = false;
};
/// (i) every block order of the Levi gives the same induced class;
/// (ii) induction through every coarsening M' agrees with one-step induction.
AssocReport check_assoc(const LeviSpec& levi, const MClassLabel& c,
                        const SamplingOptions& opts = {});

/// Induction inside GL_m in two steps through the coarsening that merges
/// consecutive blocks into groups of the given sizes (counted in blocks).
InductionResult induce_in_steps(const LeviSpec& levi, const MClassLabel& c,
                                const std::vector<std::size_t>& groups,
                                const SamplingOptions& opts);

struct DescentReport {
  ClassLabel left;
  std::vector<std::pair<Rat, Partition>> right;
  bool unanimous = false;
  bool passed = false;
};
/// sigma must equal the semisimple part of m_representative(levi, c).
DescentReport check_descent(const LeviSpec& levi, const MClassLabel& c, const QMat& sigma,
                            const SamplingOptions& opts = {});

bool is_inflation_generic(const QMat& delta, const LeviSpec& levi);
bool inflated_class_contains(const QMat& delta, const LeviSpec& levi, const MClassLabel& c);

struct GNReport {
  std::size_t samples = 0;
  std::size_t conjugate = 0;
  bool passed = false;
};
GNReport check_gN(const QMat& delta, const LeviSpec& levi, const SamplingOptions& opts = {});

}  // namespace orbitforge
