#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitforge/jm.hpp"
#include "orbitforge/mpoly.hpp"
#include "orbitforge/polymat.hpp"
#include "orbitforge/qmat.hpp"
#include "orbitforge/subspace.hpp"

namespace orbitforge {

/// Infinitesimal action of a matrix Lie algebra on affine d-space: row i of
/// vector_fields is the fundamental field of generators[i], a polynomial in
/// the d coordinates. Fields of a left action satisfy [V_a, V_b] = -V_[a,b].
struct AffineActionModel {
  std::size_t coord_dim = 0;
  std::vector<QMat> generators;
  PolyMat vector_fields;
};

/// Checks shapes, linear independence of the generators, closure of their
/// span under brackets, and [V_a, V_b] = -V_[a,b] on every generator pair.
bool bracket_compatible(const AffineActionModel& m);
/// Throws InvariantViolation unless bracket_compatible(m).
void assert_model(const AffineActionModel& m);

/// Generators g'_i = sum_j a_ij g_j with the matching fields.
AffineActionModel change_generator_basis(const AffineActionModel& m, const QMat& a);
/// New coordinates z with x = s z.
AffineActionModel change_coordinates(const AffineActionModel& m, const QMat& s);

AffineActionModel point_model();
/// Diagonal torus of GL_2 acting on the line by t -> (a/b) t.
AffineActionModel torus_scaling_model();
/// Translations of affine d-space.
AffineActionModel translation_model(std::size_t d);
/// Zero algebra on the d-dimensional space.
AffineActionModel zero_action_model(std::size_t d);
/// g_level under g_0 for the grading of the triple, coordinates from the
/// RREF basis of g_level.
AffineActionModel graded_model(const LieTriple& t, int level = 2);
/// g_2 of the regular nilpotent J_n under g_0 (the diagonal torus).
AffineActionModel regular_nilpotent_g2_model(std::size_t n);

struct OpenOrbitResult {
  bool found = false;
  QVec witness;
};
OpenOrbitResult open_orbit_test(const AffineActionModel& m, std::size_t trials,
                                std::uint64_t seed);

struct GcdOptions {
  std::size_t subset_budget = 5000;
  std::size_t sampled_subsets = 64;
  std::size_t confirmations = 10;
  std::size_t trials = 20;  // open-orbit trials for the witness
};

/// Monic gcd of the maximal minors of the vector-field matrix (1 when d = 0).
MPoly singular_gcd(const AffineActionModel& m, std::uint64_t seed, const GcdOptions& opts = {});

struct SpecialityReport {
  bool open_orbit_found = false;
  QVec witness_point;
  MPoly singular_gcd;
  bool is_special = false;
};
SpecialityReport is_special(const AffineActionModel& m, std::uint64_t seed,
                            const GcdOptions& opts = {});

/// Action of the stabilizer p_{gamma N} = {Z in p : gamma^-1 Z gamma - Z in n}
/// on gamma N / N^C by conjugation, in coordinates y on a complement of n^C in
/// n (greedy from the RREF basis of n): the point is gamma exp(sum y_a c_a).
struct ConjugationModel {
  AffineActionModel model;
  Subspace stabilizer;
  std::vector<QVec> complement;
  QMat coords;  // n -> Q^d, kills n^C, c_a -> e_a
};
ConjugationModel build_conjugation_model(const QMat& gamma, const Subspace& p_basis,
                                         const Subspace& n_basis, const Subspace& nc_basis);

/// Polynomial on g_2 (coordinates from its RREF basis): det of (ad X)^2
/// from g_-2 to g_2 in the RREF bases.
MPoly dk_invariant_p(const LieTriple& t);

/// Generic element of the Levi L = centralizer of H.
QMat random_levi_element(const LieTriple& t, Rng& rng);

struct CharacterLawReport {
  std::size_t trials = 0;
  std::size_t holds = 0;
  bool passed = false;
};
CharacterLawReport character_law_check(const LieTriple& t, std::size_t trials,
                                       std::uint64_t seed);

struct RegularityReport {
  std::size_t d = 0;
  bool p_nonzero_at_x = false;
  bool hessian_full_rank = false;
  std::size_t hessian_points_tried = 0;
  bool infinitesimal_character = false;  // tr(phi(X)[Z,X]) = 2 tr ad_{g2}(Z) on g_0
  bool phi_generic = false;              // (ad phi(X))^2 : g_2 -> g_-2 invertible
  bool phi_proportional_to_y = false;    // diagnostic only
  std::optional<Rat> proportionality;    // phi(X) = c Y when proportional
  bool passed = false;
};
RegularityReport regularity_check(const LieTriple& t, std::size_t trials, std::uint64_t seed);

struct FibrationReport {
  bool equivariant = false;
  std::size_t quotient_dim = 0;
  std::size_t fiber_dim = 0;
  bool total_prehomogeneous = false;
  bool quotient_prehomogeneous = false;
  bool fiber_prehomogeneous = false;
  bool total_special = false;
  bool quotient_special = false;
  bool fiber_special = false;
  MPoly total_gcd;
  MPoly quotient_gcd;
  MPoly fiber_gcd;
  QVec eta;
  bool prehomogeneity_equivalence = false;
  bool speciality_equivalence = false;
  bool passed = false;
};
/// invariant_sub: the fibre directions (kernel of the linear projection pi).
FibrationReport fibration_report(const AffineActionModel& total, const Subspace& invariant_sub,
                                 std::size_t trials, std::uint64_t seed,
                                 const GcdOptions& opts = {});

std::string to_string(const QVec& v);

}  // namespace orbitforge
