#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "orbitforge/jordan.hpp"
#include "orbitforge/lie.hpp"
#include "orbitforge/qmat.hpp"
#include "orbitforge/random.hpp"
#include "orbitforge/subspace.hpp"

namespace orbitforge {

/// (X, H, Y) with [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H.
struct LieTriple {
  QMat X;
  QMat H;
  QMat Y;
};

bool satisfies_triple_relations(const LieTriple& t);

/// Triple through x, built blockwise from a Jordan basis of x: a block of size
/// k gets H-weights k-1, k-3, ..., 1-k. `pieces` and `rng` are forwarded to
/// jordan_basis.
LieTriple jm_triple(const QMat& x, const std::vector<Subspace>& pieces = {}, Rng* rng = nullptr);

/// ad(H)-eigenspace decomposition of gl_n.
struct GradedDecomp {
  std::size_t n = 0;
  std::map<int, Subspace> levels;

  /// The level subspace, or the zero subspace when k is not an eigenvalue.
  Subspace level(int k) const;
  /// Direct sum of the levels whose index satisfies pred.
  Subspace sum_of(const std::function<bool(int)>& pred) const;
};

/// Requires h diagonalizable over Q with integer eigenvalues.
GradedDecomp graded_decomposition(const QMat& h);

/// q = sum_{k>=0} g_k, l = g_0, u = sum_{k>=2} g_k, u' = sum_{k>2} g_k.
struct ParabolicData {
  QMat H;
  GradedDecomp grading;
  Subspace q;
  Subspace l;
  Subspace u;
  Subspace uprime;
};

/// Assembles the parabolic data from the grading of t.H and checks the
/// subalgebra and ideal relations before returning.
ParabolicData canonical_parabolic(const LieTriple& t);

struct ElementParabolic {
  JordanChevalley jc;
  LieTriple triple;  // triple through log(nu), chosen inside the centralizer of sigma
  ParabolicData parabolic;
};

/// Canonical parabolic of an invertible element with rational spectrum.
ElementParabolic canonical_parabolic_of_element(const QMat& g, Rng* rng = nullptr);

/// Eigenbasis of a diagonalizable matrix with rational spectrum (columns grouped
/// by ascending eigenvalue) and the eigenvalue of each column.
struct Eigenbasis {
  QMat change;
  QVec values;
};
Eigenbasis diagonalize(const QMat& h);

}  // namespace orbitforge
