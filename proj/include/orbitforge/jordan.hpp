#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "orbitforge/partition.hpp"
#include "orbitforge/qmat.hpp"
#include "orbitforge/random.hpp"
#include "orbitforge/subspace.hpp"

namespace orbitforge {

/// Coefficients c_0..c_n of a univariate polynomial, lowest degree first.
using UniPoly = QVec;

/// det(t I - a), monic, by the Faddeev-LeVerrier recursion.
UniPoly characteristic_polynomial(const QMat& a);
/// Rational roots with multiplicities, ascending. Throws UnsupportedSpectrum
/// unless the polynomial splits into linear factors over Q.
std::vector<std::pair<Rat, int>> split_rational_roots(const UniPoly& p);
/// Eigenvalues with algebraic multiplicities, ascending.
std::vector<std::pair<Rat, int>> eigenvalues(const QMat& a);
/// Eigenspace ker(a - lambda) as a Subspace of Q^n (column vectors).
Subspace eigenspace(const QMat& a, const Rat& lambda);

struct AdditiveJC {
  QMat semisimple;
  QMat nilpotent;
};

struct JordanChevalley {
  QMat sigma;  // semisimple part
  QMat nu;     // unipotent part
};

/// a = s + nil by projection onto generalized eigenspaces.
AdditiveJC additive_jc(const QMat& a);
/// g = sigma * nu with sigma = s, nu = 1 + s^{-1} nil; the factorization
/// invariants are checked on every call.
JordanChevalley mult_jc(const QMat& g);

/// Jordan type of a nilpotent from the rank sequence of its powers.
Partition jordan_type(const QMat& x);

/// Columns of `change` form a Jordan basis for a nilpotent x: for each block
/// of size k the columns are x^{k-1} v, ..., x v, v, so that
/// change^{-1} x change is block diagonal with ones on the superdiagonal.
struct JordanBasis {
  QMat change;
  std::vector<int> blocks;
};

/// Kernel-chain construction. When `pieces` is nonempty the chains are built
/// inside each of these x-invariant subspaces (which must span Q^n as a direct
/// sum). With an Rng the chain tops are random combinations; without one the
/// construction is deterministic.
JordanBasis jordan_basis(const QMat& x, const std::vector<Subspace>& pieces = {},
                         Rng* rng = nullptr);

}  // namespace orbitforge
