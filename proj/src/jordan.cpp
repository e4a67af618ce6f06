#include "orbitforge/jordan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "orbitforge/error.hpp"
#include "orbitforge/lie.hpp"
#include "orbitforge/linalg.hpp"

namespace orbitforge {

UniPoly characteristic_polynomial(const QMat& a) {
  require(a.is_square(), "characteristic polynomial of a square matrix");
  const std::size_t n = a.rows();
  UniPoly c(n + 1);
  c[n] = 1;
  QMat m(n, n);
  const QMat id = QMat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -(a * m).trace() / Rat(static_cast<long>(k));
  }
  return c;
}

namespace {

std::vector<Int> prime_factors(Int v) {
  std::vector<Int> primes;
  if (v < 0) v = -v;
  if (v < 2) return primes;
  for (Int p = 2; p * p <= v; ++p) {
    // Past this bound the cofactor is treated as prime; a missed divisor can
    // only turn into an UnsupportedSpectrum error, never a wrong root.
    if (p > 1000000) break;
    if (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t()) == 0) continue;
    primes.push_back(p);
    while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t()) != 0) v /= p;
  }
  if (v > 1) primes.push_back(v);
  return primes;
}

std::vector<Int> divisors(const Int& value) {
  Int v = abs(value);
  std::vector<Int> divs{Int(1)};
  for (const Int& p : prime_factors(v)) {
    int e = 0;
    Int w = v;
    while (mpz_divisible_p(w.get_mpz_t(), p.get_mpz_t()) != 0) {
      w /= p;
      ++e;
    }
    const std::size_t base = divs.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

Rat evaluate(const UniPoly& p, const Rat& x) {
  Rat acc;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

/// p / (t - r), assuming r is a root.
UniPoly deflate(const UniPoly& p, const Rat& r) {
  const std::size_t n = p.size() - 1;
  UniPoly q(n);
  Rat carry;
  for (std::size_t k = n; k-- > 0;) {
    carry = p[k + 1] + carry * r;
    q[k] = carry;
  }
  return q;
}

}  // namespace

std::vector<std::pair<Rat, int>> split_rational_roots(const UniPoly& poly) {
  UniPoly p = poly;
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  require(!(p.size() == 1 && p[0] == 0), "root search on a nonzero polynomial");
  std::map<Rat, int> roots;
  while (p.size() > 1 && p[0] == 0) {
    p.erase(p.begin());
    roots[Rat(0)] += 1;
  }
  if (p.size() > 1) {
    Int l = 1;
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    const Int a0 = p.front().get_num() * (l / p.front().get_den());
    const Int an = p.back().get_num() * (l / p.back().get_den());
    const auto num_divs = divisors(a0);
    const auto den_divs = divisors(an);
    std::set<Rat> candidates;
    for (const auto& q : den_divs)
      for (const auto& d : num_divs) {
        Rat r(d, q);
        r.canonicalize();
        candidates.insert(r);
        candidates.insert(-r);
      }
    for (const auto& r : candidates) {
      while (p.size() > 1 && evaluate(p, r) == 0) {
        p = deflate(p, r);
        roots[r] += 1;
      }
      if (p.size() == 1) break;
    }
  }
  if (p.size() > 1)
    throw UnsupportedSpectrum(
        "unsupported spectrum: characteristic polynomial does not split over Q (irrational or "
        "complex eigenvalues)");
  return {roots.begin(), roots.end()};
}

std::vector<std::pair<Rat, int>> eigenvalues(const QMat& a) {
  return split_rational_roots(characteristic_polynomial(a));
}

Subspace eigenspace(const QMat& a, const Rat& lambda) {
  return kernel_basis(a - lambda * QMat::identity(a.rows()));
}

AdditiveJC additive_jc(const QMat& a) {
  require(a.is_square(), "Jordan-Chevalley decomposition of a square matrix");
  const std::size_t n = a.rows();
  const auto eig = eigenvalues(a);
  std::vector<QVec> cols;
  QVec diag;
  for (const auto& [lambda, mult] : eig) {
    QMat shifted = a - lambda * QMat::identity(n);
    Subspace gen = kernel_basis(power(shifted, static_cast<unsigned>(mult)));
    ensure(gen.dim() == static_cast<std::size_t>(mult),
           "generalized eigenspace dimension equals algebraic multiplicity");
    for (std::size_t i = 0; i < gen.dim(); ++i) {
      cols.push_back(gen.vector(i));
      diag.push_back(lambda);
    }
  }
  QMat t = QMat::from_columns(cols, n);
  QMat s = t * QMat::diagonal(diag) * inverse_or_throw(t);
  QMat nil = a - s;
  ensure(s * nil == nil * s, "semisimple and nilpotent parts commute");
  ensure(is_nilpotent(nil), "nilpotent part is nilpotent");
  return {std::move(s), std::move(nil)};
}

JordanChevalley mult_jc(const QMat& g) {
  require(g.is_square(), "multiplicative Jordan-Chevalley of a square matrix");
  require(determinant(g) != 0, "element is invertible");
  AdditiveJC add = additive_jc(g);
  const std::size_t n = g.rows();
  QMat nu = QMat::identity(n) + inverse_or_throw(add.semisimple) * add.nilpotent;
  ensure(add.semisimple * nu == g, "sigma * nu equals the input");
  ensure(add.semisimple * nu == nu * add.semisimple, "sigma and nu commute");
  ensure(is_unipotent(nu), "nu is unipotent");
  return {std::move(add.semisimple), std::move(nu)};
}

Partition jordan_type(const QMat& x) {
  require(is_nilpotent(x), "jordan_type argument is nilpotent");
  const std::size_t n = x.rows();
  std::vector<long> r{static_cast<long>(n)};
  QMat pw = QMat::identity(n);
  while (r.back() > 0) {
    pw = pw * x;
    r.push_back(static_cast<long>(rank(pw)));
  }
  r.push_back(0);
  std::vector<int> parts;
  for (std::size_t k = 1; k + 1 < r.size(); ++k) {
    const long exact = (r[k - 1] - r[k]) - (r[k] - r[k + 1]);
    for (long i = 0; i < exact; ++i) parts.push_back(static_cast<int>(k));
  }
  return Partition(std::move(parts));
}

namespace {

QVec random_member(const Subspace& s, Rng& rng) {
  QVec v(s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i) v = v + rng.integer(5) * s.vector(i);
  return v;
}

void chains_in_piece(const QMat& x, const Subspace& piece, Rng* rng,
                     std::vector<std::pair<QVec, int>>& chains) {
  const std::size_t n = x.rows();
  std::vector<Subspace> kernels{Subspace(n)};
  QMat pw = QMat::identity(n);
  while (kernels.back().dim() < piece.dim()) {
    pw = pw * x;
    kernels.push_back(subspace_intersect(kernel_basis(pw), piece));
    ensure(kernels.size() <= n + 1, "x is nilpotent on the piece");
  }
  const std::size_t top = kernels.size() - 1;
  auto kdim = [&](std::size_t k) -> long {
    return k < kernels.size() ? static_cast<long>(kernels[k].dim())
                              : static_cast<long>(piece.dim());
  };
  const std::size_t first_new = chains.size();
  for (std::size_t k = top; k >= 1; --k) {
    long count = (kdim(k) - kdim(k - 1)) - (kdim(k + 1) - kdim(k));
    if (count == 0) continue;
    Subspace covered = kernels[k - 1];
    for (std::size_t c = first_new; c < chains.size(); ++c) {
      const auto& [v, len] = chains[c];
      QVec w = power(x, static_cast<unsigned>(len) - static_cast<unsigned>(k)) * v;
      covered = subspace_sum(covered, Subspace::span({w}, n));
    }
    std::size_t next = 0;
    while (count > 0) {
      QVec cand;
      if (rng) {
        cand = random_member(kernels[k], *rng);
      } else {
        ensure(next < kernels[k].dim(), "kernel chain finds a new chain top");
        cand = kernels[k].vector(next++);
      }
      if (covered.contains(cand)) continue;
      covered = subspace_sum(covered, Subspace::span({cand}, n));
      chains.emplace_back(std::move(cand), static_cast<int>(k));
      --count;
    }
  }
}

}  // namespace

JordanBasis jordan_basis(const QMat& x, const std::vector<Subspace>& pieces, Rng* rng) {
  require(is_nilpotent(x), "Jordan basis of a nilpotent matrix");
  const std::size_t n = x.rows();
  std::vector<std::pair<QVec, int>> chains;
  if (pieces.empty()) {
    chains_in_piece(x, Subspace::full(n), rng, chains);
  } else {
    for (const auto& piece : pieces) {
      require(piece.ambient_dim() == n, "pieces live in Q^n");
      chains_in_piece(x, piece, rng, chains);
    }
  }
  std::vector<QVec> cols;
  JordanBasis jb;
  for (const auto& [v, len] : chains) {
    for (int j = len - 1; j >= 0; --j) cols.push_back(power(x, static_cast<unsigned>(j)) * v);
    jb.blocks.push_back(len);
  }
  require(cols.size() == n, "pieces form a direct sum decomposition of Q^n");
  jb.change = QMat::from_columns(cols, n);
  ensure(rank(jb.change) == n, "Jordan chains form a basis");
  return jb;
}

}  // namespace orbitforge
