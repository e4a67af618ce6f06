#include "orbitforge/orbits.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "orbitforge/error.hpp"
#include "orbitforge/jordan.hpp"
#include "orbitforge/lie.hpp"
#include "orbitforge/linalg.hpp"

namespace orbitforge {

int ClassLabel::size() const {
  int s = 0;
  for (const auto& pr : pairs) s += pr.second.size();
  return s;
}

Partition ClassLabel::at(const Rat& lambda) const {
  for (const auto& [l, p] : pairs)
    if (l == lambda) return p;
  return {};
}

std::string to_string(const ClassLabel& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    if (i) os << ',';
    os << '(' << to_string(c.pairs[i].first) << ',' << to_string(c.pairs[i].second) << ')';
  }
  os << ']';
  return os.str();
}

ClassLabel unipotent_label(const Partition& p) { return make_label({{Rat(1), p}}); }

ClassLabel make_label(std::vector<std::pair<Rat, Partition>> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    require(!pairs[i].second.empty(), "class label partitions are nonempty");
    require(pairs[i].first != 0, "class label eigenvalues are nonzero");
    if (i) require(pairs[i - 1].first != pairs[i].first, "class label eigenvalues are distinct");
  }
  return ClassLabel{std::move(pairs)};
}

bool label_dominates(const ClassLabel& a, const ClassLabel& b) {
  if (a.pairs.size() != b.pairs.size()) return false;
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    const auto& [la, pa] = a.pairs[i];
    const auto& [lb, pb] = b.pairs[i];
    if (la != lb || pa.size() != pb.size() || !dominates(pa, pb)) return false;
  }
  return true;
}

LeviSpec::LeviSpec(std::vector<int> comp) : composition(std::move(comp)) {
  require(!composition.empty(), "composition is nonempty");
  for (int c : composition) require(c > 0, "composition parts are positive");
}

int LeviSpec::n() const {
  int s = 0;
  for (int c : composition) s += c;
  return s;
}

std::size_t LeviSpec::offset(std::size_t block) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < block; ++i) off += static_cast<std::size_t>(composition[i]);
  return off;
}

std::vector<std::size_t> LeviSpec::block_of() const {
  std::vector<std::size_t> b;
  for (std::size_t k = 0; k < composition.size(); ++k)
    for (int i = 0; i < composition[k]; ++i) b.push_back(k);
  return b;
}

namespace {

template <class Pred>
Subspace unit_span(const LeviSpec& l, Pred keep) {
  const auto b = l.block_of();
  const std::size_t n = b.size();
  std::vector<QVec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (keep(b[i], b[j])) {
        QVec v(n * n);
        v[i * n + j] = 1;
        rows.push_back(std::move(v));
      }
  return Subspace::span(rows, n * n);
}

}  // namespace

Subspace LeviSpec::p() const {
  return unit_span(*this, [](std::size_t a, std::size_t b) { return a <= b; });
}
Subspace LeviSpec::m() const {
  return unit_span(*this, [](std::size_t a, std::size_t b) { return a == b; });
}
Subspace LeviSpec::nrad() const {
  return unit_span(*this, [](std::size_t a, std::size_t b) { return a < b; });
}

bool LeviSpec::in_p(const QMat& a) const {
  const auto b = block_of();
  if (a.rows() != b.size() || a.cols() != b.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[i] > b[j] && a(i, j) != 0) return false;
  return true;
}

QMat LeviSpec::levi_projection(const QMat& a) const {
  const auto b = block_of();
  require(a.rows() == b.size() && a.cols() == b.size(), "matrix size matches the Levi");
  QMat r(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[i] == b[j]) r(i, j) = a(i, j);
  return r;
}

QMat LeviSpec::block(const QMat& a, std::size_t k) const {
  const auto off = offset(k);
  const auto sz = static_cast<std::size_t>(composition[k]);
  return a.submatrix(off, off, sz, sz);
}

std::string to_string(const LeviSpec& l) {
  std::string s;
  for (std::size_t i = 0; i < l.composition.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(l.composition[i]);
  }
  return s;
}

std::string to_string(const MClassLabel& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.per_block.size(); ++i) {
    if (i) s += ';';
    s += to_string(c.per_block[i]);
  }
  return s + "}";
}

MClassLabel trivial_class(const LeviSpec& levi) {
  MClassLabel c;
  for (int k : levi.composition) c.per_block.push_back(unipotent_label(Partition(std::vector<int>(k, 1))));
  return c;
}

MClassLabel regular_unipotent_class(const LeviSpec& levi) {
  MClassLabel c;
  for (int k : levi.composition) c.per_block.push_back(unipotent_label(Partition({k})));
  return c;
}

MClassLabel unipotent_class(const std::vector<Partition>& per_block) {
  MClassLabel c;
  for (const auto& p : per_block) c.per_block.push_back(unipotent_label(p));
  return c;
}

ClassLabel class_label(const QMat& g) {
  require(g.is_square(), "class label of a square matrix");
  const std::size_t n = g.rows();
  const JordanChevalley jc = mult_jc(g);
  const QMat nil = jc.nu - QMat::identity(n);
  std::vector<std::pair<Rat, Partition>> pairs;
  for (const auto& [lambda, mult] : eigenvalues(jc.sigma)) {
    const Subspace e = eigenspace(jc.sigma, lambda);
    ensure(e.dim() == static_cast<std::size_t>(mult), "sigma is diagonalizable");
    // nu - I preserves each sigma-eigenspace; restrict it there.
    QMat r(e.dim(), e.dim());
    for (std::size_t i = 0; i < e.dim(); ++i) {
      const QVec img = nil * e.vector(i);
      ensure(e.contains(img), "nu preserves the sigma-eigenspaces");
      r.set_column(i, e.pivot_coordinates(img));
    }
    pairs.emplace_back(lambda, jordan_type(r));
  }
  return make_label(std::move(pairs));
}

QMat class_representative(const ClassLabel& label) {
  std::vector<QMat> blocks;
  for (const auto& [lambda, p] : label.pairs)
    for (int k : p.parts) {
      QMat b = lambda * QMat::identity(static_cast<std::size_t>(k));
      for (int i = 0; i + 1 < k; ++i) b(i, i + 1) = lambda;
      blocks.push_back(std::move(b));
    }
  return QMat::block_diagonal(blocks);
}

QMat m_representative(const LeviSpec& levi, const MClassLabel& c) {
  require(c.per_block.size() == levi.blocks(), "one class label per Levi block");
  std::vector<QMat> blocks;
  for (std::size_t k = 0; k < levi.blocks(); ++k) {
    require(c.per_block[k].size() == levi.composition[k], "class label size matches its block");
    blocks.push_back(class_representative(c.per_block[k]));
  }
  return QMat::block_diagonal(blocks);
}

QMat random_nrad(const LeviSpec& levi, std::int64_t bound, Rng& rng) {
  const auto b = levi.block_of();
  const std::size_t n = b.size();
  QMat xi(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b[i] < b[j]) xi(i, j) = rng.integer(bound);
  return xi;
}

QMat sample_inflation(const LeviSpec& levi, const QMat& mu, std::int64_t bound, Rng& rng) {
  return mu * nilpotent_exp(random_nrad(levi, bound, rng));
}

InductionResult induce(const LeviSpec& levi, const MClassLabel& c, const SamplingOptions& opts) {
  require(opts.samples >= 3, "at least 3 samples");
  require(opts.bound >= 1, "sampling bound is positive");
  const QMat mu = m_representative(levi, c);
  std::vector<ClassLabel> labels;
  std::vector<QMat> samples;
  for (std::size_t s = 0; s < opts.samples; ++s) {
    Rng rng(opts.seed, "induce", s);
    samples.push_back(sample_inflation(levi, mu, opts.bound, rng));
    labels.push_back(class_label(samples.back()));
  }
  InductionResult r;
  r.samples_used = opts.samples;
  r.unanimous = std::all_of(labels.begin(), labels.end(),
                            [&](const ClassLabel& l) { return l == labels.front(); });
  if (r.unanimous) {
    r.label = labels.front();
    r.witness = samples.front();
    return r;
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const bool top = std::all_of(labels.begin(), labels.end(), [&](const ClassLabel& l) {
      return label_dominates(labels[i], l);
    });
    if (top) {
      r.label = labels[i];
      r.witness = samples[i];
      r.dominance_max_applied = true;
      return r;
    }
  }
  throw GenericityFailure("genericity failure: sampled labels are dominance-incomparable; "
                          "resample with a larger bound");
}

RichardsonReport richardson(const LeviSpec& levi, const SamplingOptions& opts) {
  RichardsonReport rep;
  rep.result = induce(levi, trivial_class(levi), opts);
  rep.predicted = dual(Partition(levi.composition));
  rep.passed = rep.result.unanimous && rep.result.label == unipotent_label(rep.predicted);
  return rep;
}

CodimReport check_codim(const LeviSpec& levi, const MClassLabel& c, const SamplingOptions& opts) {
  CodimReport rep;
  const InductionResult ind = induce(levi, c, opts);
  rep.induced = ind.label;
  rep.unanimous = ind.unanimous;
  const QMat mu = m_representative(levi, c);
  const Subspace p = levi.p();
  const std::size_t n = mu.rows();
  rep.dim_m_mu = centralizer_dim(mu, levi.m());
  rep.centralizer_in_p = true;
  bool dims_ok = true;
  for (std::size_t s = 0; s < opts.samples; ++s) {
    Rng rng(opts.seed, "codim", s);
    const QMat gamma = sample_inflation(levi, mu, opts.bound, rng);
    if (class_label(gamma) != ind.label) continue;
    const Subspace cg = centralizer(gamma, Subspace::full(n * n));
    rep.dim_g_gamma.push_back(cg.dim());
    rep.dim_p_gamma.push_back(centralizer_dim(gamma, p));
    dims_ok = dims_ok && cg.dim() == rep.dim_m_mu && rep.dim_p_gamma.back() == cg.dim();
    rep.centralizer_in_p = rep.centralizer_in_p && p.contains(cg);
  }
  rep.passed = rep.unanimous && !rep.dim_g_gamma.empty() && dims_ok && rep.centralizer_in_p;
  return rep;
}

namespace {

SamplingOptions substream(const SamplingOptions& opts, std::string_view name, std::uint64_t i) {
  SamplingOptions o = opts;
  o.seed = stream_key(opts.seed, name, i);
  return o;
}

}  // namespace

InductionResult induce_in_steps(const LeviSpec& levi, const MClassLabel& c,
                                const std::vector<std::size_t>& groups,
                                const SamplingOptions& opts) {
  std::size_t total = 0;
  for (auto g : groups) total += g;
  require(total == levi.blocks(), "groups cover every Levi block");
  std::vector<int> coarse;
  MClassLabel mid;
  bool unanimous = true;
  std::size_t first = 0;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    require(groups[gi] > 0, "groups are nonempty");
    std::vector<int> sub(levi.composition.begin() + first,
                         levi.composition.begin() + first + groups[gi]);
    MClassLabel subc;
    subc.per_block.assign(c.per_block.begin() + first, c.per_block.begin() + first + groups[gi]);
    int sz = 0;
    for (int k : sub) sz += k;
    coarse.push_back(sz);
    const InductionResult inner = induce(LeviSpec(sub), subc, substream(opts, "inner", gi));
    unanimous = unanimous && inner.unanimous;
    mid.per_block.push_back(inner.label);
    first += groups[gi];
  }
  InductionResult outer = induce(LeviSpec(coarse), mid, substream(opts, "outer", 0));
  outer.unanimous = outer.unanimous && unanimous;
  return outer;
}

AssocReport check_assoc(const LeviSpec& levi, const MClassLabel& c, const SamplingOptions& opts) {
  require(c.per_block.size() == levi.blocks(), "one class label per Levi block");
  AssocReport rep;
  const InductionResult base = induce(levi, c, opts);
  rep.base = base.label;
  bool ok = base.unanimous;

  std::vector<std::size_t> order(levi.blocks());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::set<std::pair<std::vector<int>, std::string>> seen;
  std::uint64_t idx = 0;
  do {
    LeviSpec perm;
    MClassLabel pc;
    for (auto k : order) {
      perm.composition.push_back(levi.composition[k]);
      pc.per_block.push_back(c.per_block[k]);
    }
    if (!seen.insert({perm.composition, to_string(pc)}).second) continue;
    const InductionResult r = induce(perm, pc, substream(opts, "assoc-perm", idx++));
    rep.permutations.push_back({to_string(perm), r.label, r.unanimous});
    ok = ok && r.unanimous && r.label == rep.base;
  } while (std::next_permutation(order.begin(), order.end()));

  // Coarsenings: a subset of the k-1 gaps between consecutive blocks is cut.
  const std::size_t k = levi.blocks();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
    std::vector<std::size_t> groups{1};
    for (std::size_t gap = 0; gap + 1 < k; ++gap) {
      if (mask & (std::uint64_t{1} << gap))
        groups.push_back(1);
      else
        ++groups.back();
    }
    const InductionResult r = induce_in_steps(levi, c, groups, substream(opts, "assoc-chain", mask));
    std::string desc = "groups";
    for (auto g : groups) desc += " " + std::to_string(g);
    rep.chains.push_back({desc, r.label, r.unanimous});
    ok = ok && r.unanimous && r.label == rep.base;
  }
  rep.passed = ok;
  return rep;
}

DescentReport check_descent(const LeviSpec& levi, const MClassLabel& c, const QMat& sigma,
                            const SamplingOptions& opts) {
  const QMat mu = m_representative(levi, c);
  require(sigma == mult_jc(mu).sigma, "sigma is the semisimple part of the Levi representative");
  DescentReport rep;
  const InductionResult ind = induce(levi, c, opts);
  rep.left = ind.label;
  bool ok = ind.unanimous;
  std::uint64_t idx = 0;
  for (const auto& [lambda, mult] : eigenvalues(sigma)) {
    (void)mult;
    // P_sigma inside G_sigma: the blocks of each Levi factor at eigenvalue lambda.
    std::vector<int> comp;
    std::vector<Partition> parts;
    for (std::size_t k = 0; k < levi.blocks(); ++k) {
      const Partition pk = c.per_block[k].at(lambda);
      if (pk.empty()) continue;
      comp.push_back(pk.size());
      parts.push_back(pk);
    }
    const InductionResult r =
        induce(LeviSpec(comp), unipotent_class(parts), substream(opts, "descent", idx++));
    ok = ok && r.unanimous && r.label.pairs.size() == 1;
    rep.right.emplace_back(lambda, r.label.pairs.front().second);
  }
  rep.unanimous = ok;
  rep.passed = ok && rep.right == rep.left.pairs;
  return rep;
}

bool is_inflation_generic(const QMat& delta, const LeviSpec& levi) {
  require(levi.in_p(delta), "delta lies in P");
  require(determinant(delta) != 0, "delta is invertible");
  const std::size_t n = delta.rows();
  const QMat map = QMat::identity(n * n) - conjugation_matrix(delta);
  return image(map, levi.p()).contains(levi.nrad());
}

bool inflated_class_contains(const QMat& delta, const LeviSpec& levi, const MClassLabel& c) {
  require(levi.in_p(delta), "delta lies in P");
  require(c.per_block.size() == levi.blocks(), "one class label per Levi block");
  for (std::size_t k = 0; k < levi.blocks(); ++k)
    if (class_label(levi.block(delta, k)) != c.per_block[k]) return false;
  return is_inflation_generic(delta, levi);
}

GNReport check_gN(const QMat& delta, const LeviSpec& levi, const SamplingOptions& opts) {
  require(levi.in_p(delta), "delta lies in P");
  const std::size_t n = delta.rows();
  GroupContext ctx(n);
  const QMat sigma = mult_jc(delta).sigma;
  const Subspace nr = levi.nrad();
  const auto nbasis = ctx.matrices(nr);
  GNReport rep;
  for (std::size_t s = 0; s < opts.samples; ++s) {
    Rng rng(opts.seed, "check-gn", s);
    const QMat x = delta * nilpotent_exp(random_nrad(levi, opts.bound, rng));
    const QMat sx = mult_jc(x).sigma;
    // (I + eta) sigma = sx (I + eta)  <=>  eta sigma - sx eta = sx - sigma, eta in n.
    QMat sys(n * n, nbasis.size());
    for (std::size_t i = 0; i < nbasis.size(); ++i)
      sys.set_column(i, ctx.flatten(nbasis[i] * sigma - sx * nbasis[i]));
    ++rep.samples;
    const auto sol = solve_linear(sys, ctx.flatten(sx - sigma));
    if (!sol) continue;
    QMat conj = QMat::identity(n);
    for (std::size_t i = 0; i < nbasis.size(); ++i) conj += (*sol)[i] * nbasis[i];
    if (conj * sigma * inverse_or_throw(conj) == sx) ++rep.conjugate;
  }
  rep.passed = rep.samples > 0 && rep.conjugate == rep.samples;
  return rep;
}

}  // namespace orbitforge
