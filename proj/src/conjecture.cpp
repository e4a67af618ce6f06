#include "orbitforge/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <thread>

#include "json.hpp"

#include "orbitforge/error.hpp"
#include "orbitforge/jm.hpp"
#include "orbitforge/jordan.hpp"
#include "orbitforge/lie.hpp"
#include "orbitforge/linalg.hpp"

namespace orbitforge {

QMat random_parabolic_element(const LeviSpec& levi, Rng& rng) {
  std::vector<QMat> blocks;
  for (int k : levi.composition) {
    const auto sz = static_cast<std::size_t>(k);
    QMat b(sz, sz);
    do {
      for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = 0; j < sz; ++j) b(i, j) = rng.integer(3);
    } while (determinant(b) == 0);
    blocks.push_back(std::move(b));
  }
  return QMat::block_diagonal(blocks) * nilpotent_exp(random_nrad(levi, 3, rng));
}

namespace {

/// {w in w_k : [a, w] in w_k for every a in p}.
Subspace invariant_step(const Subspace& w, const std::vector<QMat>& pm, const GroupContext& ctx) {
  if (w.is_zero()) return w;
  const QMat ann = w.annihilator().basis();
  if (ann.rows() == 0) return w;
  const auto wm = ctx.matrices(w);
  QMat sys(ann.rows() * pm.size(), wm.size());
  for (std::size_t j = 0; j < wm.size(); ++j) {
    QVec col;
    for (const auto& a : pm) {
      const QVec r = ann * ctx.flatten(bracket(a, wm[j]));
      col.insert(col.end(), r.begin(), r.end());
    }
    sys.set_column(j, col);
  }
  const Subspace coeffs = kernel_basis(sys);
  std::vector<QVec> vs;
  for (std::size_t k = 0; k < coeffs.dim(); ++k) {
    const QVec c = coeffs.vector(k);
    QVec v(ctx.dim());
    for (std::size_t j = 0; j < wm.size(); ++j)
      if (c[j] != 0) v = v + c[j] * w.vector(j);
    vs.push_back(std::move(v));
  }
  return Subspace::span(vs, ctx.dim());
}

}  // namespace

NCResult nc_subspace(const QMat& gamma, const LeviSpec& levi, std::uint64_t seed,
                     std::size_t confirmations) {
  require(is_inflation_generic(gamma, levi), "gamma is inflation-generic for the parabolic");
  const std::size_t n = gamma.rows();
  GroupContext ctx(n);
  NCResult r;
  Rng qrng(seed, "nc-parabolic");
  r.q = canonical_parabolic_of_element(gamma, &qrng).parabolic.q;
  const Subspace p = levi.p();
  const Subspace nr = levi.nrad();
  const auto pm = ctx.matrices(p);
  auto largest_invariant = [&](Subspace w, std::size_t* iters) {
    while (true) {
      Subspace next = invariant_step(w, pm, ctx);
      if (iters) ++*iters;
      if (next.dim() == w.dim()) return w;
      w = std::move(next);
    }
  };
  const QMat move = QMat::identity(n * n) - conjugation_matrix(inverse_or_throw(gamma));
  r.start = subspace_intersect(nr, image(move, subspace_intersect(p, r.q)));
  r.nc_basis = largest_invariant(r.start, &r.iterations);
  r.nq_invariant = largest_invariant(subspace_intersect(nr, r.q), nullptr);
  r.is_p_ideal = bracket_closed(p, r.nc_basis, r.nc_basis, ctx);
  ensure(r.is_p_ideal, "n^C is an ideal of p");

  Subspace acc = r.start;
  for (std::size_t i = 0; i < confirmations; ++i) {
    Rng rng(seed, "nc-confirm", i);
    const QMat xi = random_parabolic_element(levi, rng);
    acc = subspace_intersect(acc, image(conjugation_matrix(xi), r.start));
    ++r.randomized_confirmations;
  }
  r.randomized_match = acc == r.nc_basis;
  return r;
}

TranslateReport nc_translate_check(const QMat& gamma, const NCResult& nc, std::size_t count,
                                   std::uint64_t seed) {
  const std::size_t n = gamma.rows();
  GroupContext ctx(n);
  const ClassLabel label = class_label(gamma);
  const auto basis = ctx.matrices(nc.nc_basis);
  TranslateReport rep;
  for (std::size_t s = 0; s < count; ++s) {
    Rng rng(seed, "nc-translate", s);
    QMat xi(n, n);
    for (const auto& b : basis) xi += rng.integer(10) * b;
    const QMat g = gamma * nilpotent_exp(xi);
    ++rep.translates;
    if (class_label(g) != label) continue;
    ++rep.in_class;
    Rng qrng(seed, "nc-translate-parabolic", s);
    if (canonical_parabolic_of_element(g, &qrng).parabolic.q == nc.q) ++rep.same_parabolic;
  }
  rep.passed = rep.translates > 0 && rep.same_parabolic == rep.in_class;
  return rep;
}

bool nc_equivariance_check(const QMat& gamma, const LeviSpec& levi, const NCResult& nc,
                           std::uint64_t seed) {
  Rng rng(seed, "nc-equivariance");
  const QMat p = random_parabolic_element(levi, rng);
  const QMat g2 = p * gamma * inverse_or_throw(p);
  const NCResult other = nc_subspace(g2, levi, stream_key(seed, "nc-equivariance", 1), 0);
  return image(conjugation_matrix(p), nc.nc_basis) == other.nc_basis;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::special:
      return "special";
    case Verdict::not_special:
      return "not_special";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

ConjectureVerdict conjecture_check(const LeviSpec& levi, const MClassLabel& c,
                                   const ConjectureOptions& opts) {
  ConjectureVerdict v;
  v.levi = levi;
  v.cls = c;
  const std::uint64_t seed = opts.sampling.seed;
  const QMat mu = m_representative(levi, c);
  bool found = false;
  for (std::size_t i = 0; i < opts.gamma_attempts && !found; ++i) {
    Rng rng(seed, "conjecture-gamma", i);
    v.gamma = sample_inflation(levi, mu, opts.sampling.bound, rng);
    found = inflated_class_contains(v.gamma, levi, c);
  }
  if (!found) {
    v.reason = "no inflation-generic gamma among the sampled elements";
    return v;
  }
  v.gamma_label = class_label(v.gamma);
  v.nc = nc_subspace(v.gamma, levi, seed, opts.nc_confirmations);
  v.nc_dim = v.nc.nc_basis.dim();
  v.translates = nc_translate_check(v.gamma, v.nc, opts.translates, seed);
  if (!(v.nc.nq_invariant == v.nc.nc_basis)) {
    NCResult wide = v.nc;
    wide.nc_basis = v.nc.nq_invariant;
    v.nq_translates = nc_translate_check(v.gamma, wide, opts.translates, seed);
  }
  v.equivariant = nc_equivariance_check(v.gamma, levi, v.nc, seed);

  const Subspace p = levi.p();
  const Subspace nr = levi.nrad();
  const ConjugationModel cm = build_conjugation_model(v.gamma, p, nr, v.nc.nc_basis);
  v.quotient_dim = cm.model.coord_dim;
  const OpenOrbitResult oo = open_orbit_test(cm.model, opts.open_orbit_trials, seed);
  if (!oo.found) {
    v.reason = "open orbit not found on the quotient";
    return v;
  }
  v.speciality = is_special(cm.model, seed, opts.gcd);
  v.verdict = v.speciality.is_special ? Verdict::special : Verdict::not_special;

  if (opts.fibration) {
    const ConjugationModel total = build_conjugation_model(v.gamma, p, nr, Subspace(nr.ambient_dim()));
    std::vector<QVec> fibre;
    for (std::size_t i = 0; i < v.nc.nc_basis.dim(); ++i)
      fibre.push_back(total.coords * v.nc.nc_basis.vector(i));
    v.fibration = fibration_report(total.model, Subspace::span(fibre, total.model.coord_dim),
                                   opts.open_orbit_trials, seed, opts.gcd);
    v.fibration_quotient_agrees = v.fibration->quotient_special == v.speciality.is_special &&
                                  v.fibration->quotient_prehomogeneous;
  }
  return v;
}

ConjectureCatalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "catalog file is readable: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail_precondition(std::string("catalog is valid JSON: ") + e.what());
  }
  ConjectureCatalog cat;
  if (j.contains("classes")) cat.classes = j.at("classes").get<std::vector<std::string>>();
  if (j.contains("mixed_eigenvalues")) {
    cat.mixed_eigenvalues.clear();
    for (const auto& e : j.at("mixed_eigenvalues"))
      cat.mixed_eigenvalues.push_back(e.is_string() ? parse_rat(e.get<std::string>())
                                                    : Rat(e.get<long>()));
  }
  for (const auto& c : cat.classes)
    require(c == "trivial" || c == "regular" || c == "mixed", "known catalog class: " + c);
  require(cat.mixed_eigenvalues.size() >= 2, "at least two mixed eigenvalues");
  for (const auto& e : cat.mixed_eigenvalues) require(e != 0, "mixed eigenvalues are nonzero");
  return cat;
}

std::vector<MClassLabel> catalog_classes(const LeviSpec& levi, const ConjectureCatalog& cat) {
  std::vector<MClassLabel> out;
  std::set<std::string> seen;
  for (const auto& name : cat.classes) {
    MClassLabel c;
    if (name == "trivial") {
      c = trivial_class(levi);
    } else if (name == "regular") {
      c = regular_unipotent_class(levi);
    } else {
      const auto& e = cat.mixed_eigenvalues;
      for (std::size_t j = 0; j < levi.blocks(); ++j) {
        const int m = levi.composition[j];
        if (m == 1)
          c.per_block.push_back(make_label({{e[j % e.size()], Partition({1})}}));
        else
          c.per_block.push_back(make_label({{e[0], Partition({m - 1})}, {e[1], Partition({1})}}));
      }
    }
    if (seen.insert(to_string(c)).second) out.push_back(std::move(c));
  }
  return out;
}

BatchReport conjecture_batch(int n_max, const ConjectureCatalog& cat,
                             const ConjectureOptions& opts) {
  require(n_max >= 1 && n_max <= 5, "1 <= n_max <= 5");
  std::vector<std::pair<LeviSpec, MClassLabel>> work;
  for (int n = 1; n <= n_max; ++n)
    for (const auto& comp : compositions_of(n)) {
      const LeviSpec levi(comp);
      for (auto& c : catalog_classes(levi, cat)) work.emplace_back(levi, std::move(c));
    }
  BatchReport rep;
  rep.cases.resize(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < work.size();) {
      const auto& [levi, c] = work[i];
      ConjectureOptions o = opts;
      o.sampling.seed = stream_key(opts.sampling.seed, to_string(levi) + " " + to_string(c), 0);
      try {
        rep.cases[i] = conjecture_check(levi, c, o);
      } catch (const Error& e) {
        ConjectureVerdict v;
        v.levi = levi;
        v.cls = c;
        v.reason = e.what();
        rep.cases[i] = std::move(v);
      }
    }
  };
  const unsigned threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& v : rep.cases) {
    if (v.verdict == Verdict::special) ++rep.summary.special;
    else if (v.verdict == Verdict::not_special) ++rep.summary.not_special;
    else ++rep.summary.inconclusive;
  }
  return rep;
}

}  // namespace orbitforge
