#include "orbitforge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "orbitforge/error.hpp"
#include "orbitforge/jm.hpp"
#include "orbitforge/jordan.hpp"
#include "orbitforge/json_io.hpp"
#include "orbitforge/lie.hpp"
#include "orbitforge/linalg.hpp"
#include "orbitforge/orbits.hpp"
#include "orbitforge/prehomo.hpp"

namespace orbitforge {

QMat random_invertible(std::size_t n, std::int64_t bound, Rng& rng) {
  for (;;) {
    QMat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.integer(bound);
    if (determinant(g) != 0) return g;
  }
}

QMat random_nilpotent(const Partition& p, Rng& rng) {
  const QMat j = class_representative(unipotent_label(p));
  const std::size_t n = j.rows();
  const QMat g = random_invertible(n, 3, rng);
  return g * (j - QMat::identity(n)) * inverse_or_throw(g);
}

namespace {

/// One case: an empty string on success, otherwise a description of the failure.
using Case = std::function<std::string()>;

void run_cases(SuiteResult& res, const std::vector<std::pair<std::string, Case>>& cases) {
  std::vector<std::string> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cases.size();) {
      try {
        out[i] = cases[i].second();
      } catch (const Error& e) {
        out[i] = std::string("error: ") + e.what();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  res.cases += cases.size();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (out[i].empty()) continue;
    if (res.failures++ == 0) res.detail = cases[i].first + ": " + out[i];
  }
}

SuiteResult finish(SuiteResult res) {
  res.passed = res.cases > 0 && res.failures == 0;
  if (res.failures == 0) res.detail = std::to_string(res.cases) + " cases";
  else
    res.detail = std::to_string(res.failures) + "/" + std::to_string(res.cases) +
                 " failed; first " + res.detail;
  return res;
}

SamplingOptions sampling(const SuiteConfig& cfg, const std::string& key) {
  SamplingOptions o;
  o.samples = cfg.samples;
  o.bound = cfg.bound;
  o.seed = stream_key(cfg.seed, key, 0);
  return o;
}

std::string comp_text(const std::vector<int>& c) { return to_string(LeviSpec(c)); }

/// Every tuple of per-block partitions for a composition.
std::vector<MClassLabel> unipotent_classes(const LeviSpec& levi) {
  std::vector<MClassLabel> out{MClassLabel{}};
  for (int m : levi.composition) {
    std::vector<MClassLabel> next;
    for (const auto& prefix : out)
      for (const auto& p : partitions_of(m)) {
        MClassLabel c = prefix;
        c.per_block.push_back(unipotent_label(p));
        next.push_back(std::move(c));
      }
    out = std::move(next);
  }
  return out;
}

/// Random class of GL_m with eigenvalues drawn from {1,2,3}.
ClassLabel random_mixed_label(int m, Rng& rng) {
  std::vector<int> eig{1, 2, 3};
  for (std::size_t i = eig.size(); i > 1; --i)
    std::swap(eig[i - 1], eig[rng.uniform(0, static_cast<std::int64_t>(i) - 1)]);
  const int k = static_cast<int>(rng.uniform(1, std::min(m, 3)));
  std::vector<int> sizes(k, 1);
  for (int r = m - k; r > 0; --r) ++sizes[rng.uniform(0, k - 1)];
  std::vector<std::pair<Rat, Partition>> pairs;
  for (int i = 0; i < k; ++i) {
    const auto ps = partitions_of(sizes[i]);
    pairs.emplace_back(Rat(eig[i]), ps[rng.uniform(0, static_cast<std::int64_t>(ps.size()) - 1)]);
  }
  return make_label(std::move(pairs));
}

bool is_unipotent_class(const MClassLabel& c) {
  for (const auto& l : c.per_block)
    for (const auto& [lambda, p] : l.pairs)
      if (lambda != 1) return false;
  return true;
}

std::string codim_case(const LeviSpec& levi, const MClassLabel& c, const SamplingOptions& o) {
  const CodimReport r = check_codim(levi, c, o);
  if (r.passed) return "";
  std::ostringstream ss;
  ss << "unanimous=" << r.unanimous << " dim M_mu=" << r.dim_m_mu << " dim G_gamma=";
  for (auto d : r.dim_g_gamma) ss << d << " ";
  ss << "centralizer_in_p=" << r.centralizer_in_p;
  return ss.str();
}

MClassLabel label_tuple(std::vector<std::vector<std::pair<int, std::vector<int>>>> blocks) {
  MClassLabel c;
  for (auto& block : blocks) {
    std::vector<std::pair<Rat, Partition>> pairs;
    for (auto& [l, parts] : block) pairs.emplace_back(Rat(l), Partition(parts));
    c.per_block.push_back(make_label(std::move(pairs)));
  }
  return c;
}

std::size_t limit(int own, const SuiteConfig& cfg) {
  return static_cast<std::size_t>(std::min(own, cfg.n_max));
}

// The batch backs three suites; it is computed once per configuration.
std::mutex batch_mutex;
std::map<std::string, std::shared_ptr<const BatchReport>> batch_cache;

ConjectureOptions batch_options(const SuiteConfig& cfg, std::uint64_t seed) {
  ConjectureOptions o;
  o.sampling.samples = cfg.samples;
  o.sampling.bound = cfg.bound;
  o.sampling.seed = seed;
  return o;
}

int batch_n(const SuiteConfig& cfg) { return static_cast<int>(limit(4, cfg)); }

std::shared_ptr<const BatchReport> cached_batch(const SuiteConfig& cfg) {
  std::ostringstream key;
  key << cfg.seed << " " << batch_n(cfg) << " " << cfg.bound << " " << cfg.samples;
  for (const auto& s : cfg.catalog.classes) key << " " << s;
  for (const auto& e : cfg.catalog.mixed_eigenvalues) key << " " << to_string(e);
  std::lock_guard<std::mutex> lock(batch_mutex);
  auto it = batch_cache.find(key.str());
  if (it != batch_cache.end()) return it->second;
  auto rep = std::make_shared<const BatchReport>(
      conjecture_batch(batch_n(cfg), cfg.catalog, batch_options(cfg, cfg.seed)));
  batch_cache[key.str()] = rep;
  return rep;
}

std::string case_name(const ConjectureVerdict& v) {
  return to_string(v.levi) + " " + to_string(v.cls);
}

}  // namespace

SuiteResult suite_jm_triples(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "jm-triples";
  std::vector<std::pair<std::string, Case>> cases;
  for (std::size_t n = 1; n <= limit(6, cfg); ++n) {
    for (const auto& p : partitions_of(static_cast<int>(n)))
      cases.emplace_back("partition " + to_string(p), [p] {
        const QMat x = class_representative(unipotent_label(p)) - QMat::identity(p.size());
        const LieTriple t = jm_triple(x);
        return satisfies_triple_relations(t) && t.X == x ? "" : "relations fail";
      });
    for (std::uint64_t s = 0; s < 50; ++s)
      cases.emplace_back("n=" + std::to_string(n) + " sample " + std::to_string(s), [=, &cfg] {
        Rng rng(cfg.seed, "jm-random-" + std::to_string(n), s);
        const auto ps = partitions_of(static_cast<int>(n));
        const Partition p = ps[rng.uniform(0, static_cast<std::int64_t>(ps.size()) - 1)];
        const QMat x = random_nilpotent(p, rng);
        const LieTriple t = jm_triple(x, {}, &rng);
        return satisfies_triple_relations(t) && t.X == x ? "" : "relations fail";
      });
  }
  run_cases(res, cases);
  return finish(res);
}

SuiteResult suite_parabolic_independence(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "parabolic-independence";
  std::vector<std::pair<std::string, Case>> cases;
  for (std::size_t n = 1; n <= limit(5, cfg); ++n)
    for (std::uint64_t s = 0; s < 20; ++s)
      cases.emplace_back("n=" + std::to_string(n) + " sample " + std::to_string(s), [=, &cfg] {
        Rng rng(cfg.seed, "parabolic-" + std::to_string(n), s);
        const auto ps = partitions_of(static_cast<int>(n));
        const Partition p = ps[rng.uniform(0, static_cast<std::int64_t>(ps.size()) - 1)];
        const QMat x = random_nilpotent(p, rng);
        Rng r1 = rng.child("basis", 1);
        Rng r2 = rng.child("basis", 2);
        const ParabolicData a = canonical_parabolic(jm_triple(x, {}, &r1));
        const ParabolicData b = canonical_parabolic(jm_triple(x, {}, &r2));
        if (!(a.q == b.q)) return "q differs";
        if (!(a.u == b.u)) return "u differs";
        if (!(a.uprime == b.uprime)) return "u' differs";
        return "";
      });
  run_cases(res, cases);
  return finish(res);
}

SuiteResult suite_richardson(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "richardson";
  std::vector<std::pair<std::string, Case>> cases;
  for (int n = 1; n <= static_cast<int>(limit(7, cfg)); ++n)
    for (const auto& comp : compositions_of(n))
      cases.emplace_back("levi " + comp_text(comp), [comp, &cfg] {
        const RichardsonReport r = richardson(LeviSpec(comp), sampling(cfg, "richardson " + comp_text(comp)));
        if (r.passed) return std::string();
        return "got " + to_string(r.result.label) + " unanimous=" + std::to_string(r.result.unanimous) +
               " expected " + to_string(r.predicted);
      });
  run_cases(res, cases);
  return finish(res);
}

SuiteResult suite_partition_sum(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "partition-sum";
  std::vector<std::pair<std::string, Case>> cases;
  for (int n = 1; n <= static_cast<int>(limit(6, cfg)); ++n)
    for (const auto& comp : compositions_of(n)) {
      const LeviSpec levi(comp);
      for (const auto& c : unipotent_classes(levi)) {
        const std::string name = to_string(levi) + " " + to_string(c);
        cases.emplace_back(name, [levi, c, name, &cfg] {
          std::vector<Partition> parts;
          for (const auto& l : c.per_block) parts.push_back(l.at(Rat(1)));
          const ClassLabel expected = unipotent_label(padded_sum(parts));
          const InductionResult r = induce(levi, c, sampling(cfg, "partition-sum " + name));
          if (r.unanimous && r.label == expected) return std::string();
          return "got " + to_string(r.label) + " unanimous=" + std::to_string(r.unanimous) +
                 " expected " + to_string(expected);
        });
      }
    }
  run_cases(res, cases);
  return finish(res);
}

SuiteResult suite_codimension(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "codimension";
  std::vector<std::pair<std::string, Case>> cases;
  for (int n = 1; n <= static_cast<int>(limit(7, cfg)); ++n)
    for (const auto& comp : compositions_of(n)) {
      const LeviSpec levi(comp);
      const std::string name = to_string(levi) + " trivial";
      cases.emplace_back(name, [levi, name, &cfg] {
        return codim_case(levi, trivial_class(levi), sampling(cfg, "codim " + name));
      });
    }
  for (int n = 1; n <= static_cast<int>(limit(6, cfg)); ++n)
    for (const auto& comp : compositions_of(n)) {
      const LeviSpec levi(comp);
      for (const auto& c : unipotent_classes(levi)) {
        if (c == trivial_class(levi)) continue;
        const std::string name = to_string(levi) + " " + to_string(c);
        cases.emplace_back(name, [levi, c, name, &cfg] {
          return codim_case(levi, c, sampling(cfg, "codim " + name));
        });
      }
    }
  Rng rng(cfg.seed, "codim-mixed");
  const int top = static_cast<int>(limit(4, cfg));
  for (std::size_t made = 0; made < 20 && top >= 1;) {
    const int n = static_cast<int>(rng.uniform(std::min(2, top), top));
    const auto comps = compositions_of(n);
    const LeviSpec levi(comps[rng.uniform(0, static_cast<std::int64_t>(comps.size()) - 1)]);
    MClassLabel c;
    for (int m : levi.composition) c.per_block.push_back(random_mixed_label(m, rng));
    if (is_unipotent_class(c)) continue;
    const std::string name = "mixed " + to_string(levi) + " " + to_string(c);
    cases.emplace_back(name, [levi, c, name, &cfg] {
      return codim_case(levi, c, sampling(cfg, "codim " + name));
    });
    ++made;
  }
  run_cases(res, cases);
  return finish(res);
}

SuiteResult suite_transitivity(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "transitivity";
  std::vector<std::pair<std::string, Case>> cases;
  for (int n = 1; n <= static_cast<int>(limit(5, cfg)); ++n)
    for (const auto& comp : compositions_of(n)) {
      const LeviSpec levi(comp);
      std::vector<MClassLabel> classes{trivial_class(levi)};
      if (!(regular_unipotent_class(levi) == classes.front()))
        classes.push_back(regular_unipotent_class(levi));
      for (const auto& c : classes) {
        const std::string name = to_string(levi) + " " + to_string(c);
        cases.emplace_back(name, [levi, c, name, &cfg] {
          const AssocReport r = check_assoc(levi, c, sampling(cfg, "assoc " + name));
          if (r.passed) return std::string();
          for (const auto& p : r.permutations)
            if (!p.unanimous || !(p.label == r.base))
              return "order " + p.description + " gives " + to_string(p.label);
          for (const auto& ch : r.chains)
            if (!ch.unanimous || !(ch.label == r.base))
              return ch.description + " gives " + to_string(ch.label);
          return std::string("base sampling not unanimous");
        });
      }
    }
  run_cases(res, cases);
  return finish(res);
}

SuiteResult suite_semisimple_conjugacy(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "semisimple-conjugacy";
  struct Config {
    std::vector<int> comp;
    MClassLabel cls;
  };
  // Semisimple, unipotent and mixed Levi elements.
  const std::vector<Config> all{
      {{1, 1}, label_tuple({{{1, {1}}}, {{2, {1}}}})},
      {{2, 1}, label_tuple({{{1, {1}}, {3, {1}}}, {{2, {1}}}})},
      {{1, 1, 1}, label_tuple({{{1, {1}}}, {{2, {1}}}, {{3, {1}}}})},
      {{2, 2}, label_tuple({{{1, {1}}, {2, {1}}}, {{3, {1}}, {2, {1}}}})},
      {{2, 1}, label_tuple({{{1, {2}}}, {{1, {1}}}})},
      {{3, 1}, label_tuple({{{1, {2, 1}}}, {{1, {1}}}})},
      {{2, 2}, label_tuple({{{1, {2}}}, {{1, {2}}}})},
      {{2, 1}, label_tuple({{{2, {2}}}, {{1, {1}}}})},
      {{1, 3}, label_tuple({{{3, {1}}}, {{1, {2}}, {2, {1}}}})},
      {{2, 1, 1}, label_tuple({{{1, {2}}}, {{2, {1}}}, {{1, {1}}}})},
  };
  std::vector<std::pair<std::string, Case>> cases;
  std::uint64_t idx = 0;
  for (const auto& c : all) {
    const LeviSpec levi(c.comp);
    if (levi.n() > cfg.n_max) continue;
    const std::string name = to_string(levi) + " " + to_string(c.cls);
    const std::uint64_t i = idx++;
    cases.emplace_back(name, [levi, c, i, &cfg] {
      Rng rng(cfg.seed, "semisimple-delta", i);
      const QMat delta = sample_inflation(levi, m_representative(levi, c.cls), 5, rng);
      SamplingOptions o = sampling(cfg, "check-gn " + std::to_string(i));
      o.samples = 20;
      const GNReport r = check_gN(delta, levi, o);
      if (r.passed && r.samples == 20) return std::string();
      return std::to_string(r.conjugate) + "/" + std::to_string(r.samples) + " conjugate";
    });
  }
  run_cases(res, cases);
  return finish(res);
}

SuiteResult suite_descent(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "descent";
  struct Config {
    std::vector<int> comp;
    MClassLabel cls;
  };
  const std::vector<Config> all{
      {{1, 1}, label_tuple({{{1, {1}}}, {{2, {1}}}})},
      {{2, 1}, label_tuple({{{1, {2}}}, {{2, {1}}}})},
      {{2, 1}, label_tuple({{{1, {1}}, {2, {1}}}, {{1, {1}}}})},
      {{1, 1, 1}, label_tuple({{{1, {1}}}, {{2, {1}}}, {{1, {1}}}})},
      {{2, 2}, label_tuple({{{1, {2}}}, {{2, {2}}}})},
      {{2, 2}, label_tuple({{{1, {1}}, {2, {1}}}, {{1, {1}}, {2, {1}}}})},
      {{3, 1}, label_tuple({{{1, {2}}, {2, {1}}}, {{2, {1}}}})},
      {{1, 2, 1}, label_tuple({{{1, {1}}}, {{1, {1}}, {2, {1}}}, {{2, {1}}}})},
      {{2, 1, 1}, label_tuple({{{2, {2}}}, {{1, {1}}}, {{2, {1}}}})},
      {{1, 3}, label_tuple({{{1, {1}}}, {{1, {2}}, {2, {1}}}})},
  };
  std::vector<std::pair<std::string, Case>> cases;
  for (const auto& c : all) {
    const LeviSpec levi(c.comp);
    if (levi.n() > cfg.n_max) continue;
    const std::string name = to_string(levi) + " " + to_string(c.cls);
    cases.emplace_back(name, [levi, c, name, &cfg] {
      const QMat sigma = mult_jc(m_representative(levi, c.cls)).sigma;
      if (eigenvalues(sigma).size() != 2) return std::string("sigma needs two eigenvalues");
      const DescentReport r = check_descent(levi, c.cls, sigma, sampling(cfg, "descent " + name));
      if (r.passed) return std::string();
      return "left " + to_string(r.left) + " unanimous=" + std::to_string(r.unanimous);
    });
  }
  run_cases(res, cases);
  return finish(res);
}

SuiteResult suite_relative_invariant(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "relative-invariant";
  std::vector<std::pair<std::string, Case>> cases;
  for (int n = 1; n <= static_cast<int>(limit(5, cfg)); ++n)
    for (const auto& p : partitions_of(n)) {
      const std::string name = "partition " + to_string(p);
      cases.emplace_back(name, [p, name, &cfg] {
        const QMat x = class_representative(unipotent_label(p)) - QMat::identity(p.size());
        const LieTriple t = jm_triple(x);
        const std::uint64_t seed = stream_key(cfg.seed, name, 0);
        const CharacterLawReport law = character_law_check(t, 25, seed);
        const RegularityReport reg = regularity_check(t, 20, seed);
        if (!reg.p_nonzero_at_x) return std::string("p vanishes at X");
        if (!law.passed || law.trials != 25)
          return "character law " + std::to_string(law.holds) + "/" + std::to_string(law.trials);
        if (!reg.passed) return std::string("regularity certificate fails");
        return std::string();
      });
    }
  run_cases(res, cases);
  return finish(res);
}

SuiteResult suite_speciality_catalog(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "speciality-catalog";
  std::vector<std::pair<std::string, Case>> cases;
  cases.emplace_back("point", [&cfg] {
    const SpecialityReport r = is_special(point_model(), cfg.seed);
    return r.is_special && r.singular_gcd.is_constant() ? "" : "point is not special";
  });
  cases.emplace_back("torus scaling", [&cfg] {
    const SpecialityReport r = is_special(torus_scaling_model(), cfg.seed);
    if (r.is_special) return std::string("reported special");
    if (!(r.singular_gcd == MPoly::variable(1, 0))) return "gcd " + to_string(r.singular_gcd);
    return std::string();
  });
  for (std::size_t n = 2; n <= limit(5, cfg); ++n)
    cases.emplace_back("regular nilpotent g2 n=" + std::to_string(n), [n, &cfg] {
      const AffineActionModel m = regular_nilpotent_g2_model(n);
      const SpecialityReport r = is_special(m, stream_key(cfg.seed, "g2", n));
      MPoly expected = MPoly::constant(n - 1, Rat(1));
      for (std::size_t i = 0; i + 1 < n; ++i) expected = expected * MPoly::variable(n - 1, i);
      if (r.is_special) return std::string("reported special");
      if (!(r.singular_gcd == expected)) return "gcd " + to_string(r.singular_gcd);
      return std::string();
    });
  run_cases(res, cases);
  return finish(res);
}

SuiteResult suite_nc_soundness(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "nc-soundness";
  const auto batch = cached_batch(cfg);
  std::vector<std::pair<std::string, Case>> cases;
  for (const auto& v : batch->cases)
    cases.emplace_back(case_name(v), [&v] {
      if (v.verdict == Verdict::inconclusive) return "inconclusive: " + v.reason;
      if (!v.nc.randomized_match) return std::string("randomized intersection differs");
      if (v.nc.randomized_confirmations != 20) return std::string("confirmation count");
      if (!v.nc.is_p_ideal) return std::string("not a p-ideal");
      if (v.translates.translates != 10 || !v.translates.passed)
        return "translates " + std::to_string(v.translates.same_parabolic) + "/" +
               std::to_string(v.translates.in_class) + " of " + std::to_string(v.translates.translates);
      if (v.translates.in_class == 0) return std::string("no translate stayed in the class");
      return std::string();
    });
  run_cases(res, cases);
  return finish(res);
}

SuiteResult suite_conjecture_batch(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "conjecture-batch";
  const auto batch = cached_batch(cfg);
  std::vector<std::pair<std::string, Case>> cases;
  for (const auto& v : batch->cases)
    cases.emplace_back(case_name(v), [&v] {
      if (v.verdict == Verdict::inconclusive) return "inconclusive: " + v.reason;
      if (v.quotient_dim == 0 && v.verdict != Verdict::special)
        return std::string("quotient_dim 0 but not special");
      if (v.verdict == Verdict::not_special && v.speciality.singular_gcd.is_constant())
        return std::string("not special without a gcd witness");
      return std::string();
    });
  cases.emplace_back("same seed reproduces the report", [batch, &cfg] {
    const BatchReport again =
        conjecture_batch(batch_n(cfg), cfg.catalog, batch_options(cfg, cfg.seed));
    return to_json(again).dump() == to_json(*batch).dump() ? "" : "reports differ";
  });
  cases.emplace_back("another seed gives the same verdicts", [batch, &cfg] {
    const BatchReport other = conjecture_batch(batch_n(cfg), cfg.catalog,
                                               batch_options(cfg, stream_key(cfg.seed, "reseed", 1)));
    if (other.cases.size() != batch->cases.size()) return std::string("case lists differ");
    for (std::size_t i = 0; i < other.cases.size(); ++i)
      if (other.cases[i].verdict != batch->cases[i].verdict)
        return case_name(other.cases[i]) + " verdict " + to_string(other.cases[i].verdict);
    return std::string();
  });
  run_cases(res, cases);
  res = finish(res);
  res.detail += "; special " + std::to_string(batch->summary.special) + ", not special " +
                std::to_string(batch->summary.not_special) + ", inconclusive " +
                std::to_string(batch->summary.inconclusive);
  return res;
}

SuiteResult suite_fibration(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "fibration";
  const auto batch = cached_batch(cfg);
  std::vector<std::pair<std::string, Case>> cases;
  for (const auto& v : batch->cases)
    cases.emplace_back(case_name(v), [&v] {
      if (!v.fibration) return std::string("no fibration report");
      if (!v.fibration->equivariant) return std::string("projection not equivariant");
      if (!v.fibration->prehomogeneity_equivalence) return std::string("prehomogeneity mismatch");
      if (!v.fibration->speciality_equivalence) return std::string("speciality mismatch");
      return std::string();
    });
  run_cases(res, cases);
  return finish(res);
}

SuiteResult suite_exact_linear_algebra(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "exact-linear-algebra";
  std::vector<std::pair<std::string, Case>> cases;
  for (std::uint64_t s = 0; s < 40; ++s)
    cases.emplace_back("sample " + std::to_string(s), [s, &cfg] {
      Rng rng(cfg.seed, "linalg", s);
      const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 5));
      const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 6));
      QMat m(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.integer(2) == 0 ? Rat(0) : rng.rational(5);
      const QMat e = rref(m);
      if (!(rref(e) == e)) return "rref not idempotent";
      if (rank(m) + kernel_basis(m).dim() != c) return "rank-nullity";
      for (std::size_t k = 0; k < kernel_basis(m).dim(); ++k)
        if (!(m * kernel_basis(m).vector(k) == QVec(r))) return "kernel vector not annihilated";
      const QMat g = random_invertible(r, 4, rng);
      if (!(g * inverse_or_throw(g) == QMat::identity(r))) return "inverse";
      if (!(Subspace::span(g * m) == Subspace::span(m))) return "row space not invariant";
      return "";
    });
  run_cases(res, cases);
  return finish(res);
}

SuiteResult suite_polynomials(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "polynomials";
  std::vector<std::pair<std::string, Case>> cases;
  for (std::uint64_t s = 0; s < 30; ++s)
    cases.emplace_back("sample " + std::to_string(s), [s, &cfg] {
      Rng rng(cfg.seed, "polynomials", s);
      const std::size_t nv = static_cast<std::size_t>(rng.uniform(1, 3));
      auto random_poly = [&] {
        MPoly p(nv);
        for (int t = 0; t < 3; ++t) {
          Monomial m(nv);
          for (auto& e : m) e = static_cast<std::uint32_t>(rng.uniform(0, 2));
          p.add_term(m, rng.nonzero_integer(4));
        }
        return p;
      };
      const MPoly g = random_poly();
      const MPoly a = g * random_poly();
      const MPoly b = g * random_poly();
      if (a.is_zero() || b.is_zero() || g.is_zero()) return "";
      const MPoly d = mpoly_gcd(a, b);
      if (!divide_exact(a, d) || !divide_exact(b, d)) return "gcd does not divide";
      if (!divide_exact(d, g.monic())) return "gcd misses the common factor";
      if (!(d == d.monic())) return "gcd not monic";
      QVec pt(nv);
      for (auto& x : pt) x = rng.rational(5);
      if ((a * b).evaluate(pt) != a.evaluate(pt) * b.evaluate(pt)) return "evaluation not multiplicative";
      return "";
    });
  run_cases(res, cases);
  return finish(res);
}

SuiteResult suite_grading(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "grading";
  std::vector<std::pair<std::string, Case>> cases;
  for (int n = 1; n <= static_cast<int>(limit(5, cfg)); ++n)
    for (const auto& p : partitions_of(n))
      cases.emplace_back("partition " + to_string(p), [p, n, &cfg] {
        Rng rng(cfg.seed, "grading " + to_string(p));
        const QMat x = random_nilpotent(p, rng);
        const LieTriple t = jm_triple(x, {}, &rng);
        const ParabolicData pd = canonical_parabolic(t);
        const GroupContext ctx(static_cast<std::size_t>(n));
        std::size_t total = 0;
        for (const auto& [k, s] : pd.grading.levels) {
          total += s.dim();
          for (int j : {0, 2, -2})
            if (!bracket_closed(pd.grading.level(j), s, pd.grading.level(k + j), ctx))
              return std::string("levels do not bracket additively");
        }
        if (total != static_cast<std::size_t>(n * n)) return std::string("levels do not fill gl_n");
        if (!pd.q.contains(centralizer(x, ctx.full()))) return std::string("g_X not in q");
        if (centralizer_dim(x, ctx.full()) != static_cast<std::size_t>(centralizer_dim_formula(p)))
          return std::string("centralizer dimension formula");
        return std::string();
      });
  run_cases(res, cases);
  return finish(res);
}

SuiteResult suite_action_models(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "action-models";
  std::vector<std::pair<std::string, Case>> cases;
  for (int n = 2; n <= static_cast<int>(limit(4, cfg)); ++n)
    for (const auto& p : partitions_of(n))
      cases.emplace_back("graded model " + to_string(p), [p, &cfg] {
        const QMat x = class_representative(unipotent_label(p)) - QMat::identity(p.size());
        const AffineActionModel m = graded_model(jm_triple(x));
        if (!bracket_compatible(m)) return "graded model not bracket compatible";
        Rng rng(cfg.seed, "models " + to_string(p));
        const std::size_t g = m.generators.size();
        const QMat a = random_invertible(g, 2, rng);
        if (!bracket_compatible(change_generator_basis(m, a))) return "generator change breaks brackets";
        if (m.coord_dim > 0) {
          const QMat s = random_invertible(m.coord_dim, 2, rng);
          const AffineActionModel z = change_coordinates(m, s);
          if (!bracket_compatible(z)) return "coordinate change breaks brackets";
          if (is_special(z, cfg.seed).is_special != is_special(m, cfg.seed).is_special)
            return "speciality depends on coordinates";
        }
        return "";
      });
  run_cases(res, cases);
  return finish(res);
}

std::vector<NamedSuite> criterion_suites() {
  return {{"jm-triples", suite_jm_triples},
          {"parabolic-independence", suite_parabolic_independence},
          {"richardson", suite_richardson},
          {"partition-sum", suite_partition_sum},
          {"codimension", suite_codimension},
          {"transitivity", suite_transitivity},
          {"semisimple-conjugacy", suite_semisimple_conjugacy},
          {"descent", suite_descent},
          {"relative-invariant", suite_relative_invariant},
          {"speciality-catalog", suite_speciality_catalog},
          {"nc-soundness", suite_nc_soundness},
          {"conjecture-batch", suite_conjecture_batch},
          {"fibration", suite_fibration}};
}

std::vector<NamedSuite> all_suites() {
  auto s = criterion_suites();
  s.push_back({"exact-linear-algebra", suite_exact_linear_algebra});
  s.push_back({"polynomials", suite_polynomials});
  s.push_back({"grading", suite_grading});
  s.push_back({"action-models", suite_action_models});
  return s;
}

SuiteResult run_suite(const NamedSuite& s, const SuiteConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteResult r;
  try {
    r = s.run(cfg);
  } catch (const Error& e) {
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.name = s.name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace orbitforge
