#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "orbitforge/conjecture.hpp"
#include "orbitforge/error.hpp"
#include "orbitforge/jm.hpp"
#include "orbitforge/jordan.hpp"
#include "orbitforge/json_io.hpp"
#include "orbitforge/lie.hpp"
#include "orbitforge/orbits.hpp"
#include "orbitforge/prehomo.hpp"
#include "orbitforge/verify.hpp"

using namespace orbitforge;

namespace {

struct Common {
  std::optional<std::uint64_t> seed;
  bool json = false;
  std::size_t samples = 7;
  std::int64_t bound = 10;

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("ORBITFORGE_SEED")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      require(end && *end == '\0' && *env != '\0', "ORBITFORGE_SEED is a nonnegative integer");
      return v;
    }
    return 1;
  }

  SamplingOptions sampling() const {
    require(samples >= 3, "--samples >= 3");
    require(bound >= 2, "--bound >= 2");
    SamplingOptions o;
    o.samples = samples;
    o.bound = bound;
    o.seed = resolved_seed();
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c, bool sampling) {
  cmd->add_option("--seed", c.seed, "random seed (falls back to ORBITFORGE_SEED, then 1)");
  cmd->add_flag("--json", c.json, "machine-readable output");
  if (sampling) {
    cmd->add_option("--samples", c.samples, "samples per induction")->capture_default_str();
    cmd->add_option("--bound", c.bound, "integer sampling bound")->capture_default_str();
  }
}

struct LeviArgs {
  std::optional<int> n;
  std::string levi;
  std::string cls = "trivial";

  LeviSpec spec() const {
    const LeviSpec l(parse_int_list(levi));
    if (n) require(*n == l.n(), "--n equals the sum of --levi");
    return l;
  }
  MClassLabel label(const LeviSpec& l) const { return mclass_from_text(l, cls); }
};

void add_levi(CLI::App* cmd, LeviArgs& a, bool with_class) {
  cmd->add_option("--n", a.n, "matrix size (checked against the composition)");
  cmd->add_option("--levi", a.levi, "block sizes, comma separated")->required();
  if (with_class)
    cmd->add_option("--class", a.cls, "trivial | regular | JSON list of per-block labels")
        ->capture_default_str();
}

QMat matrix_arg(const std::string& arg) { return qmat_from_json(read_json_argument(arg)); }

std::string lines(const QMat& m) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ss << "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) ss << (j ? " " : "") << to_string(m(i, j));
    ss << "\n";
  }
  return ss.str();
}

const char* yes(bool b) { return b ? "yes" : "no"; }

/// Prints JSON or the text rendering; returns the exit code for a check.
int emit(const Common& c, const Json& j, const std::string& text, bool ok = true) {
  if (c.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with conjugacy classes, parabolics and induction in GL_n"};
  app.require_subcommand(1);
  std::function<int()> action;

  Common common;
  LeviArgs la;
  std::string matrix, delta, model, out_path, catalog_path, partition_text, gamma_text;
  int n_max = 4;
  int verify_n = 7;
  std::int64_t verify_bound = 1000000;
  std::string only_suite;
  std::optional<int> dk_n;

  {
    auto* cmd = app.add_subcommand("jm", "Jacobson-Morozov triple through a nilpotent matrix");
    add_common(cmd, common, false);
    cmd->add_option("--matrix", matrix, "JSON matrix file or inline JSON")->required();
    cmd->callback([&] {
      action = [&] {
        const LieTriple t = jm_triple(matrix_arg(matrix));
        return emit(common, to_json(t),
                    "X\n" + lines(t.X) + "H\n" + lines(t.H) + "Y\n" + lines(t.Y));
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("parabolic", "Canonical parabolic of a matrix");
    add_common(cmd, common, false);
    cmd->add_option("--matrix", matrix, "JSON matrix file or inline JSON")->required();
    cmd->callback([&] {
      action = [&] {
        const QMat x = matrix_arg(matrix);
        ParabolicData pd;
        if (is_nilpotent(x)) {
          pd = canonical_parabolic(jm_triple(x));
        } else {
          Rng rng(common.resolved_seed(), "parabolic");
          pd = canonical_parabolic_of_element(x, &rng).parabolic;
        }
        std::ostringstream ss;
        ss << "H\n" << lines(pd.H) << "levels";
        for (const auto& [k, s] : pd.grading.levels) ss << " " << k << ":" << s.dim();
        ss << "\ndim q " << pd.q.dim() << ", l " << pd.l.dim() << ", u " << pd.u.dim() << ", u' "
           << pd.uprime.dim() << "\n";
        return emit(common, to_json(pd), ss.str());
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("induce", "Induced class Ind_P^G(C) by sampling");
    add_common(cmd, common, true);
    add_levi(cmd, la, true);
    cmd->callback([&] {
      action = [&] {
        const LeviSpec l = la.spec();
        const InductionResult r = induce(l, la.label(l), common.sampling());
        std::ostringstream ss;
        ss << "label " << to_string(r.label) << "\nsamples " << r.samples_used << ", unanimous "
           << yes(r.unanimous) << "\n";
        return emit(common, to_json(r), ss.str());
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("richardson", "Induced class of the trivial class vs the dual partition");
    add_common(cmd, common, true);
    add_levi(cmd, la, false);
    cmd->callback([&] {
      action = [&] {
        const RichardsonReport r = richardson(la.spec(), common.sampling());
        return emit(common, to_json(r),
                    "induced " + to_string(r.result.label) + "\npredicted " + to_string(r.predicted) +
                        "\npassed " + yes(r.passed) + "\n",
                    r.passed);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("check-codim", "dim G_gamma = dim M_mu and g_gamma inside p");
    add_common(cmd, common, true);
    add_levi(cmd, la, true);
    cmd->callback([&] {
      action = [&] {
        const LeviSpec l = la.spec();
        const CodimReport r = check_codim(l, la.label(l), common.sampling());
        std::ostringstream ss;
        ss << "induced " << to_string(r.induced) << "\ndim M_mu " << r.dim_m_mu << "\ndim G_gamma";
        for (auto d : r.dim_g_gamma) ss << " " << d;
        ss << "\ncentralizer in p " << yes(r.centralizer_in_p) << "\npassed " << yes(r.passed) << "\n";
        return emit(common, to_json(r), ss.str(), r.passed);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("check-assoc", "Block reorderings and induction in stages");
    add_common(cmd, common, true);
    add_levi(cmd, la, true);
    cmd->callback([&] {
      action = [&] {
        const LeviSpec l = la.spec();
        const AssocReport r = check_assoc(l, la.label(l), common.sampling());
        std::ostringstream ss;
        ss << "base " << to_string(r.base) << "\n";
        for (const auto& c : r.permutations) ss << "order " << c.description << " " << to_string(c.label) << "\n";
        for (const auto& c : r.chains) ss << c.description << " " << to_string(c.label) << "\n";
        ss << "passed " << yes(r.passed) << "\n";
        return emit(common, to_json(r), ss.str(), r.passed);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("check-descent", "Induction commutes with passing to G_sigma");
    add_common(cmd, common, true);
    add_levi(cmd, la, true);
    cmd->callback([&] {
      action = [&] {
        const LeviSpec l = la.spec();
        const MClassLabel c = la.label(l);
        const QMat sigma = mult_jc(m_representative(l, c)).sigma;
        const DescentReport r = check_descent(l, c, sigma, common.sampling());
        std::ostringstream ss;
        ss << "left " << to_string(r.left) << "\nright";
        for (const auto& [e, p] : r.right) ss << " (" << to_string(e) << "," << to_string(p) << ")";
        ss << "\npassed " << yes(r.passed) << "\n";
        return emit(common, to_json(r), ss.str(), r.passed);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("check-gn", "Semisimple parts along delta N are N-conjugate to sigma");
    add_common(cmd, common, true);
    add_levi(cmd, la, true);
    cmd->add_option("--delta", delta, "element of P (default: sampled from the class)");
    cmd->callback([&] {
      action = [&] {
        const LeviSpec l = la.spec();
        const SamplingOptions o = common.sampling();
        QMat d;
        if (!delta.empty()) {
          d = matrix_arg(delta);
        } else {
          Rng rng(o.seed, "check-gn-delta");
          d = sample_inflation(l, m_representative(l, la.label(l)), o.bound, rng);
        }
        const GNReport r = check_gN(d, l, o);
        std::ostringstream ss;
        ss << "conjugate " << r.conjugate << "/" << r.samples << "\npassed " << yes(r.passed) << "\n";
        return emit(common, to_json(r), ss.str(), r.passed);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("infl-check", "Is delta in the inflated class of C");
    add_common(cmd, common, false);
    add_levi(cmd, la, true);
    cmd->add_option("--delta", delta, "element of P")->required();
    cmd->callback([&] {
      action = [&] {
        const LeviSpec l = la.spec();
        const QMat d = matrix_arg(delta);
        const bool generic = is_inflation_generic(d, l);
        const bool contained = inflated_class_contains(d, l, la.label(l));
        const Json j{{"generic", generic}, {"contained", contained}, {"label", to_json(class_label(d))}};
        return emit(common, j,
                    std::string("generic ") + yes(generic) + "\ncontained " + yes(contained) + "\n");
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("dk", "Relative invariant on g_2 of a nilpotent orbit");
    add_common(cmd, common, false);
    cmd->add_option("--partition", partition_text, "Jordan type, comma separated")->required();
    cmd->add_option("--n", dk_n, "matrix size (checked against the partition)");
    cmd->callback([&] {
      action = [&] {
        const Partition p = parse_partition(partition_text);
        if (dk_n) require(*dk_n == p.size(), "--n equals the size of --partition");
        const QMat x = class_representative(unipotent_label(p)) - QMat::identity(p.size());
        const LieTriple t = jm_triple(x);
        const MPoly poly = dk_invariant_p(t);
        const std::uint64_t seed = common.resolved_seed();
        const CharacterLawReport law = character_law_check(t, 25, seed);
        const RegularityReport reg = regularity_check(t, 20, seed);
        const Json j{{"partition", to_json(p)},
                     {"p", to_json(poly)},
                     {"character_law", to_json(law)},
                     {"regularity", to_json(reg)}};
        std::ostringstream ss;
        ss << "p = " << to_string(poly) << "\ncharacter law " << law.holds << "/" << law.trials
           << "\nregular " << yes(reg.passed) << "\n";
        return emit(common, j, ss.str(), law.passed && reg.passed);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("special", "Open orbit and speciality of an action model");
    add_common(cmd, common, false);
    cmd->add_option("--model", model, "JSON model file or inline JSON")->required();
    cmd->callback([&] {
      action = [&] {
        const AffineActionModel m = model_from_json(read_json_argument(model));
        const SpecialityReport r = is_special(m, common.resolved_seed());
        return emit(common, to_json(r),
                    std::string("open orbit ") + yes(r.open_orbit_found) + "\ngcd " +
                        to_string(r.singular_gcd) + "\nspecial " + yes(r.is_special) + "\n");
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("nc", "The subgroup N^C for an element of the inflated class");
    add_common(cmd, common, true);
    add_levi(cmd, la, true);
    cmd->add_option("--gamma", gamma_text, "element of P (default: sampled from the class)");
    cmd->callback([&] {
      action = [&] {
        const LeviSpec l = la.spec();
        const SamplingOptions o = common.sampling();
        QMat g;
        if (!gamma_text.empty()) {
          g = matrix_arg(gamma_text);
        } else {
          const QMat mu = m_representative(l, la.label(l));
          bool found = false;
          for (std::size_t i = 0; i < 10 && !found; ++i) {
            Rng rng(o.seed, "conjecture-gamma", i);
            g = sample_inflation(l, mu, o.bound, rng);
            found = inflated_class_contains(g, l, la.label(l));
          }
          require(found, "an inflation-generic gamma among 10 samples");
        }
        const NCResult nc = nc_subspace(g, l, o.seed);
        const TranslateReport tr = nc_translate_check(g, nc, 10, o.seed);
        const Json j{{"gamma", to_json(g)}, {"nc", to_json(nc)}, {"translates", to_json(tr)}};
        std::ostringstream ss;
        ss << "dim n^C " << nc.nc_basis.dim() << " (start " << nc.start.dim() << ")\nrandomized match "
           << yes(nc.randomized_match) << "\nideal " << yes(nc.is_p_ideal) << "\ntranslates "
           << tr.same_parabolic << "/" << tr.in_class << " in class of " << tr.translates << "\n";
        return emit(common, j, ss.str(), nc.randomized_match && nc.is_p_ideal && tr.passed);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("conjecture", "Speciality of gamma N / N^C for one Levi class");
    add_common(cmd, common, true);
    add_levi(cmd, la, true);
    cmd->callback([&] {
      action = [&] {
        const LeviSpec l = la.spec();
        ConjectureOptions o;
        o.sampling = common.sampling();
        const ConjectureVerdict v = conjecture_check(l, la.label(l), o);
        Json j = to_json(v);
        j = Json{{"schema_version", schema_version}, {"verdict", j}};
        std::ostringstream ss;
        ss << "verdict " << to_string(v.verdict) << "\nquotient dim " << v.quotient_dim << ", n^C dim "
           << v.nc_dim << "\ngcd " << to_string(v.speciality.singular_gcd) << "\n";
        if (!v.reason.empty()) ss << "reason " << v.reason << "\n";
        return emit(common, j, ss.str(), v.verdict != Verdict::inconclusive);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("conjecture-batch", "Run the conjecture over every composition up to n-max");
    add_common(cmd, common, true);
    cmd->add_option("--n-max", n_max, "largest n (at most 5)")->capture_default_str();
    cmd->add_option("--out", out_path, "write the JSON report here");
    cmd->add_option("--catalog", catalog_path, "class catalog JSON");
    cmd->callback([&] {
      action = [&] {
        ConjectureOptions o;
        o.sampling = common.sampling();
        const ConjectureCatalog cat = catalog_path.empty() ? ConjectureCatalog{} : load_catalog(catalog_path);
        const BatchReport r = conjecture_batch(n_max, cat, o);
        const std::string dumped = to_json(r).dump(2) + "\n";
        if (!out_path.empty()) {
          std::ofstream f(out_path);
          require(static_cast<bool>(f), "--out is writable: " + out_path);
          f << dumped;
        }
        std::ostringstream ss;
        for (const auto& v : r.cases)
          ss << to_string(v.levi) << " " << to_string(v.cls) << " " << to_string(v.verdict) << " gcd "
             << to_string(v.speciality.singular_gcd) << "\n";
        ss << "special " << r.summary.special << ", not special " << r.summary.not_special
           << ", inconclusive " << r.summary.inconclusive << "\n";
        if (common.json && out_path.empty()) std::cout << dumped;
        else if (!common.json) std::cout << ss.str();
        return r.summary.inconclusive == 0 ? 0 : 1;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("verify", "Run every invariant suite");
    add_common(cmd, common, false);
    cmd->add_option("--n-max", verify_n, "cap on every suite's size")->capture_default_str();
    cmd->add_option("--samples", common.samples, "samples per induction")->capture_default_str();
    cmd->add_option("--bound", verify_bound, "integer sampling bound")->capture_default_str();
    cmd->add_option("--suite", only_suite, "run only this suite");
    cmd->callback([&] {
      action = [&] {
        SuiteConfig cfg;
        cfg.seed = common.resolved_seed();
        cfg.n_max = verify_n;
        cfg.bound = verify_bound;
        cfg.samples = common.samples;
        require(cfg.n_max >= 1, "--n-max >= 1");
        require(cfg.samples >= 3, "--samples >= 3");
        require(cfg.bound >= 2, "--bound >= 2");
        Json arr = Json::array();
        bool all = true, any = false;
        for (const auto& s : all_suites()) {
          if (!only_suite.empty() && s.name != only_suite) continue;
          any = true;
          const SuiteResult r = run_suite(s, cfg);
          all = all && r.passed;
          arr.push_back(Json{{"suite", r.name}, {"passed", r.passed}, {"cases", r.cases},
                             {"failures", r.failures}, {"detail", r.detail}});
          if (!common.json)
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << std::endl;
        }
        require(any, "known suite: " + only_suite);
        if (common.json)
          std::cout << Json{{"schema_version", schema_version}, {"suites", arr}, {"passed", all}}.dump(2)
                    << "\n";
        else
          std::cout << (all ? "all suites passed" : "some suites failed") << "\n";
        return all ? 0 : 1;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const PreconditionError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const UnsupportedSpectrum& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
