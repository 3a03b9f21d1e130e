// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "helpers.hpp"
#include "oracle.hpp"
#include "run.hpp"

using namespace locoh;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

std::string cell(int i, int d) { return "(" + std::to_string(i) + "," + std::to_string(d) + ")"; }

std::vector<std::string> first_vars(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t j = 0; j < n; ++j) v.push_back(std::string(1, static_cast<char>('x' + j)));
  return v;
}

Outcome koszul_regularity() {
  Outcome o;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto vars = first_vars(n);
    const GradedRing r = th::ring(vars);
    std::vector<oracle::OPoly> gens;
    for (std::size_t j = 0; j < n; ++j) {
      oracle::Mono e(n, 0);
      e[j] = 1;
      gens.push_back({{1, e}});
    }
    const oracle::KoszulOracle brute{std::vector<int>(n, 1), gens, {}};
    const HilbertTable t =
        koszul_homology_table({r, th::polys(r, vars)}, PresentedModule::free(r), {0, static_cast<int>(n)}, {-4, 6});
    for (int i = 0; i <= static_cast<int>(n); ++i)
      for (int d = -4; d <= 6; ++d) {
        const std::int64_t expect = i == 0 && d == 0 ? 1 : 0;
        o.require(t.dim(i, d) == expect, "n=" + std::to_string(n) + " cell " + cell(i, d));
        o.require(brute.homology(i, d) == expect, "oracle disagrees at " + cell(i, d));
      }
  }
  return o;
}

Outcome self_duality_random() {
  Outcome o;
  std::mt19937 rng(20240611);
  const GradedRing r = th::ring({"x", "y", "z"});
  const std::vector<std::string> atoms = {"x", "y", "z", "x+y", "x^2", "y*z", "x*z - y^2", "z^2", "x*y*z"};
  const std::vector<std::vector<std::string>> mods = {{}, {"x^2"}, {"x*y", "z^2"}, {"x+y+z"}, {"y^3", "x*z"}, {"x", "y", "z"}};
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::string> gens;
    const std::size_t n = 1 + rng() % 3;
    for (std::size_t j = 0; j < n; ++j) gens.push_back(atoms[rng() % atoms.size()]);
    const unsigned k = 1 + rng() % 3;
    const auto conv = rng() % 2 ? KoszulConvention::direct : KoszulConvention::inverse;
    const auto& rel = mods[rng() % mods.size()];
    const SelfDualityReport s =
        self_duality_check({r, th::polys(r, gens), k, conv}, th::cyclic(r, rel), {0, static_cast<int>(n)}, {-4, 8});
    o.require(s.passed, "trial " + std::to_string(trial));
  }
  return o;
}

Outcome pro_zero() {
  Outcome o;
  const GradedRing r1 = th::ring({"x"});
  const PresentedModule m = th::cyclic(r1, {"x^2"});
  const AnnihilatorBound a = annihilator_bound(m, th::P(r1, "x"), {-2, 10});
  o.require(a.t && *a.t == 2, "annihilator bound t != 2");
  const KoszulSpec s{r1, th::polys(r1, {"x"})};
  const ProZeroCertificate c = pro_zero_certificate(koszul_towers(s, ModuleComplex::of(m), 1, {-2, 12}, 8), 6);
  o.require(c.success, "certificate for k[x]/(x^2) failed");
  for (unsigned l = 1; l <= 6 && c.success; ++l) o.require(c.k_of_l.at(l) == l + 2, "k(" + std::to_string(l) + ")");

  // a = (x, xy): H_1(a^k; R) = (R/x^k)(-2k) with ψ acting by (xy)^{k-l}, so k(l) = 2l;
  // H_2 vanishes. K_max = 8 witnesses l <= 4.
  const GradedRing r = th::ring({"x", "y"});
  const KoszulSpec t{r, th::polys(r, {"x", "x*y"})};
  const ModuleComplex y = ModuleComplex::of(PresentedModule::free(r));
  const ProZeroCertificate h1 = pro_zero_certificate(koszul_towers(t, y, 1, {0, 16}, 8), 4);
  o.require(h1.success, "H_1 certificate failed");
  for (unsigned l = 1; l <= 4 && h1.success; ++l) o.require(h1.k_of_l.at(l) == 2 * l, "H_1 k(" + std::to_string(l) + ")");
  const ProZeroCertificate h2 = pro_zero_certificate(koszul_towers(t, y, 2, {0, 16}, 8));
  o.require(h2.success, "H_2 certificate failed");
  return o;
}

Outcome truncated_hocolim() {
  Outcome o;
  const GradedRing r = th::ring({"x", "y"});
  const auto gens = th::polys(r, {"x", "y"});
  for (unsigned K : {1u, 3u, 6u}) {
    const FreeComplex c = stable_cech_truncated(r, gens, K);
    for (const auto& rel : std::vector<std::vector<std::string>>{{}, {"x^2"}, {"x^2", "x*y"}}) {
      const PresentedModule m = th::cyclic(r, rel);
      const HilbertTable tel = homology_table(tensor(c, m), {-2, 1}, {-8, 4});
      const HilbertTable kos = koszul_homology_table({r, gens, K, KoszulConvention::direct}, m, {0, 2}, {-8, 4});
      for (int i = -2; i <= 1; ++i)
        for (int d = -8; d <= 4; ++d) {
          const std::int64_t expect = i + 2 <= 2 ? kos.dim(i + 2, d) : 0;
          o.require(tel.dim(i, d) == expect, "K=" + std::to_string(K) + " cell " + cell(i, d));
        }
    }
  }
  return o;
}

Outcome lim1_vanishing() {
  Outcome o;
  std::size_t towers = 0, pro_zero = 0;
  const GradedRing r = th::ring({"x", "y"});
  const std::vector<std::vector<std::string>> gen_sets = {{"x", "y"}, {"x", "x*y"}, {"x^2", "y"}};
  const std::vector<std::vector<std::string>> mods = {{}, {"x^2"}, {"x^2", "x*y"}};
  for (const auto& g : gen_sets)
    for (const auto& rel : mods) {
      const KoszulSpec s{r, th::polys(r, g)};
      const ModuleComplex y = ModuleComplex::of(th::cyclic(r, rel));
      for (int i = 0; i <= 2; ++i)
        for (const auto& t : koszul_towers(s, y, i, {-2, 10}, 8)) {
          ++towers;
          const LimResult l = lim_lim1_truncated(t);
          o.require(l.lim1_dim == 0, "nonzero lim1");
          if (pro_zero_certificate(t).success) {
            ++pro_zero;
            o.require(l.lim_dim == 0, "pro-zero tower with nonzero lim");
          }
        }
    }
  o.require(towers >= 300 && pro_zero >= 50, "too few towers exercised");
  if (o.ok) o.detail = std::to_string(towers) + " towers, " + std::to_string(pro_zero) + " pro-zero";
  return o;
}

Outcome local_cohomology_closed_forms() {
  Outcome o;
  const GradedRing r1 = th::ring({"x"});
  const HilbertTable a = local_cohomology_table(th::polys(r1, {"x"}), PresentedModule::free(r1), {0, 1}, {-6, 2});
  for (int d = -6; d <= 2; ++d) {
    o.require(a.dim(1, d) == (d <= -1 ? 1 : 0), "H^1 of k[x] at " + std::to_string(d));
    o.require(a.dim(0, d) == 0, "H^0 of k[x]");
  }
  o.require(a.all_stabilized(), "k[x] table not stabilized");
  const GradedRing r = th::ring({"x", "y"});
  const HilbertTable b = local_cohomology_table(th::polys(r, {"x", "y"}), PresentedModule::free(r), {0, 2}, {-5, 2});
  for (int d = -5; d <= 2; ++d) {
    const std::int64_t expect = d <= -2 ? oracle::series_coefficient({1, 1}, -d - 2) : 0;
    o.require(b.dim(2, d) == expect, "H^2 of k[x,y] at " + std::to_string(d));
    o.require(b.dim(0, d) == 0 && b.dim(1, d) == 0, "H^0/H^1 of k[x,y]");
  }
  o.require(b.all_stabilized(), "k[x,y] table not stabilized");
  return o;
}

Outcome local_homology() {
  Outcome o;
  const GradedRing r = th::ring({"x", "y"});
  const auto m = th::polys(r, {"x", "y"});
  std::size_t compared = 0;
  const std::vector<std::pair<std::vector<std::string>, std::vector<oracle::Mono>>> mods = {
      {{}, {}}, {{"x^2"}, {{2, 0}}}, {{"x^2", "x*y"}, {{2, 0}, {1, 1}}}};
  for (const auto& [rel, ideal] : mods) {
    const ModuleComplex y = ModuleComplex::of(th::cyclic(r, rel));
    const HilbertTable t = local_homology_table(m, y, {0, 2}, {-2, 6}, {12, 2, 0});
    for (int d = -2; d <= 6; ++d) {
      const auto expect = static_cast<std::int64_t>(oracle::standard_monomials({1, 1}, ideal, d).size());
      o.require(t.dim(0, d) == expect, "H_0 at " + std::to_string(d));
      o.require(t.dim(1, d) == 0 && t.dim(2, d) == 0, "H_1/H_2 at " + std::to_string(d));
    }
    o.require(t.all_stabilized(), "local homology not stabilized");
    const HilbertTable hc = hom_stable_cech_table(m, y, 6, {0, 2}, {-2, 6});
    // the telescope is quasi-isomorphic to its last stage
    const HilbertTable stage = homology_table(
        hom_complex(shift(koszul_complex({r, m, 6, KoszulConvention::direct}), -2), y), {0, 2}, {-2, 6});
    for (const auto& [key, e] : hc.entries())
      o.require(e.dim == stage.dim(key.first, key.second), "Hom(Č, M) vs stage 6 at " + cell(key.first, key.second));
    for (const auto& [key, e] : t.entries()) {
      if (!e.stabilized || e.k_used > 6 || stage.dim(key.first, key.second) != e.dim) continue;
      ++compared;
      o.require(hc.dim(key.first, key.second) == e.dim, "Hom(Č, M) differs at " + cell(key.first, key.second));
    }
  }
  o.require(compared >= 60, "too few Hom(Č, M) comparisons");
  if (o.ok) o.detail = std::to_string(compared) + " Hom(Č, M) cells compared";
  return o;
}

Outcome generator_independence() {
  Outcome o;
  const GradedRing r = th::ring({"x", "y"});
  const auto a = generator_independence_check(th::polys(r, {"x", "y"}), th::polys(r, {"x", "y", "x+y"}),
                                              PresentedModule::free(r), {0, 3}, {-5, 2});
  o.require(a.passed && a.excluded.empty() && a.compared > 0, "(x,y) vs (x,y,x+y)");
  o.require(a.table_a.all_stabilized() && a.table_b.all_stabilized(), "(x,y) tables not stabilized");
  const GradedRing r1 = th::ring({"x"});
  for (const auto& rel : std::vector<std::vector<std::string>>{{}, {"x^3"}}) {
    const auto b = generator_independence_check(th::polys(r1, {"x"}), th::polys(r1, {"x^2"}), th::cyclic(r1, rel),
                                                {0, 1}, {-5, 2}, {12, 2, 0});
    o.require(b.passed && b.excluded.empty(), "(x) vs (x^2)");
  }
  return o;
}

Outcome greenlees_may() {
  Outcome o;
  const GradedRing r = th::ring({"x", "y"});
  const auto m = th::polys(r, {"x", "y"});
  const FreeComplex unit = FreeComplex::unit(r);
  const auto sub = [&](const GmAdjunctionReport& g, const std::string& name) {
    o.require(g.chain_map_valid, name + ": chain map");
    o.require(g.strandwise_isomorphism, name + ": strandwise isomorphism");
    o.require(g.homology_equal, name + ": homology");
  };
  sub(gm_adjunction_check(m, unit, unit, 3, {-6, 6}, {-6, 6}), "R,R");
  sub(gm_adjunction_check(m, koszul_complex({r, m}), unit, 4, {-6, 6}, {-6, 6}), "K(x,y),R");
  const ValidatedResolution res = koszul_resolution(r, th::polys(r, {"x^2"}));
  const GmAdjunctionReport c =
      gm_adjunction_check(m, res.complex, FreeComplex::concentrated(FreeModule(r, {-2})), 6, {-6, 6}, {-6, 6});
  sub(c, "P(R/x^2),R(-2)");
  // Ext^j(R/(x^2), R(-2)): 1 at d = 0 and 2 for d >= 1, only j = 1
  for (int j = 0; j <= 2; ++j)
    for (int d = -6; d <= 5; ++d) {
      const std::int64_t expect = j == 1 ? (d < 0 ? 0 : (d == 0 ? 1 : 2)) : 0;
      o.require(c.left.dim(-j, d) == expect, "L vs Ext at " + cell(-j, d));
    }
  return o;
}

Outcome local_duality() {
  Outcome o;
  const GradedRing r = th::ring({"x", "y"});
  for (const auto& f : std::vector<std::vector<std::string>>{{}, {"x^2"}, {"x^2", "y^3"}}) {
    const LocalDualityReport d = local_duality_check(koszul_resolution(r, th::polys(r, f)), {-1, 3}, {-6, 2}, {12, 2, 0});
    o.require(d.result.passed && d.result.mismatches.empty(), "mismatch for " + std::to_string(f.size()) + " relations");
    o.require(d.result.excluded.empty(), "unstabilized cells for " + std::to_string(f.size()) + " relations");
  }
  const LocalDualityReport x2 = local_duality_check(koszul_resolution(r, th::polys(r, {"x^2"})), {0, 2}, {-6, 2}, {12, 2, 0});
  for (int d = -6; d <= 2; ++d)
    o.require(x2.local_cohomology.dim(1, d) == (d >= 1 ? 0 : (d == 0 ? 1 : 2)), "H^1(R/x^2) at " + std::to_string(d));
  return o;
}

Outcome dualizing_module() {
  Outcome o;
  for (std::size_t n = 1; n <= 3; ++n) {
    const GradedRing r = th::ring(first_vars(n));
    const DualizingModuleReport d = dualizing_module_check(r, {-8, 8}, {n == 3 ? 10u : 12u, 2, 0});
    o.require(d.result.passed && d.result.excluded.empty(), "n=" + std::to_string(n));
    for (int deg = -8; deg <= 8; ++deg)
      o.require(d.omega.dim(static_cast<int>(n), deg) ==
                    oracle::series_coefficient(std::vector<int>(n, 1), deg - static_cast<int>(n)),
                "omega row for n=" + std::to_string(n));
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::string first = cli::emit_report(cli::run_corpus(1), "json");
  const std::string second = cli::emit_report(cli::run_corpus(0), "json");
  o.require(first == second, "corpus reports differ");
  o.require(first.size() > 1000, "corpus report too small");
  o.require(cli::run_corpus(0).passed(), "corpus has failing cases");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 = no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "koszul_regularity", 1.0, koszul_regularity},
      {2, "self_duality_random", 10.0, self_duality_random},
      {3, "pro_zero_certificate", 0.0, pro_zero},
      {4, "truncated_hocolim", 0.0, truncated_hocolim},
      {5, "lim1_vanishing", 0.0, lim1_vanishing},
      {6, "local_cohomology_closed_forms", 5.0, local_cohomology_closed_forms},
      {7, "local_homology_fg_modules", 0.0, local_homology},
      {8, "generator_independence", 0.0, generator_independence},
      {9, "greenlees_may_adjunction", 30.0, greenlees_may},
      {10, "local_duality", 0.0, local_duality},
      {11, "dualizing_module", 0.0, dualizing_module},
      {12, "corpus_determinism", 0.0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds <= 0 || secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::string limit = c.limit_seconds > 0 ? ", limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s" : "";
    std::string detail = o.detail;
    if (!in_time) detail = "too slow" + (detail.empty() ? "" : "; " + detail);
    std::printf("%s %2d %-30s %8.3f s%s%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, limit.c_str(),
                detail.empty() ? "" : "  ", detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
