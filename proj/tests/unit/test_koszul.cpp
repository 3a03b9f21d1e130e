#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace locoh;

namespace {

KoszulSpec spec_of(const GradedRing& r, const std::vector<std::string>& gens, unsigned k = 1,
                   KoszulConvention c = KoszulConvention::inverse) {
  return {r, th::polys(r, gens), k, c};
}

}  // namespace

TEST_SUITE("koszul") {
  TEST_CASE("shapes") {
    const GradedRing r1 = th::ring({"x"});
    const FreeComplex k = koszul_complex(spec_of(r1, {"x"}));
    CHECK(k.term(1).twists() == std::vector<int>{-1});
    CHECK(k.term(0).twists() == std::vector<int>{0});
    CHECK(k.differential(1).entry(0, 0) == th::P(r1, "x"));
    const FreeComplex kd = koszul_complex(spec_of(r1, {"x"}, 3, KoszulConvention::direct));
    CHECK(kd.term(1).twists() == std::vector<int>{0});
    CHECK(kd.term(0).twists() == std::vector<int>{3});

    const GradedRing r = th::ring({"x", "y", "z"});
    const FreeComplex k3 = koszul_complex(spec_of(r, {"x", "y^2", "z"}, 2));
    for (int i = 0; i <= 3; ++i) CHECK(k3.term(i).rank() == static_cast<std::size_t>(oracle::binom(3, i)));
    CHECK(k3.min_index() == 0);
    CHECK(k3.max_index() == 3);
    CHECK(k3.term(3).twists() == std::vector<int>{-8});
    const FreeComplex k2 = koszul_complex(spec_of(th::ring({"x", "y"}), {"x", "y"}));
    CHECK(k2.term(0).rank() == 1);
    CHECK(k2.term(1).rank() == 2);
    CHECK(k2.term(2).rank() == 1);
  }

  TEST_CASE("spec validation") {
    const GradedRing r = th::ring({"x", "y"});
    CHECK_THROWS_AS(koszul_complex({r, {}, 1}), EmptyGeneratorsError);
    CHECK_THROWS_AS(koszul_complex({r, {Poly(r)}, 1}), ZeroGeneratorError);
    CHECK_THROWS_AS(koszul_complex({r, {th::P(r, "x+y^2")}, 1}), NonHomogeneousError);
    CHECK_THROWS_AS(koszul_complex({r, {th::P(r, "1")}, 1}), ValidationError);
    CHECK_THROWS_AS(koszul_complex({r, {th::P(r, "x")}, 0}), ValidationError);
    CHECK(spec_of(r, {"x", "y^2"}, 3).total_twist() == 9);
  }

  TEST_CASE("examples of Koszul homology") {
    const GradedRing r1 = th::ring({"x"});
    const HilbertTable xx = koszul_homology_table(spec_of(r1, {"x", "x"}), PresentedModule::free(r1), {0, 2}, {-2, 5});
    for (int d = -2; d <= 5; ++d) CHECK(xx.dim(1, d) == (d == 1 ? 1 : 0));

    const GradedRing r = th::ring({"x", "y"});
    const HilbertTable reg = koszul_homology_table(spec_of(r, {"x", "y"}), PresentedModule::free(r), {0, 2}, {-4, 6});
    for (const auto& [k, e] : reg.entries()) CHECK(e.dim == (k == std::pair{0, 0} ? 1 : 0));

    const PresentedModule zero = th::cyclic(r, {"1"});
    const HilbertTable z = koszul_homology_table(spec_of(r, {"x", "x*y"}), zero, {0, 2}, {-4, 6});
    for (const auto& [k, e] : z.entries()) CHECK(e.dim == 0);
  }

  TEST_CASE("top Koszul homology is the annihilator of the power ideal") {
    const GradedRing r = th::ring({"x", "y"});
    const std::vector<PresentedModule> mods = {th::cyclic(r, {"x^2", "x*y"}), th::cyclic(r, {"x^3"}),
                                               th::cyclic(r, {"x^2", "y^2"}), PresentedModule::free(r)};
    const std::vector<std::vector<std::string>> gen_sets = {{"x", "y"}, {"x", "x*y"}, {"x+y", "y"}};
    for (const auto& m : mods)
      for (const auto& gens : gen_sets)
        for (unsigned k : {1u, 2u}) {
          const KoszulSpec s = spec_of(r, gens, k);
          const HilbertTable t = koszul_homology_table(s, m, {2, 2}, {0, 8});
          for (int d = 0; d <= 8; ++d) {
            const int e = d - s.total_twist();
            std::size_t ann = 0;
            if (strand(m, e).dim() > 0) {
              ExactMatrix stacked(FieldSpec{}, 0, strand(m, e).dim());
              for (const auto& g : s.gens) stacked = ExactMatrix::vstack(stacked, mult_operator(m, g.pow(k), e));
              ann = kernel_basis(stacked).cols();
            }
            CHECK(t.dim(2, d) == static_cast<std::int64_t>(ann));
          }
        }
  }

  TEST_CASE("transitions") {
    const GradedRing r = th::ring({"x", "y"});
    for (auto conv : {KoszulConvention::direct, KoszulConvention::inverse}) {
      const KoszulSpec s = spec_of(r, {"x", "x*y"}, 2, conv);
      CHECK(transition(s, s) == ChainMap::identity(koszul_complex(s)));
    }
    const GradedRing r1 = th::ring({"x"});
    const KoszulSpec d1 = spec_of(r1, {"x"}, 1, KoszulConvention::direct);
    const ChainMap phi = transition(d1, d1.with_power(3));
    CHECK(phi.component(0).entry(0, 0) == th::P(r1, "x^2"));
    CHECK(phi.component(1).entry(0, 0) == th::P(r1, "1"));
    const KoszulSpec i1 = spec_of(r1, {"x"}, 3, KoszulConvention::inverse);
    const ChainMap psi = transition(i1, i1.with_power(1));
    CHECK(psi.component(1).entry(0, 0) == th::P(r1, "x^2"));
    CHECK(psi.component(0).entry(0, 0) == th::P(r1, "1"));

    CHECK_THROWS_AS(transition(d1, i1), ConventionMismatchError);
    CHECK_THROWS_AS(transition(d1.with_power(3), d1), OrderError);
    CHECK_THROWS_AS(transition(i1.with_power(1), i1), OrderError);
  }

  TEST_CASE("transitions are functorial") {
    const GradedRing r = th::ring({"x", "y", "z"});
    const KoszulSpec d = spec_of(r, {"x", "y*z", "x+z"}, 1, KoszulConvention::direct);
    CHECK(transition(d.with_power(2), d.with_power(4)) * transition(d, d.with_power(2)) ==
          transition(d, d.with_power(4)));
    const KoszulSpec i = spec_of(r, {"x", "y*z", "x+z"}, 4, KoszulConvention::inverse);
    CHECK(transition(i.with_power(2), i.with_power(1)) * transition(i, i.with_power(2)) ==
          transition(i, i.with_power(1)));
  }

  TEST_CASE("self-duality examples") {
    const GradedRing r1 = th::ring({"x"});
    const SelfDualityReport a = self_duality_check(spec_of(r1, {"x"}), PresentedModule::free(r1), {0, 1}, {-4, 4});
    CHECK(a.passed);
    CHECK(a.twist == 1);

    const GradedRing r = th::ring({"x", "y"});
    const SelfDualityReport b =
        self_duality_check(spec_of(r, {"x", "y"}, 2), th::cyclic(r, {"x^2"}), {0, 2}, {-4, 6});
    CHECK(b.passed);
    CHECK(b.mismatches.empty());
    CHECK(self_duality_check(spec_of(r, {"x", "y"}), th::cyclic(r, {"1"}), {0, 2}, {-4, 6}).passed);
    const SelfDualityReport c = self_duality_check(spec_of(r, {"x^2", "x*y"}, 1, KoszulConvention::direct),
                                                   th::cyclic(r, {"y^3", "x*y"}), {0, 2}, {-4, 6});
    CHECK(c.passed);
    CHECK(c.direction == 1);
  }

  TEST_CASE("self-duality holds on random small cases") {
    std::mt19937 rng(2024);
    const GradedRing r = th::ring({"x", "y", "z"});
    const std::vector<std::string> atoms = {"x", "y", "z", "x+y", "x^2", "y*z", "x*z - y^2", "z^2"};
    const std::vector<std::vector<std::string>> mods = {{}, {"x^2"}, {"x*y", "z^2"}, {"x+y+z"}, {"y^3", "x*z"}};
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<std::string> gens;
      const std::size_t n = 1 + rng() % 3;
      for (std::size_t j = 0; j < n; ++j) gens.push_back(atoms[rng() % atoms.size()]);
      const unsigned k = 1 + rng() % 2;
      const auto conv = rng() % 2 ? KoszulConvention::direct : KoszulConvention::inverse;
      const PresentedModule m = th::cyclic(r, mods[rng() % mods.size()]);
      const SelfDualityReport s =
          self_duality_check(spec_of(r, gens, k, conv), m, {0, static_cast<int>(n)}, {-3, 6});
      CHECK(s.passed);
    }
  }

  TEST_CASE("stable Čech telescope") {
    const GradedRing r = th::ring({"x", "y"});
    const auto gens = th::polys(r, {"x", "y"});
    for (unsigned K : {1u, 2u, 4u}) {
      const FreeComplex c = stable_cech_truncated(r, gens, K);
      for (int i = -3; i <= 2; ++i) {
        const long long expect = (K - 1) * oracle::binom(2, i - 1 + 2) + K * oracle::binom(2, i + 2);
        CHECK(c.term(i).rank() == static_cast<std::size_t>(expect));
        CHECK(stable_cech_rank(2, K, i) == static_cast<std::size_t>(expect));
      }
      for (const auto& mrel : std::vector<std::vector<std::string>>{{}, {"x^2"}, {"x^2", "x*y"}}) {
        const PresentedModule m = th::cyclic(r, mrel);
        const HilbertTable tel = homology_table(tensor(c, m), {-2, 0}, {-6, 3});
        const HilbertTable kos = koszul_homology_table(
            KoszulSpec{r, gens, K, KoszulConvention::direct}, m, {0, 2}, {-6, 3});
        for (int i = -2; i <= 0; ++i)
          for (int d = -6; d <= 3; ++d) CHECK(tel.dim(i, d) == kos.dim(i + 2, d));
      }
    }
    const FreeComplex one = stable_cech_truncated(r, gens, 1);
    const FreeComplex k1 = shift(koszul_complex({r, gens, 1, KoszulConvention::direct}), -2);
    for (int i = -2; i <= 0; ++i) CHECK(one.term(i).twists() == k1.term(i).twists());
  }

  TEST_CASE("Koszul tables are stable under the thread count") {
    const GradedRing r = th::ring({"x", "y", "z"});
    const KoszulSpec s = spec_of(r, {"x^2", "y*z", "x+z"}, 2);
    const PresentedModule m = th::cyclic(r, {"x*y"});
    CHECK(koszul_homology_table(s, m, {0, 3}, {-1, 9}, 1) == koszul_homology_table(s, m, {0, 3}, {-1, 9}, 6));
  }
}
