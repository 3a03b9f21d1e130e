#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace locoh;

namespace {

TowerParams params(unsigned k_max) { return {k_max, 2, 0}; }

}  // namespace

TEST_SUITE("duality") {
  TEST_CASE("Matlis duality on tables") {
    HilbertTable t;
    t.set(2, -2, {1, true, 3});
    t.set(2, -3, {2, false, 8});
    const HilbertTable d = matlis_dual_table(t);
    CHECK(d.dim(2, 2) == 1);
    CHECK(d.dim(2, 3) == 2);
    CHECK_FALSE(d.at(2, 3).stabilized);
    CHECK(d.at(2, 3).k_used == 8);
    CHECK(matlis_dual_table(d) == t);
  }

  TEST_CASE("Koszul resolutions") {
    const GradedRing r = th::ring({"x", "y"});
    const ValidatedResolution a = koszul_resolution(r, th::polys(r, {"x^2"}));
    CHECK(a.complex.term(1).twists() == std::vector<int>{-2});
    CHECK(a.complex.term(0).twists() == std::vector<int>{0});
    const ValidatedResolution b = koszul_resolution(r, th::polys(r, {"x", "y"}));
    CHECK(b.complex.term(1).twists() == std::vector<int>{-1, -1});
    CHECK(b.complex.term(2).twists() == std::vector<int>{-2});
    CHECK_THROWS_AS(koszul_resolution(r, th::polys(r, {"x", "x*y"})), NotRegularError);
    try {
      koszul_resolution(r, th::polys(r, {"x", "x*y"}));
    } catch (const NotRegularError& e) {
      CHECK(e.homological_index() == 1);
      CHECK(e.degree() == 2);
    }
    const ValidatedResolution free = koszul_resolution(r, {});
    CHECK(free.complex.max_index() == 0);
  }

  TEST_CASE("resolution validation rejects non-resolutions") {
    const GradedRing r = th::ring({"x", "y"});
    const FreeComplex k = koszul_complex({r, th::polys(r, {"x", "x*y"})});
    const PresentedModule m = th::cyclic(r, {"x", "x*y"});
    CHECK_THROWS_AS(validate_resolution(k, m, GradedMap::identity(k.term(0)), {0, 4}), ValidationError);
    // right complex, wrong module
    const FreeComplex good = koszul_complex({r, th::polys(r, {"x^2"})});
    CHECK_THROWS_AS(validate_resolution(good, th::cyclic(r, {"x^3"}), GradedMap::identity(good.term(0)), {0, 4}),
                    ValidationError);
  }

  TEST_CASE("Ext examples") {
    const GradedRing r = th::ring({"x", "y"});
    const ValidatedResolution free = koszul_resolution(r, {});
    const HilbertTable e0 = ext_table(free, 3, {0, 2}, {-6, 2});
    const HilbertTable row = hilbert_row(PresentedModule::free(FreeModule(r, {3})), {-6, 2});
    for (int d = -6; d <= 2; ++d) {
      CHECK(e0.dim(0, d) == row.dim(0, d));
      CHECK(e0.dim(1, d) == 0);
    }

    const HilbertTable e1 = ext_table(koszul_resolution(r, th::polys(r, {"x^2"})), -2, {0, 3}, {-3, 5});
    for (int d = -3; d <= 5; ++d) {
      CHECK(e1.dim(0, d) == 0);
      CHECK(e1.dim(1, d) == (d < 0 ? 0 : (d == 0 ? 1 : 2)));
      CHECK(e1.dim(2, d) == 0);
      CHECK(e1.dim(3, d) == 0);
    }
  }

  TEST_CASE("Ext of complete intersections against standard monomials") {
    // Ext^c(R/(f), R(t)) = (R/(f))(t + Σ deg f) and Ext^j = 0 for j != c.
    struct Case {
      std::vector<std::string> vars, f;
      std::vector<oracle::Mono> ideal;
      int degsum;
    };
    const std::vector<Case> cases = {
        {{"x", "y"}, {"x^2", "y^3"}, {{2, 0}, {0, 3}}, 5},
        {{"x", "y"}, {"x*y"}, {{1, 1}}, 2},
        {{"x", "y", "z"}, {"x", "y^2", "z^2"}, {{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}, 5},
    };
    for (const auto& c : cases) {
      const GradedRing r = th::ring(c.vars);
      const int n = static_cast<int>(c.f.size());
      for (int t : {-3, 0}) {
        const HilbertTable e = ext_table(koszul_resolution(r, th::polys(r, c.f)), t, {0, n + 1}, {-8, 2});
        for (int d = -8; d <= 2; ++d)
          for (int j = 0; j <= n + 1; ++j) {
            const long long expect =
                j == n ? static_cast<long long>(
                             oracle::standard_monomials(std::vector<int>(c.vars.size(), 1), c.ideal, d + t + c.degsum).size())
                       : 0;
            CHECK(e.dim(j, d) == expect);
          }
      }
    }
  }

  TEST_CASE("Ext does not depend on the resolution") {
    const GradedRing r = th::ring({"x", "y"});
    const PresentedModule m = th::cyclic(r, {"x^2"});
    // R(-2) ⊕ R(-1) -> R ⊕ R(-1), a Koszul resolution plus a trivial summand
    const FreeModule p1(r, {-2, -1}), p0(r, {0, -1});
    const FreeComplex p(r, {{0, p0}, {1, p1}}, {{1, GradedMap(p1, p0, th::polys(r, {"x^2", "0", "0", "1"}))}});
    const GradedMap aug(p0, m.generators(), th::polys(r, {"1", "0"}));
    const ValidatedResolution padded = validate_resolution(p, m, aug, {-2, 8});
    const ValidatedResolution kos = koszul_resolution(r, th::polys(r, {"x^2"}));
    for (int t : {-2, 0, 1}) CHECK(ext_table(padded, t, {0, 2}, {-4, 4}) == ext_table(kos, t, {0, 2}, {-4, 4}));
  }

  TEST_CASE("local duality") {
    const GradedRing r = th::ring({"x", "y"});
    for (const auto& f : std::vector<std::vector<std::string>>{{}, {"x^2"}, {"x^2", "y^3"}, {"x*y"}, {"x+y"}}) {
      const LocalDualityReport rep = local_duality_check(koszul_resolution(r, th::polys(r, f)), {0, 2}, {-6, 2});
      CHECK(rep.result.passed);
      CHECK(rep.result.mismatches.empty());
      CHECK(rep.result.compared > 0);
    }
    const LocalDualityReport x2 = local_duality_check(koszul_resolution(r, th::polys(r, {"x^2"})), {0, 2}, {-6, 2});
    for (int d = -6; d <= 2; ++d) CHECK(x2.local_cohomology.dim(1, d) == (d >= 1 ? 0 : (d == 0 ? 1 : 2)));

    const GradedRing r3 = th::ring({"x", "y", "z"});
    CHECK(local_duality_check(koszul_resolution(r3, th::polys(r3, {"x^2", "y*z"})), {0, 3}, {-4, 2}, params(8)).result.passed);

    // M = 0 resolved by R -> R
    const FreeModule one(r, {0});
    const FreeComplex unit_cone(r, {{0, one}, {1, one}}, {{1, GradedMap(one, one, th::polys(r, {"1"}))}});
    const PresentedModule zero = th::cyclic(r, {"1"});
    const LocalDualityReport z =
        local_duality_check(validate_resolution(unit_cone, zero, GradedMap::identity(one), {-2, 4}), {0, 2}, {-4, 2});
    CHECK(z.result.passed);
  }

  TEST_CASE("dualizing module") {
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<std::string> vars;
      for (std::size_t j = 0; j < n; ++j) vars.push_back(std::string(1, static_cast<char>('x' + j)));
      const GradedRing r = th::ring(vars);
      const DualizingModuleReport d = dualizing_module_check(r, {-8, 8}, params(n == 3 ? 10 : 12));
      CHECK(d.result.passed);
      CHECK(d.result.excluded.empty());
      for (int deg = -8; deg <= 8; ++deg) {
        const long long expect = oracle::series_coefficient(std::vector<int>(n, 1), deg - static_cast<int>(n));
        CHECK(d.omega.dim(static_cast<int>(n), deg) == expect);
        CHECK(d.dual.dim(static_cast<int>(n), deg) == expect);
      }
    }
    const DualizingModuleReport far = dualizing_module_check(th::ring({"x", "y"}), {0, 1});
    CHECK(far.result.passed);
  }

  TEST_CASE("Greenlees-May adjunction") {
    const GradedRing r = th::ring({"x", "y"});
    const auto m = th::polys(r, {"x", "y"});
    const FreeComplex unit = FreeComplex::unit(r);

    const GmAdjunctionReport a = gm_adjunction_check(m, unit, unit, 2, {-6, 6}, {-6, 6});
    CHECK(a.passed());

    const FreeComplex k = koszul_complex({r, m});
    const GmAdjunctionReport b = gm_adjunction_check(m, k, unit, 4, {-6, 6}, {-6, 6});
    CHECK(b.chain_map_valid);
    CHECK(b.strandwise_isomorphism);
    CHECK(b.homology_equal);

    const ValidatedResolution res = koszul_resolution(r, th::polys(r, {"x^2"}));
    const FreeComplex y = FreeComplex::concentrated(FreeModule(r, {-2}));
    const GmAdjunctionReport c = gm_adjunction_check(m, res.complex, y, 6, {-6, 6}, {-6, 6});
    CHECK(c.passed());
    const HilbertTable ext = ext_table(res, -2, {0, 2}, {-6, 5});
    for (int j = 0; j <= 2; ++j)
      for (int d = -6; d <= 5; ++d) CHECK(c.left.dim(-j, d) == ext.dim(j, d));

    const FreeComplex a6 = stable_cech_truncated(r, m, 2);
    CHECK_NOTHROW(gm_adjunction_map(a6, k, y));
  }
}
