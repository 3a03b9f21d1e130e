#pragma once

// Graded Matlis duality on Hilbert tables, Ext from validated free resolutions,
// local duality with ω = R(-Σ w_j), and the Greenlees-May adjunction verifier.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locoh/chain.hpp"
#include "locoh/localdh.hpp"

namespace locoh {

/// (i, d) -> (i, -d), flags carried over.
HilbertTable matlis_dual_table(const HilbertTable& t);

/// A free complex P (terms in degrees >= 0) with an augmentation P_0 -> F_0 onto the
/// generators of M, checked on `window`: H_i(P)_d = 0 for i >= 1 and
/// coker(∂_1)_d -> M_d is an isomorphism.
struct ValidatedResolution {
  FreeComplex complex;
  PresentedModule module;
  GradedMap augmentation;
  DegreeWindow window;
};

/// Throws ValidationError when any check fails.
ValidatedResolution validate_resolution(const FreeComplex& p, const PresentedModule& m, const GradedMap& augmentation,
                                        DegreeWindow window);

/// Koszul resolution of R/(f_1..f_c) (inverse convention twists). Regularity is
/// verified on the window (default [0, 2 Σ deg f]); throws NotRegularError with
/// the first nonvanishing H_i strand. An empty list resolves R by itself.
ValidatedResolution koszul_resolution(const GradedRing& ring, const std::vector<Poly>& f_list,
                                      std::optional<DegreeWindow> window = std::nullopt);

/// Ext^j(M, R(t))_d = H_{-j}(Hom(P, R(t)))_d, keyed by (j, d).
HilbertTable ext_table(const ValidatedResolution& res, int twist, IndexRange j_range, DegreeWindow window,
                       unsigned threads = 0);

struct DualityComparison {
  bool passed = true;
  std::size_t compared = 0;
  std::vector<std::pair<int, int>> excluded;    // unstabilized local cohomology entries
  std::vector<std::pair<int, int>> mismatches;
};

struct LocalDualityReport {
  DualityComparison result;
  HilbertTable local_cohomology;  // H^i_m(M)_d keyed (i, d)
  HilbertTable ext;               // Ext^{n-i}(M, ω)_{-d}, keyed (i, d)
};

/// dim H^i_m(M)_d = dim Ext^{n-i}(M, R(-Σ w))_{-d} at every stabilized (i, d).
LocalDualityReport local_duality_check(const ValidatedResolution& res, IndexRange i_range, DegreeWindow window,
                                       TowerParams params = {});

struct DualizingModuleReport {
  DualityComparison result;
  HilbertTable top_local_cohomology;  // H^n_m(R)
  HilbertTable dual;                  // its Matlis dual
  HilbertTable omega;                 // hilbert_row(R(-Σ w)) recorded at i = n
};

DualizingModuleReport dualizing_module_check(const GradedRing& ring, DegreeWindow window, TowerParams params = {});

struct GmAdjunctionReport {
  bool chain_map_valid = false;
  bool strandwise_isomorphism = false;
  bool homology_equal = false;
  std::string chain_map_error;
  std::vector<std::pair<int, int>> non_isomorphic_cells;
  std::vector<std::pair<int, int>> homology_mismatches;
  HilbertTable left;   // H_i(Hom(A ⊗ X, Y))_d
  HilbertTable right;  // H_i(Hom(X, Hom(A, Y)))_d
  bool passed() const { return chain_map_valid && strandwise_isomorphism && homology_equal; }
};

/// The adjunction Φ : Hom(A ⊗ X, Y) -> Hom(X, Hom(A, Y)), Φ(g)(x)(a) = (-1)^{|a||x|} g(a ⊗ x),
/// with A the truncated stable Čech complex on gens.
ChainMap gm_adjunction_map(const FreeComplex& a, const FreeComplex& x, const FreeComplex& y);

GmAdjunctionReport gm_adjunction_check(const std::vector<Poly>& gens, const FreeComplex& x, const FreeComplex& y,
                                       unsigned k_max, IndexRange i_range, DegreeWindow window,
                                       unsigned threads = 0);

}  // namespace locoh
