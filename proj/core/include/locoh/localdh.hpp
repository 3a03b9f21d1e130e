#pragma once

// Degreewise local cohomology and local homology through Koszul towers:
//   H^i_a(Y)_d = colim_k H_{n-i}(K(a^k) ⊗ Y)_d   (direct convention, φ transitions)
//   H^a_i(Y)_d = lim_k H_i(K(a^k) ⊗ Y)_d + lim¹_k H_{i+1}(K(a^k) ⊗ Y)_d   (inverse, ψ transitions)

#include <utility>
#include <vector>

#include "locoh/chain.hpp"
#include "locoh/koszul.hpp"
#include "locoh/prosys.hpp"

namespace locoh {

struct TowerParams {
  unsigned k_max = 8;
  unsigned stab = 2;
  unsigned threads = 0;
};

/// Stages k = 1..k_max of H_i(K(a^k) ⊗ Y)_d with the transition maps induced by
/// φ (direct convention) or ψ (inverse convention).
StrandTower koszul_tower(const KoszulSpec& spec, const ModuleComplex& y, int i, int d, unsigned k_max);
std::vector<StrandTower> koszul_towers(const KoszulSpec& spec, const ModuleComplex& y, int i,
                                       DegreeWindow window, unsigned k_max);

HilbertTable local_cohomology_table(const std::vector<Poly>& gens, const ModuleComplex& y, IndexRange i_range,
                                    DegreeWindow window, TowerParams params = {});
HilbertTable local_cohomology_table(const std::vector<Poly>& gens, const PresentedModule& m, IndexRange i_range,
                                    DegreeWindow window, TowerParams params = {});

struct LocalHomologyCell {
  LimResult lim;   // from the H_i tower
  LimResult lim1;  // from the H_{i+1} tower
};

HilbertTable local_homology_table(const std::vector<Poly>& gens, const ModuleComplex& y, IndexRange i_range,
                                  DegreeWindow window, TowerParams params = {});
HilbertTable local_homology_table(const std::vector<Poly>& gens, const PresentedModule& m, IndexRange i_range,
                                  DegreeWindow window, TowerParams params = {});
/// Per-cell lim / lim¹ data behind local_homology_table, keyed by (i, d).
std::map<std::pair<int, int>, LocalHomologyCell> local_homology_cells(const std::vector<Poly>& gens,
                                                                      const ModuleComplex& y, IndexRange i_range,
                                                                      DegreeWindow window, TowerParams params = {});

/// H_i(Hom(Č_∞ truncated at K, Y))_d; entries carry k_used = K.
HilbertTable hom_stable_cech_table(const std::vector<Poly>& gens, const ModuleComplex& y, unsigned k_max,
                                   IndexRange i_range, DegreeWindow window, unsigned threads = 0);

struct GeneratorIndependenceReport {
  bool passed = true;
  HilbertTable table_a;
  HilbertTable table_b;
  std::size_t compared = 0;
  std::vector<std::pair<int, int>> excluded;    // unstabilized on either side
  std::vector<std::pair<int, int>> mismatches;  // stabilized on both sides, dims differ
};

GeneratorIndependenceReport generator_independence_check(const std::vector<Poly>& gens_a,
                                                         const std::vector<Poly>& gens_b,
                                                         const PresentedModule& m, IndexRange i_range,
                                                         DegreeWindow window, TowerParams params = {});

}  // namespace locoh
