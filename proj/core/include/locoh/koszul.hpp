#pragma once

// Koszul complexes on power sequences a^k = (a_1^k, ..., a_n^k), their
// transition systems, self-duality and the truncated stable Čech complex.

#include <string>
#include <utility>
#include <vector>

#include "locoh/chain.hpp"

namespace locoh {

/// direct:  K(a^k) = [R -> R(k deg a)], transitions identity in degree 1.
/// inverse: K(a^k) = [R(-k deg a) -> R], transitions identity in degree 0.
enum class KoszulConvention { direct, inverse };

std::string to_string(KoszulConvention c);

struct KoszulSpec {
  GradedRing ring;
  std::vector<Poly> gens;
  unsigned power = 1;
  KoszulConvention convention = KoszulConvention::inverse;

  /// Throws EmptyGeneratorsError, ZeroGeneratorError, NonHomogeneousError or
  /// ValidationError (generator of degree <= 0, power 0).
  void validate() const;
  /// k * Σ deg a_i.
  int total_twist() const;
  KoszulSpec with_power(unsigned k) const;
};

std::vector<Poly> parse_generators(const GradedRing& ring, const std::vector<std::string>& texts);

FreeComplex koszul_complex(const KoszulSpec& spec);

/// φ^{k,l} (direct, k <= l) or ψ^{k,l} (inverse, k >= l) from K(a^k) to K(a^l).
/// Throws ConventionMismatchError or OrderError.
ChainMap transition(const KoszulSpec& from, const KoszulSpec& to);

/// dim H_i(a^k; M)_d.
HilbertTable koszul_homology_table(const KoszulSpec& spec, const PresentedModule& m, IndexRange range,
                                   DegreeWindow window, unsigned threads = 0);

struct SelfDualityReport {
  bool passed = true;
  int twist = 0;
  /// d' = d + direction * twist.
  int direction = -1;
  HilbertTable koszul_side;  // H_i(K ⊗ M)_d
  HilbertTable hom_side;     // H_{i-n}(Hom(K, M))_{d'}, keyed by (i, d)
  std::vector<std::pair<int, int>> mismatches;
  std::string correspondence() const;
};

/// Compares H_i(K ⊗ M)_d with H_{i-n}(Hom(K, M))_{d'} over the rectangle.
SelfDualityReport self_duality_check(const KoszulSpec& spec, const PresentedModule& m, IndexRange range,
                                     DegreeWindow window);

/// Finite telescope for hocolim_k Σ^{-n} K(a^k) (direct convention):
/// Cone(ϑ) with ϑ : ⊕_{k<K} X^k -> ⊕_{k<=K} X^k, ϑ = ι^k - ι^{k+1} φ^{k,k+1}.
/// Its homology is that of the last stage X^K.
FreeComplex stable_cech_truncated(const GradedRing& ring, const std::vector<Poly>& gens, unsigned k_max);

/// Rank of stable_cech_truncated(gens, K)_i for n generators.
std::size_t stable_cech_rank(std::size_t n, unsigned k_max, int i);

}  // namespace locoh
