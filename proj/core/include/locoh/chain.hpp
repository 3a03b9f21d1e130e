#pragma once

// Bounded complexes of twisted free modules, chain maps, and the functorial
// calculus on them: shift, cone, tensor, Hom, and strandwise homology.
//
// Sign conventions (homological indexing, differential of degree -1):
//   shift:  (Σⁿ X)_i = X_{i-n},  ∂ = (-1)ⁿ ∂^X
//   cone:   Cone(f)_i = X_{i-1} ⊕ Y_i,  ∂(x, y) = (-∂x, f(x) + ∂y)
//   tensor: ∂(x ⊗ y) = ∂x ⊗ y + (-1)^|x| x ⊗ ∂y
//   Hom:    Hom(X,Y)_i = ⊕_s Hom(X_s, Y_{s+i}),  ∂g = ∂^Y g - (-1)^i g ∂^X
// Only homology dimensions are contract; these signs make ∂∂ = 0.

#include <map>
#include <string>
#include <vector>

#include "locoh/exactla.hpp"
#include "locoh/gmod.hpp"

namespace locoh {

class FreeComplex {
 public:
  /// differentials[i] maps term(i) -> term(i-1). Absent terms are zero and
  /// absent differentials are zero maps. Throws ValidationError unless shapes
  /// match and ∂∂ = 0 as polynomial matrices.
  FreeComplex(GradedRing ring, std::map<int, FreeModule> terms,
              std::map<int, GradedMap> differentials = {});

  static FreeComplex concentrated(const FreeModule& module, int index = 0);
  /// R in degree 0.
  static FreeComplex unit(const GradedRing& ring);

  const GradedRing& ring() const noexcept { return ring_; }
  /// Lowest / highest index with a nonzero term; min_index() > max_index() for the zero complex.
  int min_index() const;
  int max_index() const;
  bool is_zero() const { return terms_.empty(); }

  FreeModule term(int i) const;
  GradedMap differential(int i) const;
  const std::map<int, FreeModule>& terms() const noexcept { return terms_; }

 private:
  GradedRing ring_;
  std::map<int, FreeModule> terms_;
  std::map<int, GradedMap> differentials_;
};

class ChainMap {
 public:
  /// Throws ValidationError unless every component is a degree-0 map
  /// source.term(i) -> target.term(i) and ∂^Y f = f ∂^X.
  ChainMap(FreeComplex source, FreeComplex target, std::map<int, GradedMap> components);

  static ChainMap identity(const FreeComplex& x);
  static ChainMap zero(const FreeComplex& source, const FreeComplex& target);

  const FreeComplex& source() const noexcept { return source_; }
  const FreeComplex& target() const noexcept { return target_; }
  GradedMap component(int i) const;

  /// g * f: first f, then g.
  friend ChainMap operator*(const ChainMap& g, const ChainMap& f);
  friend ChainMap operator+(const ChainMap& a, const ChainMap& b);
  friend bool operator==(const ChainMap& a, const ChainMap& b);

 private:
  FreeComplex source_;
  FreeComplex target_;
  std::map<int, GradedMap> components_;
};

/// frame ⊗_R coefficients: a complex whose terms are direct sums of twisted
/// copies of one presented module. With coefficients = R it is just the frame.
struct ModuleComplex {
  FreeComplex frame;
  PresentedModule coefficients;

  static ModuleComplex of(const FreeComplex& x);
  static ModuleComplex of(const PresentedModule& m);
};

FreeComplex shift(const FreeComplex& x, int n);
ChainMap shift(const ChainMap& f, int n);
FreeComplex cone(const ChainMap& f);
FreeComplex direct_sum(const FreeComplex& x, const FreeComplex& y);
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);

/// Summands of (X⊗Y)_i are ordered by s ascending (s + t = i), then X-generator,
/// then Y-generator. Twists add.
FreeComplex tensor(const FreeComplex& x, const FreeComplex& y);
ChainMap tensor(const ChainMap& f, const ChainMap& g);
ModuleComplex tensor(const FreeComplex& x, const PresentedModule& m);
ModuleComplex tensor(const FreeComplex& x, const ModuleComplex& y);

/// Summands of Hom(X,Y)_i are ordered by s ascending, then X_s-generator,
/// then Y_{s+i}-generator; Hom(R(a), R(b)) = R(b - a).
FreeComplex hom_complex(const FreeComplex& x, const FreeComplex& y);
ModuleComplex hom_complex(const FreeComplex& x, const PresentedModule& m);
ModuleComplex hom_complex(const FreeComplex& x, const ModuleComplex& y);
/// Hom(X, R).
FreeComplex dual(const FreeComplex& x);

// --- strandwise homology ----------------------------------------------------

/// Dimension of (C_i)_d.
std::size_t term_strand_dim(const ModuleComplex& c, int i, int d);
/// (F⊗M)_d -> (G⊗M)_d for a degree-0 map F -> G, in coset coordinates of M.
ExactMatrix tensor_strand_matrix(const GradedMap& map, const PresentedModule& m, int d);
/// ∂_i at internal degree d, (C_i)_d -> (C_{i-1})_d.
ExactMatrix strand_differential(const ModuleComplex& c, int i, int d);
/// H_i(C)_d = ker(∂_i)_d / im(∂_{i+1})_d in the coordinates of (C_i)_d.
StrandSpace homology_strand(const ModuleComplex& c, int i, int d);
StrandSpace homology_strand(const FreeComplex& c, int i, int d);

/// Matrix of H_i(f ⊗ M)_d between the given homology spaces.
ExactMatrix induced_homology_map(const ChainMap& f, const PresentedModule& m, int i, int d,
                                 const StrandSpace& source_h, const StrandSpace& target_h);
ExactMatrix induced_homology_map(const ChainMap& f, const PresentedModule& m, int i, int d);

/// Dimensions of H_i(C)_d over the rectangle; cells are evaluated in parallel
/// (threads = 0 picks the hardware concurrency) and merged deterministically.
HilbertTable homology_table(const ModuleComplex& c, IndexRange range, DegreeWindow window,
                            unsigned threads = 0);
HilbertTable homology_table(const FreeComplex& c, IndexRange range, DegreeWindow window,
                            unsigned threads = 0);

struct QuasiIsoFailure {
  int i;
  int d;
  std::size_t source_dim;
  std::size_t target_dim;
  std::size_t rank;
};

struct QuasiIsoReport {
  bool is_quasi_isomorphism = true;
  std::vector<QuasiIsoFailure> failures;
};

/// Whether f ⊗ M induces isomorphisms on every homology strand in the window.
QuasiIsoReport quasi_iso_check(const ChainMap& f, const PresentedModule& m, IndexRange range,
                               DegreeWindow window);
QuasiIsoReport quasi_iso_check(const ChainMap& f, IndexRange range, DegreeWindow window);

}  // namespace locoh
