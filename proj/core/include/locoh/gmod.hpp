#pragma once

// Twisted graded free modules, homogeneous maps between them, finitely
// presented graded modules and their strands M_d.
//
// Twist convention: R(a)_d = R_{a+d}, so the generator of R(-t) sits in degree t.

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "locoh/exactla.hpp"
#include "locoh/gring.hpp"

namespace locoh {

/// Closed interval of internal degrees.
struct DegreeWindow {
  int lo = 0;
  int hi = -1;
  bool contains(int d) const { return lo <= d && d <= hi; }
  bool empty() const { return hi < lo; }
};

/// Closed interval of homological indices.
struct IndexRange {
  int lo = 0;
  int hi = -1;
  bool contains(int i) const { return lo <= i && i <= hi; }
};

/// F = ⊕_j R(a_j).
class FreeModule {
 public:
  FreeModule(GradedRing ring, std::vector<int> twists = {});

  const GradedRing& ring() const noexcept { return ring_; }
  const std::vector<int>& twists() const noexcept { return twists_; }
  std::size_t rank() const noexcept { return twists_.size(); }
  int twist(std::size_t j) const { return twists_.at(j); }

  std::size_t strand_dim(int d) const;
  /// Offset of generator j's block inside the strand F_d, followed by dim F_d.
  std::vector<std::size_t> strand_offsets(int d) const;

  static FreeModule direct_sum(const FreeModule& a, const FreeModule& b);

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return a.ring_ == b.ring_ && a.twists_ == b.twists_;
  }

 private:
  GradedRing ring_;
  std::vector<int> twists_;
};

/// Homogeneous map F = ⊕R(a_j) -> G = ⊕R(b_i) of the given internal degree:
/// entry (i, j) is zero or homogeneous of degree internal_degree + b_i - a_j.
class GradedMap {
 public:
  /// entries is row-major, rows = target rank, cols = source rank.
  /// Throws NonHomogeneousError when an entry has the wrong degree.
  GradedMap(FreeModule source, FreeModule target, std::vector<Poly> entries, int internal_degree = 0);

  static GradedMap zero(FreeModule source, FreeModule target, int internal_degree = 0);
  static GradedMap identity(const FreeModule& module);

  const FreeModule& source() const noexcept { return source_; }
  const FreeModule& target() const noexcept { return target_; }
  int internal_degree() const noexcept { return degree_; }
  const Poly& entry(std::size_t i, std::size_t j) const { return entries_[i * source_.rank() + j]; }
  bool is_zero() const;

  /// Matrix of F_d -> G_{d + internal_degree} in monomial coordinates.
  ExactMatrix strand_matrix(int d) const;

  /// g * f means "first f, then g".
  friend GradedMap operator*(const GradedMap& g, const GradedMap& f);
  friend GradedMap operator+(const GradedMap& a, const GradedMap& b);
  GradedMap operator-() const;
  friend bool operator==(const GradedMap& a, const GradedMap& b);

 private:
  FreeModule source_;
  FreeModule target_;
  std::vector<Poly> entries_;
  int degree_;
};

/// M = coker(F1 -> F0) for a degree-0 presentation.
class PresentedModule {
 public:
  explicit PresentedModule(GradedMap presentation);

  /// The free module F with no relations.
  static PresentedModule free(const FreeModule& generators);
  static PresentedModule free(const GradedRing& ring, std::vector<int> twists = {0});
  /// relations[i][j] is the coefficient of generator i in relation j; each
  /// relation's source twist is inferred from its first nonzero entry.
  static PresentedModule from_relations(const GradedRing& ring, std::vector<int> target_twists,
                                        const std::vector<std::vector<Poly>>& relations);

  const GradedRing& ring() const noexcept;
  const GradedMap& presentation() const noexcept;
  const FreeModule& generators() const noexcept { return presentation().target(); }
  bool is_free() const noexcept;

  /// M_d = (F0)_d / im(F1)_d. Cached; safe to call concurrently.
  const StrandSpace& strand(int d) const;
  /// ·f : M_d -> M_{d + deg f} on coset coordinates.
  ExactMatrix mult_operator(const Poly& f, int d) const;
  /// ·f : M_d -> M_target, f zero or homogeneous of degree target - d.
  ExactMatrix mult_operator(const Poly& f, int d, int target) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

const StrandSpace& strand(const PresentedModule& m, int d);
ExactMatrix mult_operator(const PresentedModule& m, const Poly& f, int d);
/// (0 :_M f)_d as a subspace of M_d, expressed in the ambient coordinates of (F0)_d.
StrandSpace annihilator_strand(const PresentedModule& m, const Poly& f, int d);

struct HilbertEntry {
  std::int64_t dim = 0;
  bool stabilized = true;
  int k_used = 0;
  friend bool operator==(const HilbertEntry&, const HilbertEntry&) = default;
};

/// (homological index i, internal degree d) -> dimension with stabilization flag.
class HilbertTable {
 public:
  using Key = std::pair<int, int>;

  void set(int i, int d, HilbertEntry e) { entries_[{i, d}] = e; }
  const HilbertEntry* find(int i, int d) const;
  const HilbertEntry& at(int i, int d) const;
  std::int64_t dim(int i, int d) const { return at(i, d).dim; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  /// Sorted by (i, d).
  const std::map<Key, HilbertEntry>& entries() const noexcept { return entries_; }
  bool all_stabilized() const;

  friend bool operator==(const HilbertTable&, const HilbertTable&) = default;

 private:
  std::map<Key, HilbertEntry> entries_;
};

/// dim M_d across the window, recorded at i = 0.
HilbertTable hilbert_row(const PresentedModule& m, DegreeWindow window);

}  // namespace locoh
