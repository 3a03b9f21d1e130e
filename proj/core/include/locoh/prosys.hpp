#pragma once

// Directed systems and inverse towers of finite-dimensional strand spaces,
// with truncated colim / lim / lim¹ and the trivial Mittag-Leffler certificate.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locoh/exactla.hpp"
#include "locoh/gmod.hpp"

namespace locoh {

enum class TowerDirection { directed, inverse };

/// Stages V_1..V_K (stored 0-based). transitions[k-1] is V_k -> V_{k+1} for a
/// directed system and V_{k+1} -> V_k for an inverse tower.
struct StrandTower {
  FieldSpec field;
  TowerDirection direction = TowerDirection::directed;
  std::vector<std::size_t> dims;
  std::vector<ExactMatrix> transitions;

  std::size_t size() const noexcept { return dims.size(); }
  std::size_t dim(unsigned k) const { return dims.at(k - 1); }
  /// Throws ValidationError unless transition shapes chain correctly.
  void validate() const;
  /// The composite V_from -> V_to (from <= to when directed, from >= to when inverse).
  ExactMatrix composite(unsigned from, unsigned to) const;
};

struct ColimResult {
  std::size_t dim = 0;
  bool stabilized = false;
  unsigned k_used = 0;
};

/// Final-stage dimension; stabilized iff the last s transitions are isomorphisms,
/// k_used = first stage of the maximal run of isomorphisms ending at K.
ColimResult colim_truncated(const StrandTower& tower, unsigned s = 2);

struct LimResult {
  std::size_t lim_dim = 0;
  std::size_t lim1_dim = 0;
  bool mittag_leffler = false;
  bool stabilized = false;
  unsigned k_used = 0;
};

/// ker / coker of ϖ(x_j) = (x_j - t_j(x_{j+1})) on ∏_{j<=J} I_j -> ∏_{j<J} I_j where
/// J = K - s and I_j = im(V_K -> V_j). mittag_leffler: dim im(V_k -> V_j) is constant
/// for k in [K - s, K] and every j <= J; stabilized additionally asks dim I_j to be
/// constant over the last s indices j <= J.
LimResult lim_lim1_truncated(const StrandTower& tower, unsigned s = 2);

struct ProZeroCertificate {
  bool success = true;
  /// l -> least k >= l with V_k -> V_l zero (k = l only when V_l = 0).
  std::map<unsigned, unsigned> k_of_l;
  std::vector<unsigned> failures;
};

/// Certificate for l = 1..l_max (l_max = 0 means K - 1).
ProZeroCertificate pro_zero_certificate(const StrandTower& tower, unsigned l_max = 0);
/// Graded tower given degree by degree: k(l) is the maximum over the degrees.
ProZeroCertificate pro_zero_certificate(const std::vector<StrandTower>& strands, unsigned l_max = 0);

struct AnnihilatorBound {
  std::optional<unsigned> t;
  /// dims[t-1][d - window.lo] = dim (0 :_M f^t)_d for t = 1..k_probe+1 (as far as computed).
  std::vector<std::vector<std::size_t>> dims;
  std::string caveat;
};

/// Least t <= k_probe with (0 :_M f^t)_d = (0 :_M f^{t+1})_d for all d in the window.
AnnihilatorBound annihilator_bound(const PresentedModule& m, const Poly& f, DegreeWindow window,
                                   unsigned k_probe = 8);

}  // namespace locoh
