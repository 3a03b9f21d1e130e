#include <algorithm>

#include "locoh/errors.hpp"
#include "locoh/prosys.hpp"

namespace locoh {

void StrandTower::validate() const {
  if (dims.empty()) {
    if (!transitions.empty()) throw ValidationError("tower without stages has transitions");
    return;
  }
  if (transitions.size() + 1 != dims.size())
    throw ValidationError("tower with " + std::to_string(dims.size()) + " stages needs " +
                          std::to_string(dims.size() - 1) + " transitions");
  for (std::size_t k = 0; k < transitions.size(); ++k) {
    const ExactMatrix& t = transitions[k];
    const bool ok = direction == TowerDirection::directed
                        ? (t.rows() == dims[k + 1] && t.cols() == dims[k])
                        : (t.rows() == dims[k] && t.cols() == dims[k + 1]);
    if (!ok || !(t.field() == field))
      throw ValidationError("transition " + std::to_string(k + 1) + " has the wrong shape");
  }
}

ExactMatrix StrandTower::composite(unsigned from, unsigned to) const {
  if (from < 1 || to < 1 || from > size() || to > size())
    throw std::out_of_range("tower stage out of range");
  ExactMatrix m = ExactMatrix::identity(field, dim(from));
  if (direction == TowerDirection::directed) {
    if (from > to) throw OrderError("directed composite needs from <= to");
    for (unsigned k = from; k < to; ++k) m = transitions[k - 1] * m;
  } else {
    if (from < to) throw OrderError("inverse composite needs from >= to");
    for (unsigned k = from; k > to; --k) m = transitions[k - 2] * m;
  }
  return m;
}

namespace {

bool is_isomorphism(const ExactMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

}  // namespace

ColimResult colim_truncated(const StrandTower& tower, unsigned s) {
  if (tower.direction != TowerDirection::directed) throw ValidationError("colim needs a directed system");
  tower.validate();
  ColimResult r;
  if (tower.size() == 0) return r;
  const auto K = static_cast<unsigned>(tower.size());
  unsigned run = 0;
  while (run + 1 < K && is_isomorphism(tower.transitions[K - 2 - run])) ++run;
  r.dim = tower.dim(K);
  r.stabilized = run >= s;
  r.k_used = r.stabilized ? K - run : K;
  return r;
}

LimResult lim_lim1_truncated(const StrandTower& tower, unsigned s) {
  if (tower.direction != TowerDirection::inverse) throw ValidationError("lim needs an inverse tower");
  tower.validate();
  LimResult r;
  if (tower.size() == 0) return r;
  const auto K = static_cast<unsigned>(tower.size());
  const unsigned J = K > s ? K - s : 1;

  // stable images I_j = im(V_K -> V_j), j = 1..J
  std::vector<ExactMatrix> basis;
  basis.reserve(J);
  for (unsigned j = 1; j <= J; ++j) basis.push_back(column_space_basis(tower.composite(K, j)));

  std::vector<std::size_t> offset(J + 1, 0);
  for (unsigned j = 1; j <= J; ++j) offset[j] = offset[j - 1] + basis[j - 1].cols();
  const std::size_t cols = offset[J];
  const std::size_t rows = offset[J - 1];
  ExactMatrix varpi(tower.field, rows, cols);
  for (unsigned j = 1; j < J; ++j) {
    const std::size_t rj = basis[j - 1].cols();
    const std::size_t rn = basis[j].cols();
    if (rj == 0) continue;
    varpi.set_block(offset[j - 1], offset[j - 1], ExactMatrix::identity(tower.field, rj));
    if (rn == 0) continue;
    const ExactMatrix image = tower.transitions[j - 1] * basis[j];
    const auto coords = solve(basis[j - 1], image);
    if (!coords) throw InvariantViolation("transition does not map stable images into stable images");
    varpi.set_block(offset[j - 1], offset[j], -*coords);
  }
  const std::size_t rk = rank(varpi);
  r.lim_dim = cols - rk;
  r.lim1_dim = rows - rk;

  r.mittag_leffler = K > s;
  for (unsigned j = 1; j <= J && r.mittag_leffler; ++j) {
    const std::size_t target = basis[j - 1].cols();
    for (unsigned k = std::max(j + 1, K - s); k < K; ++k)
      if (rank(tower.composite(k, j)) != target) {
        r.mittag_leffler = false;
        break;
      }
  }
  unsigned j0 = J;
  while (j0 > 1 && basis[j0 - 2].cols() == basis[J - 1].cols()) --j0;
  r.k_used = j0;
  r.stabilized = r.mittag_leffler && J >= s && J - j0 + 1 >= s;
  return r;
}

ProZeroCertificate pro_zero_certificate(const StrandTower& tower, unsigned l_max) {
  if (tower.direction != TowerDirection::inverse) throw ValidationError("pro-zero certificate needs an inverse tower");
  tower.validate();
  ProZeroCertificate c;
  const auto K = static_cast<unsigned>(tower.size());
  if (l_max == 0) l_max = K > 0 ? K - 1 : 0;
  l_max = std::min(l_max, K);
  for (unsigned l = 1; l <= l_max; ++l) {
    if (tower.dim(l) == 0) {
      c.k_of_l[l] = l;
      continue;
    }
    ExactMatrix m = ExactMatrix::identity(tower.field, tower.dim(l));
    bool found = false;
    for (unsigned k = l + 1; k <= K; ++k) {
      m = m * tower.transitions[k - 2];
      if (m.is_zero()) {
        c.k_of_l[l] = k;
        found = true;
        break;
      }
    }
    if (!found) {
      c.success = false;
      c.failures.push_back(l);
    }
  }
  return c;
}

ProZeroCertificate pro_zero_certificate(const std::vector<StrandTower>& strands, unsigned l_max) {
  ProZeroCertificate c;
  if (strands.empty()) return c;
  std::size_t K = strands.front().size();
  for (const auto& t : strands)
    if (t.size() != K) throw ValidationError("graded tower has strands of different lengths");
  if (l_max == 0) l_max = K > 0 ? static_cast<unsigned>(K - 1) : 0;
  std::map<unsigned, bool> failed;
  for (const auto& t : strands) {
    const ProZeroCertificate part = pro_zero_certificate(t, l_max);
    for (const auto& [l, k] : part.k_of_l) c.k_of_l[l] = std::max(c.k_of_l[l], k);
    for (unsigned l : part.failures) failed[l] = true;
  }
  for (const auto& [l, f] : failed) {
    c.k_of_l.erase(l);
    c.failures.push_back(l);
  }
  c.success = c.failures.empty();
  return c;
}

AnnihilatorBound annihilator_bound(const PresentedModule& m, const Poly& f, DegreeWindow window,
                                   unsigned k_probe) {
  if (!f.is_zero()) (void)f.homogeneous_degree();
  AnnihilatorBound b;
  b.caveat = "annihilators compared on degrees " + std::to_string(window.lo) + ".." +
             std::to_string(window.hi) + " only";
  auto row = [&](unsigned t) {
    const Poly power = f.pow(t);
    std::vector<std::size_t> dims;
    for (int d = window.lo; d <= window.hi; ++d) dims.push_back(annihilator_strand(m, power, d).dim());
    return dims;
  };
  b.dims.push_back(row(1));
  for (unsigned t = 1; t <= k_probe; ++t) {
    b.dims.push_back(row(t + 1));
    if (b.dims[t] == b.dims[t - 1]) {
      b.t = t;
      return b;
    }
  }
  return b;
}

}  // namespace locoh
