#include <algorithm>

#include "locoh/errors.hpp"
#include "locoh/localdh.hpp"
#include "locoh/parallel.hpp"

namespace locoh {

namespace {

bool is_unit(const FreeComplex& x) {
  if (x.terms().size() != 1) return false;
  const auto& [i, m] = *x.terms().begin();
  return i == 0 && m.rank() == 1 && m.twist(0) == 0;
}

ModuleComplex tensor_with(const FreeComplex& k, const ModuleComplex& y) {
  if (is_unit(y.frame)) return {k, y.coefficients};
  return tensor(k, y);
}

ChainMap tensor_with(const ChainMap& f, const ModuleComplex& y) {
  if (is_unit(y.frame)) return f;
  return tensor(f, ChainMap::identity(y.frame));
}

/// Stage complexes and transitions of one Koszul system tensored with Y.
struct TowerContext {
  KoszulSpec spec;
  PresentedModule coefficients;
  std::vector<ModuleComplex> stages;
  std::vector<ChainMap> transitions;  // directed: k -> k+1; inverse: k+1 -> k

  TowerContext(const KoszulSpec& base, const ModuleComplex& y, unsigned k_max)
      : spec(base), coefficients(y.coefficients) {
    if (k_max == 0) throw ValidationError("k_max must be positive");
    for (unsigned k = 1; k <= k_max; ++k) {
      stages.push_back(tensor_with(koszul_complex(spec.with_power(k)), y));
      if (k == k_max) break;
      const ChainMap t = spec.convention == KoszulConvention::direct
                             ? transition(spec.with_power(k), spec.with_power(k + 1))
                             : transition(spec.with_power(k + 1), spec.with_power(k));
      transitions.push_back(tensor_with(t, y));
    }
  }

  StrandTower tower(int i, int d) const {
    StrandTower t;
    t.field = spec.ring.field();
    t.direction = spec.convention == KoszulConvention::direct ? TowerDirection::directed : TowerDirection::inverse;
    std::vector<StrandSpace> h;
    h.reserve(stages.size());
    for (const auto& c : stages) {
      h.push_back(homology_strand(c, i, d));
      t.dims.push_back(h.back().dim());
    }
    for (std::size_t k = 0; k < transitions.size(); ++k) {
      const ExactMatrix ambient = tensor_strand_matrix(transitions[k].component(i), coefficients, d);
      if (t.direction == TowerDirection::directed)
        t.transitions.push_back(induced_map(h[k], h[k + 1], ambient));
      else
        t.transitions.push_back(induced_map(h[k + 1], h[k], ambient));
    }
    return t;
  }
};

KoszulSpec spec_for(const std::vector<Poly>& gens, KoszulConvention c) {
  if (gens.empty()) throw EmptyGeneratorsError("ideal needs at least one generator");
  KoszulSpec s{gens.front().ring(), gens, 1, c};
  s.validate();
  return s;
}

std::vector<std::pair<int, int>> cells_of(IndexRange range, DegreeWindow window) {
  std::vector<std::pair<int, int>> cells;
  for (int i = range.lo; i <= range.hi; ++i)
    for (int d = window.lo; d <= window.hi; ++d) cells.emplace_back(i, d);
  return cells;
}

}  // namespace

StrandTower koszul_tower(const KoszulSpec& spec, const ModuleComplex& y, int i, int d, unsigned k_max) {
  return TowerContext(spec, y, k_max).tower(i, d);
}

std::vector<StrandTower> koszul_towers(const KoszulSpec& spec, const ModuleComplex& y, int i,
                                       DegreeWindow window, unsigned k_max) {
  const TowerContext ctx(spec, y, k_max);
  std::vector<StrandTower> out;
  for (int d = window.lo; d <= window.hi; ++d) out.push_back(ctx.tower(i, d));
  return out;
}

HilbertTable local_cohomology_table(const std::vector<Poly>& gens, const ModuleComplex& y, IndexRange i_range,
                                    DegreeWindow window, TowerParams params) {
  const TowerContext ctx(spec_for(gens, KoszulConvention::direct), y, params.k_max);
  const int n = static_cast<int>(gens.size());
  const auto cells = cells_of(i_range, window);
  std::vector<ColimResult> results(cells.size());
  parallel_for(cells.size(), params.threads, [&](std::size_t c) {
    results[c] = colim_truncated(ctx.tower(n - cells[c].first, cells[c].second), params.stab);
  });
  HilbertTable t;
  for (std::size_t c = 0; c < cells.size(); ++c)
    t.set(cells[c].first, cells[c].second,
          {static_cast<std::int64_t>(results[c].dim), results[c].stabilized, static_cast<int>(results[c].k_used)});
  return t;
}

HilbertTable local_cohomology_table(const std::vector<Poly>& gens, const PresentedModule& m, IndexRange i_range,
                                    DegreeWindow window, TowerParams params) {
  return local_cohomology_table(gens, ModuleComplex::of(m), i_range, window, params);
}

std::map<std::pair<int, int>, LocalHomologyCell> local_homology_cells(const std::vector<Poly>& gens,
                                                                      const ModuleComplex& y, IndexRange i_range,
                                                                      DegreeWindow window, TowerParams params) {
  const TowerContext ctx(spec_for(gens, KoszulConvention::inverse), y, params.k_max);
  const auto cells = cells_of({i_range.lo, i_range.hi + 1}, window);
  std::vector<LimResult> results(cells.size());
  parallel_for(cells.size(), params.threads, [&](std::size_t c) {
    results[c] = lim_lim1_truncated(ctx.tower(cells[c].first, cells[c].second), params.stab);
  });
  std::map<std::pair<int, int>, LimResult> by_cell;
  for (std::size_t c = 0; c < cells.size(); ++c) by_cell.emplace(cells[c], results[c]);
  std::map<std::pair<int, int>, LocalHomologyCell> out;
  for (int i = i_range.lo; i <= i_range.hi; ++i)
    for (int d = window.lo; d <= window.hi; ++d)
      out.emplace(std::make_pair(i, d), LocalHomologyCell{by_cell.at({i, d}), by_cell.at({i + 1, d})});
  return out;
}

HilbertTable local_homology_table(const std::vector<Poly>& gens, const ModuleComplex& y, IndexRange i_range,
                                  DegreeWindow window, TowerParams params) {
  HilbertTable t;
  for (const auto& [key, cell] : local_homology_cells(gens, y, i_range, window, params)) {
    const auto dim = static_cast<std::int64_t>(cell.lim.lim_dim + cell.lim1.lim1_dim);
    const bool stable = cell.lim.stabilized && cell.lim1.stabilized;
    const unsigned k_used = std::max(cell.lim.k_used, cell.lim1.k_used);
    t.set(key.first, key.second, {dim, stable, static_cast<int>(k_used)});
  }
  return t;
}

HilbertTable local_homology_table(const std::vector<Poly>& gens, const PresentedModule& m, IndexRange i_range,
                                  DegreeWindow window, TowerParams params) {
  return local_homology_table(gens, ModuleComplex::of(m), i_range, window, params);
}

HilbertTable hom_stable_cech_table(const std::vector<Poly>& gens, const ModuleComplex& y, unsigned k_max,
                                   IndexRange i_range, DegreeWindow window, unsigned threads) {
  const KoszulSpec spec = spec_for(gens, KoszulConvention::direct);
  const FreeComplex a = stable_cech_truncated(spec.ring, gens, k_max);
  HilbertTable t = homology_table(hom_complex(a, y), i_range, window, threads);
  HilbertTable out;
  for (const auto& [key, e] : t.entries()) out.set(key.first, key.second, {e.dim, true, static_cast<int>(k_max)});
  return out;
}

GeneratorIndependenceReport generator_independence_check(const std::vector<Poly>& gens_a,
                                                         const std::vector<Poly>& gens_b,
                                                         const PresentedModule& m, IndexRange i_range,
                                                         DegreeWindow window, TowerParams params) {
  GeneratorIndependenceReport r;
  r.table_a = local_cohomology_table(gens_a, m, i_range, window, params);
  r.table_b = local_cohomology_table(gens_b, m, i_range, window, params);
  for (const auto& [key, a] : r.table_a.entries()) {
    const HilbertEntry& b = r.table_b.at(key.first, key.second);
    if (!a.stabilized || !b.stabilized) {
      r.excluded.push_back(key);
      continue;
    }
    ++r.compared;
    if (a.dim != b.dim) r.mismatches.push_back(key);
  }
  r.passed = r.mismatches.empty();
  return r;
}

}  // namespace locoh
