#include "locoh/duality.hpp"
#include "locoh/errors.hpp"
#include "locoh/parallel.hpp"

namespace locoh {

HilbertTable matlis_dual_table(const HilbertTable& t) {
  HilbertTable out;
  for (const auto& [key, e] : t.entries()) out.set(key.first, -key.second, e);
  return out;
}

// ---------------------------------------------------------------------------
// resolutions

namespace {

struct ResolutionFailure {
  int index;
  int degree;
  std::size_t dim;
  std::string what;
};

std::optional<ResolutionFailure> check_resolution(const FreeComplex& p, const PresentedModule& m,
                                                  const GradedMap& augmentation, DegreeWindow window) {
  const FieldSpec& field = p.ring().field();
  for (int d = window.lo; d <= window.hi; ++d) {
    for (int i = 1; i <= p.max_index(); ++i) {
      const std::size_t h = homology_strand(p, i, d).dim();
      if (h != 0) return ResolutionFailure{i, d, h, "H_" + std::to_string(i) + " does not vanish"};
    }
    const StrandSpace coker = StrandSpace::quotient(field, p.term(0).strand_dim(d), p.differential(1).strand_matrix(d));
    const StrandSpace& md = m.strand(d);
    ExactMatrix induced;
    try {
      induced = induced_map(coker, md, augmentation.strand_matrix(d));
    } catch (const WellDefinednessError&) {
      return ResolutionFailure{0, d, coker.dim(), "augmentation does not kill the image of ∂_1"};
    }
    if (!is_invertible(induced))
      return ResolutionFailure{0, d, coker.dim(), "coker(∂_1) is not isomorphic to the module"};
  }
  return std::nullopt;
}

std::string failure_text(const ResolutionFailure& f) {
  return f.what + " in degree " + std::to_string(f.degree) + " (dim " + std::to_string(f.dim) + ")";
}

}  // namespace

ValidatedResolution validate_resolution(const FreeComplex& p, const PresentedModule& m, const GradedMap& augmentation,
                                        DegreeWindow window) {
  if (!p.is_zero() && p.min_index() < 0) throw ValidationError("resolution has terms in negative degrees");
  if (augmentation.internal_degree() != 0 || !(augmentation.source() == p.term(0)) ||
      !(augmentation.target() == m.generators()))
    throw ValidationError("augmentation must map P_0 to the generators of the module in degree 0");
  if (auto f = check_resolution(p, m, augmentation, window)) throw ValidationError("not a resolution: " + failure_text(*f));
  return {p, m, augmentation, window};
}

ValidatedResolution koszul_resolution(const GradedRing& ring, const std::vector<Poly>& f_list,
                                      std::optional<DegreeWindow> window) {
  if (f_list.empty()) {
    const FreeComplex unit = FreeComplex::unit(ring);
    return validate_resolution(unit, PresentedModule::free(ring), GradedMap::identity(unit.term(0)),
                               window.value_or(DegreeWindow{0, 0}));
  }
  const KoszulSpec spec{ring, f_list, 1, KoszulConvention::inverse};
  spec.validate();
  const DegreeWindow w = window.value_or(DegreeWindow{0, 2 * spec.total_twist()});
  const FreeComplex k = koszul_complex(spec);
  const PresentedModule m = PresentedModule::from_relations(ring, {0}, {f_list});
  const GradedMap eps = GradedMap::identity(k.term(0));
  if (auto f = check_resolution(k, m, eps, w)) {
    if (f->index >= 1) throw NotRegularError(f->index, f->degree, f->dim);
    throw InvariantViolation("Koszul complex does not present R/(f): " + failure_text(*f));
  }
  return {k, m, eps, w};
}

HilbertTable ext_table(const ValidatedResolution& res, int twist, IndexRange j_range, DegreeWindow window,
                       unsigned threads) {
  const GradedRing& ring = res.complex.ring();
  const FreeComplex target = FreeComplex::concentrated(FreeModule(ring, {twist}), 0);
  const FreeComplex hom = hom_complex(res.complex, target);
  const HilbertTable h = homology_table(hom, {-j_range.hi, -j_range.lo}, window, threads);
  HilbertTable out;
  for (const auto& [key, e] : h.entries()) out.set(-key.first, key.second, e);
  return out;
}

// ---------------------------------------------------------------------------
// local duality

namespace {

std::vector<Poly> variables(const GradedRing& ring) {
  std::vector<Poly> v;
  for (std::size_t i = 0; i < ring.num_vars(); ++i) v.push_back(Poly::variable(ring, i));
  return v;
}

}  // namespace

LocalDualityReport local_duality_check(const ValidatedResolution& res, IndexRange i_range, DegreeWindow window,
                                       TowerParams params) {
  const GradedRing& ring = res.complex.ring();
  const int n = static_cast<int>(ring.num_vars());
  LocalDualityReport r;
  r.local_cohomology = local_cohomology_table(variables(ring), res.module, i_range, window, params);
  const HilbertTable ext =
      ext_table(res, -ring.weight_sum(), {n - i_range.hi, n - i_range.lo}, {-window.hi, -window.lo}, params.threads);
  for (const auto& [key, lc] : r.local_cohomology.entries()) {
    const auto [i, d] = key;
    const HilbertEntry& e = ext.at(n - i, -d);
    r.ext.set(i, d, e);
    if (!lc.stabilized) {
      r.result.excluded.push_back(key);
      continue;
    }
    ++r.result.compared;
    if (lc.dim != e.dim) r.result.mismatches.push_back(key);
  }
  r.result.passed = r.result.mismatches.empty();
  return r;
}

DualizingModuleReport dualizing_module_check(const GradedRing& ring, DegreeWindow window, TowerParams params) {
  const int n = static_cast<int>(ring.num_vars());
  DualizingModuleReport r;
  r.top_local_cohomology = local_cohomology_table(variables(ring), PresentedModule::free(ring), {n, n}, window, params);
  r.dual = matlis_dual_table(r.top_local_cohomology);
  const HilbertTable omega = hilbert_row(PresentedModule::free(ring, {-ring.weight_sum()}), {-window.hi, -window.lo});
  for (const auto& [key, e] : omega.entries()) r.omega.set(n, key.second, e);
  for (const auto& [key, e] : r.dual.entries()) {
    if (!e.stabilized) {
      r.result.excluded.push_back(key);
      continue;
    }
    ++r.result.compared;
    if (e.dim != r.omega.dim(n, key.second)) r.result.mismatches.push_back(key);
  }
  r.result.passed = r.result.mismatches.empty();
  return r;
}

// ---------------------------------------------------------------------------
// Greenlees-May adjunction

namespace {

/// Offsets of the summands of (P ⊗ Q)_u (keyed by the P index) or Hom(P, Q)_u.
std::map<int, std::size_t> summand_offsets(const FreeComplex& p, const FreeComplex& q, int u, bool hom) {
  std::map<int, std::size_t> off;
  std::size_t pos = 0;
  for (const auto& [s, ps] : p.terms()) {
    const std::size_t rq = q.term(hom ? s + u : u - s).rank();
    if (rq == 0) continue;
    off.emplace(s, pos);
    pos += ps.rank() * rq;
  }
  return off;
}

}  // namespace

ChainMap gm_adjunction_map(const FreeComplex& a, const FreeComplex& x, const FreeComplex& y) {
  const FreeComplex ax = tensor(a, x);
  const FreeComplex hay = hom_complex(a, y);
  const FreeComplex left = hom_complex(ax, y);
  const FreeComplex right = hom_complex(x, hay);
  std::map<int, GradedMap> comps;
  for (const auto& [i, li] : left.terms()) {
    const FreeModule ri = right.term(i);
    if (li.rank() != ri.rank()) throw InvariantViolation("adjunction sides have different ranks at index " + std::to_string(i));
    std::vector<Poly> entries(li.rank() * ri.rank(), Poly(a.ring()));
    const auto left_off = summand_offsets(ax, y, i, true);
    const auto right_off = summand_offsets(x, hay, i, true);
    for (const auto& [u, lu] : left_off) {
      const std::size_t ry = y.term(u + i).rank();
      const auto tensor_off = summand_offsets(a, x, u, false);
      for (const auto& [s, toff] : tensor_off) {
        const int t = u - s;
        const std::size_t ra = a.term(s).rank(), rx = x.term(t).rank();
        const int v = t + i;
        const std::size_t rh = hay.term(v).rank();
        const auto hay_off = summand_offsets(a, y, v, true);
        const std::size_t r_base = right_off.at(t);
        const std::size_t h_base = hay_off.at(s);
        const Poly sign = Poly::constant(a.ring(), ((s * t) % 2 == 0) ? 1 : -1);
        for (std::size_t al = 0; al < ra; ++al)
          for (std::size_t xi = 0; xi < rx; ++xi)
            for (std::size_t eta = 0; eta < ry; ++eta) {
              const std::size_t lpos = lu + (toff + al * rx + xi) * ry + eta;
              const std::size_t rpos = r_base + xi * rh + h_base + al * ry + eta;
              entries[rpos * li.rank() + lpos] = sign;
            }
      }
    }
    comps.emplace(i, GradedMap(li, ri, std::move(entries)));
  }
  return ChainMap(left, right, std::move(comps));
}

GmAdjunctionReport gm_adjunction_check(const std::vector<Poly>& gens, const FreeComplex& x, const FreeComplex& y,
                                       unsigned k_max, IndexRange i_range, DegreeWindow window, unsigned threads) {
  if (gens.empty()) throw EmptyGeneratorsError("ideal needs at least one generator");
  const FreeComplex a = stable_cech_truncated(gens.front().ring(), gens, k_max);
  GmAdjunctionReport r;
  const FreeComplex left = hom_complex(tensor(a, x), y);
  const FreeComplex right = hom_complex(x, hom_complex(a, y));
  std::optional<ChainMap> phi;
  try {
    phi = gm_adjunction_map(a, x, y);
    r.chain_map_valid = true;
  } catch (const ValidationError& e) {
    r.chain_map_error = e.what();
  }

  std::vector<std::pair<int, int>> cells;
  for (int i = i_range.lo; i <= i_range.hi; ++i)
    for (int d = window.lo; d <= window.hi; ++d) cells.emplace_back(i, d);
  std::vector<char> iso(cells.size(), 0);
  if (phi) {
    parallel_for(cells.size(), threads, [&](std::size_t c) {
      const ExactMatrix m = phi->component(cells[c].first).strand_matrix(cells[c].second);
      iso[c] = m.rows() == m.cols() && is_invertible(m);
    });
  }
  for (std::size_t c = 0; c < cells.size(); ++c)
    if (!iso[c]) r.non_isomorphic_cells.push_back(cells[c]);
  r.strandwise_isomorphism = phi.has_value() && r.non_isomorphic_cells.empty();

  r.left = homology_table(left, i_range, window, threads);
  r.right = homology_table(right, i_range, window, threads);
  for (const auto& [key, e] : r.left.entries())
    if (e.dim != r.right.dim(key.first, key.second)) r.homology_mismatches.push_back(key);
  r.homology_equal = r.homology_mismatches.empty();
  return r;
}

}  // namespace locoh
