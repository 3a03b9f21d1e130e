#include <vector>

#include "locoh/chain.hpp"
#include "locoh/errors.hpp"
#include "locoh/parallel.hpp"

namespace locoh {

namespace {

bool is_unit_module(const PresentedModule& m) {
  return m.is_free() && m.generators().rank() == 1 && m.generators().twist(0) == 0;
}

std::vector<std::size_t> coefficient_offsets(const FreeModule& f, const PresentedModule& m, int d) {
  std::vector<std::size_t> off(f.rank() + 1, 0);
  for (std::size_t j = 0; j < f.rank(); ++j) off[j + 1] = off[j] + m.strand(d + f.twist(j)).dim();
  return off;
}

}  // namespace

std::size_t term_strand_dim(const ModuleComplex& c, int i, int d) {
  return coefficient_offsets(c.frame.term(i), c.coefficients, d).back();
}

ExactMatrix tensor_strand_matrix(const GradedMap& map, const PresentedModule& m, int d) {
  if (map.internal_degree() != 0) throw std::invalid_argument("tensor_strand_matrix: map must have degree 0");
  if (is_unit_module(m)) return map.strand_matrix(d);
  const auto col_off = coefficient_offsets(map.source(), m, d);
  const auto row_off = coefficient_offsets(map.target(), m, d);
  ExactMatrix out(m.ring().field(), row_off.back(), col_off.back());
  for (std::size_t i = 0; i < map.target().rank(); ++i) {
    if (row_off[i + 1] == row_off[i]) continue;
    for (std::size_t j = 0; j < map.source().rank(); ++j) {
      const Poly& e = map.entry(i, j);
      if (e.is_zero() || col_off[j + 1] == col_off[j]) continue;
      out.set_block(row_off[i], col_off[j],
                    m.mult_operator(e, d + map.source().twist(j), d + map.target().twist(i)));
    }
  }
  return out;
}

ExactMatrix strand_differential(const ModuleComplex& c, int i, int d) {
  return tensor_strand_matrix(c.frame.differential(i), c.coefficients, d);
}

StrandSpace homology_strand(const ModuleComplex& c, int i, int d) {
  const FieldSpec& field = c.frame.ring().field();
  const std::size_t n = term_strand_dim(c, i, d);
  if (n == 0) return StrandSpace(field, 0);
  const ExactMatrix out = strand_differential(c, i, d);
  const ExactMatrix in = strand_differential(c, i + 1, d);
  if (out.rows() == 0 || out.is_zero()) return StrandSpace::quotient(field, n, in);
  return StrandSpace::subquotient(kernel_basis(out), in);
}

StrandSpace homology_strand(const FreeComplex& c, int i, int d) {
  return homology_strand(ModuleComplex::of(c), i, d);
}

ExactMatrix induced_homology_map(const ChainMap& f, const PresentedModule& m, int i, int d,
                                 const StrandSpace& source_h, const StrandSpace& target_h) {
  return induced_map(source_h, target_h, tensor_strand_matrix(f.component(i), m, d));
}

ExactMatrix induced_homology_map(const ChainMap& f, const PresentedModule& m, int i, int d) {
  return induced_homology_map(f, m, i, d, homology_strand(tensor(f.source(), m), i, d),
                              homology_strand(tensor(f.target(), m), i, d));
}

HilbertTable homology_table(const ModuleComplex& c, IndexRange range, DegreeWindow window,
                            unsigned threads) {
  std::vector<std::pair<int, int>> cells;
  for (int i = range.lo; i <= range.hi; ++i)
    for (int d = window.lo; d <= window.hi; ++d) cells.emplace_back(i, d);
  std::vector<std::size_t> dims(cells.size(), 0);
  parallel_for(cells.size(), threads, [&](std::size_t k) {
    dims[k] = homology_strand(c, cells[k].first, cells[k].second).dim();
  });
  HilbertTable t;
  for (std::size_t k = 0; k < cells.size(); ++k)
    t.set(cells[k].first, cells[k].second, {static_cast<std::int64_t>(dims[k]), true, 0});
  return t;
}

HilbertTable homology_table(const FreeComplex& c, IndexRange range, DegreeWindow window,
                            unsigned threads) {
  return homology_table(ModuleComplex::of(c), range, window, threads);
}

QuasiIsoReport quasi_iso_check(const ChainMap& f, const PresentedModule& m, IndexRange range,
                               DegreeWindow window) {
  const ModuleComplex src = tensor(f.source(), m);
  const ModuleComplex dst = tensor(f.target(), m);
  QuasiIsoReport report;
  for (int i = range.lo; i <= range.hi; ++i)
    for (int d = window.lo; d <= window.hi; ++d) {
      const StrandSpace hs = homology_strand(src, i, d);
      const StrandSpace ht = homology_strand(dst, i, d);
      std::size_t r = 0;
      if (hs.dim() > 0 && ht.dim() > 0) r = rank(induced_homology_map(f, m, i, d, hs, ht));
      if (hs.dim() != ht.dim() || r != hs.dim()) {
        report.is_quasi_isomorphism = false;
        report.failures.push_back({i, d, hs.dim(), ht.dim(), r});
      }
    }
  return report;
}

QuasiIsoReport quasi_iso_check(const ChainMap& f, IndexRange range, DegreeWindow window) {
  return quasi_iso_check(f, PresentedModule::free(f.source().ring()), range, window);
}

}  // namespace locoh
