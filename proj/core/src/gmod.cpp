#include <mutex>
#include <stdexcept>
#include <tuple>

#include "locoh/errors.hpp"
#include "locoh/gmod.hpp"

namespace locoh {

// ---------------------------------------------------------------------------
// FreeModule

FreeModule::FreeModule(GradedRing ring, std::vector<int> twists)
    : ring_(std::move(ring)), twists_(std::move(twists)) {}

std::size_t FreeModule::strand_dim(int d) const {
  std::size_t n = 0;
  for (int a : twists_) n += ring_.strand_dim(d + a);
  return n;
}

std::vector<std::size_t> FreeModule::strand_offsets(int d) const {
  std::vector<std::size_t> offsets(twists_.size() + 1, 0);
  for (std::size_t j = 0; j < twists_.size(); ++j)
    offsets[j + 1] = offsets[j] + ring_.strand_dim(d + twists_[j]);
  return offsets;
}

FreeModule FreeModule::direct_sum(const FreeModule& a, const FreeModule& b) {
  if (!(a.ring_ == b.ring_)) throw std::invalid_argument("direct_sum: different rings");
  std::vector<int> t = a.twists_;
  t.insert(t.end(), b.twists_.begin(), b.twists_.end());
  return FreeModule(a.ring_, std::move(t));
}

// ---------------------------------------------------------------------------
// GradedMap

GradedMap::GradedMap(FreeModule source, FreeModule target, std::vector<Poly> entries,
                     int internal_degree)
    : source_(std::move(source)),
      target_(std::move(target)),
      entries_(std::move(entries)),
      degree_(internal_degree) {
  if (!(source_.ring() == target_.ring())) throw std::invalid_argument("GradedMap: different rings");
  if (entries_.size() != source_.rank() * target_.rank())
    throw std::invalid_argument("GradedMap: expected " +
                                std::to_string(source_.rank() * target_.rank()) + " entries, got " +
                                std::to_string(entries_.size()));
  for (std::size_t i = 0; i < target_.rank(); ++i) {
    for (std::size_t j = 0; j < source_.rank(); ++j) {
      const Poly& e = entry(i, j);
      if (!(e.ring() == source_.ring())) throw std::invalid_argument("GradedMap: entry from another ring");
      if (e.is_zero()) continue;
      const int expected = degree_ + target_.twist(i) - source_.twist(j);
      const auto deg = e.degree();
      if (!deg || *deg != expected)
        throw NonHomogeneousError("GradedMap entry (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") '" + e.to_string() + "' should be homogeneous of degree " +
                                  std::to_string(expected));
    }
  }
}

GradedMap GradedMap::zero(FreeModule source, FreeModule target, int internal_degree) {
  std::vector<Poly> entries(source.rank() * target.rank(), Poly(source.ring()));
  return GradedMap(std::move(source), std::move(target), std::move(entries), internal_degree);
}

GradedMap GradedMap::identity(const FreeModule& module) {
  std::vector<Poly> entries(module.rank() * module.rank(), Poly(module.ring()));
  for (std::size_t j = 0; j < module.rank(); ++j)
    entries[j * module.rank() + j] = Poly::constant(module.ring(), 1);
  return GradedMap(module, module, std::move(entries), 0);
}

bool GradedMap::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

ExactMatrix GradedMap::strand_matrix(int d) const {
  const auto col_off = source_.strand_offsets(d);
  const auto row_off = target_.strand_offsets(d + degree_);
  ExactMatrix m(source_.ring().field(), row_off.back(), col_off.back());
  for (std::size_t i = 0; i < target_.rank(); ++i) {
    if (row_off[i + 1] == row_off[i]) continue;
    for (std::size_t j = 0; j < source_.rank(); ++j) {
      const Poly& e = entry(i, j);
      if (e.is_zero() || col_off[j + 1] == col_off[j]) continue;
      m.set_block(row_off[i], col_off[j],
                  mult_matrix(e, d + source_.twist(j), d + degree_ + target_.twist(i)));
    }
  }
  return m;
}

GradedMap operator*(const GradedMap& g, const GradedMap& f) {
  if (!(f.target_ == g.source_)) throw std::invalid_argument("compose: target/source mismatch");
  const std::size_t rows = g.target_.rank(), mid = f.target_.rank(), cols = f.source_.rank();
  std::vector<Poly> entries(rows * cols, Poly(f.source_.ring()));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < mid; ++k) {
      const Poly& a = g.entry(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        const Poly& b = f.entry(k, j);
        if (!b.is_zero()) entries[i * cols + j] += a * b;
      }
    }
  return GradedMap(f.source_, g.target_, std::move(entries), f.degree_ + g.degree_);
}

GradedMap operator+(const GradedMap& a, const GradedMap& b) {
  if (!(a.source_ == b.source_) || !(a.target_ == b.target_) || a.degree_ != b.degree_)
    throw std::invalid_argument("GradedMap add: shape mismatch");
  std::vector<Poly> entries = a.entries_;
  for (std::size_t k = 0; k < entries.size(); ++k) entries[k] += b.entries_[k];
  return GradedMap(a.source_, a.target_, std::move(entries), a.degree_);
}

GradedMap GradedMap::operator-() const {
  std::vector<Poly> entries;
  entries.reserve(entries_.size());
  for (const auto& e : entries_) entries.push_back(-e);
  return GradedMap(source_, target_, std::move(entries), degree_);
}

bool operator==(const GradedMap& a, const GradedMap& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.degree_ == b.degree_ &&
         a.entries_ == b.entries_;
}

// ---------------------------------------------------------------------------
// PresentedModule

struct PresentedModule::Impl {
  explicit Impl(GradedMap p) : presentation(std::move(p)) {}

  GradedMap presentation;
  bool free = true;

  mutable std::mutex mutex;
  mutable std::map<int, std::unique_ptr<StrandSpace>> strands;
  mutable std::map<std::tuple<std::string, int, int>, ExactMatrix> mult_cache;
};

PresentedModule::PresentedModule(GradedMap presentation)
    : impl_(std::make_shared<Impl>(std::move(presentation))) {
  if (impl_->presentation.internal_degree() != 0)
    throw std::invalid_argument("presentation must have internal degree 0");
  impl_->free = impl_->presentation.is_zero();
}

PresentedModule PresentedModule::free(const FreeModule& generators) {
  return PresentedModule(GradedMap::zero(FreeModule(generators.ring()), generators));
}

PresentedModule PresentedModule::free(const GradedRing& ring, std::vector<int> twists) {
  return free(FreeModule(ring, std::move(twists)));
}

PresentedModule PresentedModule::from_relations(const GradedRing& ring, std::vector<int> target_twists,
                                                const std::vector<std::vector<Poly>>& relations) {
  const std::size_t rows = target_twists.size();
  std::size_t cols = 0;
  if (!relations.empty()) {
    if (relations.size() != rows)
      throw std::invalid_argument("relations: expected " + std::to_string(rows) +
                                  " rows (one per generator), got " + std::to_string(relations.size()));
    cols = relations.front().size();
    for (const auto& row : relations)
      if (row.size() != cols) throw std::invalid_argument("relations: ragged rows");
  }
  std::vector<int> source_twists(cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      const Poly& e = relations[i][j];
      if (e.is_zero()) continue;
      source_twists[j] = target_twists[i] - e.homogeneous_degree();
      break;
    }
  }
  std::vector<Poly> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) entries.push_back(relations[i][j]);
  return PresentedModule(GradedMap(FreeModule(ring, std::move(source_twists)),
                                   FreeModule(ring, std::move(target_twists)), std::move(entries)));
}

const GradedRing& PresentedModule::ring() const noexcept { return impl_->presentation.target().ring(); }
const GradedMap& PresentedModule::presentation() const noexcept { return impl_->presentation; }
bool PresentedModule::is_free() const noexcept { return impl_->free; }

const StrandSpace& PresentedModule::strand(int d) const {
  {
    std::lock_guard lock(impl_->mutex);
    auto it = impl_->strands.find(d);
    if (it != impl_->strands.end()) return *it->second;
  }
  const FreeModule& f0 = generators();
  auto space = std::make_unique<StrandSpace>(ring().field(), f0.strand_dim(d));
  if (!impl_->free)
    *space = StrandSpace::quotient(ring().field(), f0.strand_dim(d),
                                   impl_->presentation.strand_matrix(d));
  std::lock_guard lock(impl_->mutex);
  return *impl_->strands.emplace(d, std::move(space)).first->second;
}

ExactMatrix PresentedModule::mult_operator(const Poly& f, int d) const {
  if (f.is_zero()) {
    const std::size_t n = strand(d).dim();
    return ExactMatrix(ring().field(), n, n);
  }
  return mult_operator(f, d, d + f.homogeneous_degree());
}

ExactMatrix PresentedModule::mult_operator(const Poly& f, int d, int target) const {
  if (!f.is_zero() && f.homogeneous_degree() != target - d)
    throw NonHomogeneousError("mult_operator: '" + f.to_string() + "' does not have degree " +
                              std::to_string(target - d));
  const StrandSpace& src = strand(d);
  const StrandSpace& dst = strand(target);
  if (f.is_zero() || src.dim() == 0 || dst.dim() == 0)
    return ExactMatrix(ring().field(), dst.dim(), src.dim());

  auto key = std::make_tuple(f.to_string(), d, target);
  {
    std::lock_guard lock(impl_->mutex);
    auto it = impl_->mult_cache.find(key);
    if (it != impl_->mult_cache.end()) return it->second;
  }
  const FreeModule& f0 = generators();
  const auto col_off = f0.strand_offsets(d);
  const auto row_off = f0.strand_offsets(target);
  ExactMatrix ambient(ring().field(), row_off.back(), col_off.back());
  for (std::size_t l = 0; l < f0.rank(); ++l)
    ambient.set_block(row_off[l], col_off[l], mult_matrix(f, d + f0.twist(l), target + f0.twist(l)));
  ExactMatrix result = impl_->free ? std::move(ambient) : induced_map(src, dst, ambient);
  std::lock_guard lock(impl_->mutex);
  impl_->mult_cache.emplace(std::move(key), result);
  return result;
}

const StrandSpace& strand(const PresentedModule& m, int d) { return m.strand(d); }

ExactMatrix mult_operator(const PresentedModule& m, const Poly& f, int d) {
  return m.mult_operator(f, d);
}

StrandSpace annihilator_strand(const PresentedModule& m, const Poly& f, int d) {
  const StrandSpace& md = m.strand(d);
  const ExactMatrix kernel = kernel_basis(m.mult_operator(f, d));
  const ExactMatrix lifted = md.coset_reps() * kernel;
  return StrandSpace::subquotient(ExactMatrix::hstack(lifted, md.sub_basis()), md.sub_basis());
}

// ---------------------------------------------------------------------------
// HilbertTable

const HilbertEntry* HilbertTable::find(int i, int d) const {
  auto it = entries_.find({i, d});
  return it == entries_.end() ? nullptr : &it->second;
}

const HilbertEntry& HilbertTable::at(int i, int d) const {
  const auto* e = find(i, d);
  if (!e)
    throw std::out_of_range("HilbertTable has no entry (" + std::to_string(i) + ", " +
                            std::to_string(d) + ")");
  return *e;
}

bool HilbertTable::all_stabilized() const {
  for (const auto& [key, e] : entries_)
    if (!e.stabilized) return false;
  return true;
}

HilbertTable hilbert_row(const PresentedModule& m, DegreeWindow window) {
  HilbertTable t;
  for (int d = window.lo; d <= window.hi; ++d)
    t.set(0, d, {static_cast<std::int64_t>(m.strand(d).dim()), true, 0});
  return t;
}

}  // namespace locoh
