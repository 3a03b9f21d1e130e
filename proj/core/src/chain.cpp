#include <stdexcept>

#include "locoh/chain.hpp"
#include "locoh/errors.hpp"

namespace locoh {

namespace {

/// Row-major polynomial matrix filled block by block, then frozen into a GradedMap.
class MapBuilder {
 public:
  MapBuilder(FreeModule source, FreeModule target)
      : source_(std::move(source)),
        target_(std::move(target)),
        entries_(source_.rank() * target_.rank(), Poly(source_.ring())) {}

  void add(std::size_t row, std::size_t col, const Poly& p) {
    if (!p.is_zero()) entries_[row * source_.rank() + col] += p;
  }

  /// Adds sign * m at the given block offset.
  void add_block(std::size_t row, std::size_t col, const GradedMap& m, int sign = 1) {
    for (std::size_t i = 0; i < m.target().rank(); ++i)
      for (std::size_t j = 0; j < m.source().rank(); ++j) {
        const Poly& e = m.entry(i, j);
        if (!e.is_zero()) add(row + i, col + j, sign < 0 ? -e : e);
      }
  }

  GradedMap build() && { return GradedMap(std::move(source_), std::move(target_), std::move(entries_)); }

 private:
  FreeModule source_;
  FreeModule target_;
  std::vector<Poly> entries_;
};

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

std::vector<int> support(const FreeComplex& x) {
  std::vector<int> s;
  for (const auto& [i, m] : x.terms()) s.push_back(i);
  return s;
}

std::string index_text(int i) { return std::to_string(i); }

}  // namespace

// ---------------------------------------------------------------------------
// FreeComplex

FreeComplex::FreeComplex(GradedRing ring, std::map<int, FreeModule> terms,
                         std::map<int, GradedMap> differentials)
    : ring_(std::move(ring)) {
  for (auto& [i, m] : terms) {
    if (!(m.ring() == ring_)) throw ValidationError("term " + index_text(i) + " lives over another ring");
    if (m.rank() > 0) terms_.emplace(i, std::move(m));
  }
  for (auto& [i, f] : differentials) {
    if (f.internal_degree() != 0)
      throw ValidationError("differential " + index_text(i) + " has nonzero internal degree");
    if (!(f.source() == term(i)) || !(f.target() == term(i - 1)))
      throw ValidationError("differential " + index_text(i) + " does not map term " + index_text(i) +
                            " to term " + index_text(i - 1));
    if (!f.is_zero()) differentials_.emplace(i, std::move(f));
  }
  for (const auto& [i, f] : differentials_) {
    auto next = differentials_.find(i - 1);
    if (next == differentials_.end()) continue;
    if (!(next->second * f).is_zero())
      throw ValidationError("d∘d != 0 at index " + index_text(i));
  }
}

FreeComplex FreeComplex::concentrated(const FreeModule& module, int index) {
  return FreeComplex(module.ring(), {{index, module}});
}

FreeComplex FreeComplex::unit(const GradedRing& ring) { return concentrated(FreeModule(ring, {0}), 0); }

int FreeComplex::min_index() const { return terms_.empty() ? 1 : terms_.begin()->first; }
int FreeComplex::max_index() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

FreeModule FreeComplex::term(int i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? FreeModule(ring_) : it->second;
}

GradedMap FreeComplex::differential(int i) const {
  auto it = differentials_.find(i);
  return it == differentials_.end() ? GradedMap::zero(term(i), term(i - 1)) : it->second;
}

// ---------------------------------------------------------------------------
// ChainMap

ChainMap::ChainMap(FreeComplex source, FreeComplex target, std::map<int, GradedMap> components)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!(source_.ring() == target_.ring())) throw ValidationError("chain map between different rings");
  for (auto& [i, f] : components) {
    if (f.internal_degree() != 0)
      throw ValidationError("chain map component " + index_text(i) + " has nonzero internal degree");
    if (!(f.source() == source_.term(i)) || !(f.target() == target_.term(i)))
      throw ValidationError("chain map component " + index_text(i) + " has the wrong shape");
    if (!f.is_zero()) components_.emplace(i, std::move(f));
  }
  std::vector<int> indices = support(source_);
  for (int i : support(target_)) indices.push_back(i + 1);
  for (int i : indices) {
    const GradedMap lhs = target_.differential(i) * component(i);
    const GradedMap rhs = component(i - 1) * source_.differential(i);
    if (!(lhs == rhs)) throw ValidationError("chain map does not commute with differentials at index " + index_text(i));
  }
}

ChainMap ChainMap::identity(const FreeComplex& x) {
  std::map<int, GradedMap> c;
  for (const auto& [i, m] : x.terms()) c.emplace(i, GradedMap::identity(m));
  return ChainMap(x, x, std::move(c));
}

ChainMap ChainMap::zero(const FreeComplex& source, const FreeComplex& target) {
  return ChainMap(source, target, {});
}

GradedMap ChainMap::component(int i) const {
  auto it = components_.find(i);
  return it == components_.end() ? GradedMap::zero(source_.term(i), target_.term(i)) : it->second;
}

ChainMap operator*(const ChainMap& g, const ChainMap& f) {
  std::map<int, GradedMap> c;
  for (const auto& [i, m] : f.source_.terms()) c.emplace(i, g.component(i) * f.component(i));
  return ChainMap(f.source_, g.target_, std::move(c));
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
  std::map<int, GradedMap> c;
  for (const auto& [i, m] : a.source_.terms()) c.emplace(i, a.component(i) + b.component(i));
  return ChainMap(a.source_, a.target_, std::move(c));
}

bool operator==(const ChainMap& a, const ChainMap& b) {
  if (!(a.source_.terms() == b.source_.terms()) || !(a.target_.terms() == b.target_.terms())) return false;
  for (const auto& [i, m] : a.source_.terms())
    if (!(a.component(i) == b.component(i))) return false;
  return true;
}

ModuleComplex ModuleComplex::of(const FreeComplex& x) {
  return {x, PresentedModule::free(x.ring())};
}

ModuleComplex ModuleComplex::of(const PresentedModule& m) {
  return {FreeComplex::unit(m.ring()), m};
}

// ---------------------------------------------------------------------------
// shift, cone, direct sums

FreeComplex shift(const FreeComplex& x, int n) {
  std::map<int, FreeModule> terms;
  std::map<int, GradedMap> diffs;
  for (const auto& [i, m] : x.terms()) {
    terms.emplace(i + n, m);
    GradedMap d = x.differential(i);
    diffs.emplace(i + n, parity_sign(n) < 0 ? -d : d);
  }
  return FreeComplex(x.ring(), std::move(terms), std::move(diffs));
}

ChainMap shift(const ChainMap& f, int n) {
  std::map<int, GradedMap> c;
  for (const auto& [i, m] : f.source().terms()) c.emplace(i + n, f.component(i));
  return ChainMap(shift(f.source(), n), shift(f.target(), n), std::move(c));
}

FreeComplex cone(const ChainMap& f) {
  const FreeComplex& x = f.source();
  const FreeComplex& y = f.target();
  const GradedRing& ring = x.ring();
  std::vector<int> indices;
  for (int i : support(x)) indices.push_back(i + 1);
  for (int i : support(y)) indices.push_back(i);

  std::map<int, FreeModule> terms;
  for (int i : indices) terms.emplace(i, FreeModule::direct_sum(x.term(i - 1), y.term(i)));
  auto term = [&](int i) {
    auto it = terms.find(i);
    return it == terms.end() ? FreeModule(ring) : it->second;
  };
  std::map<int, GradedMap> diffs;
  for (const auto& [i, m] : terms) {
    MapBuilder b(m, term(i - 1));
    const std::size_t xr = x.term(i - 1).rank();
    const std::size_t xr_target = x.term(i - 2).rank();
    b.add_block(0, 0, x.differential(i - 1), -1);
    b.add_block(xr_target, 0, f.component(i - 1));
    b.add_block(xr_target, xr, y.differential(i));
    diffs.emplace(i, std::move(b).build());
  }
  return FreeComplex(ring, std::move(terms), std::move(diffs));
}

FreeComplex direct_sum(const FreeComplex& x, const FreeComplex& y) {
  std::map<int, FreeModule> terms;
  for (int i : support(x)) terms.emplace(i, FreeModule::direct_sum(x.term(i), y.term(i)));
  for (int i : support(y)) terms.emplace(i, FreeModule::direct_sum(x.term(i), y.term(i)));
  std::map<int, GradedMap> diffs;
  for (const auto& [i, m] : terms) {
    MapBuilder b(m, FreeModule::direct_sum(x.term(i - 1), y.term(i - 1)));
    b.add_block(0, 0, x.differential(i));
    b.add_block(x.term(i - 1).rank(), x.term(i).rank(), y.differential(i));
    diffs.emplace(i, std::move(b).build());
  }
  return FreeComplex(x.ring(), std::move(terms), std::move(diffs));
}

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
  FreeComplex source = direct_sum(f.source(), g.source());
  FreeComplex target = direct_sum(f.target(), g.target());
  std::map<int, GradedMap> c;
  for (const auto& [i, m] : source.terms()) {
    MapBuilder b(m, target.term(i));
    b.add_block(0, 0, f.component(i));
    b.add_block(f.target().term(i).rank(), f.source().term(i).rank(), g.component(i));
    c.emplace(i, std::move(b).build());
  }
  return ChainMap(std::move(source), std::move(target), std::move(c));
}

// ---------------------------------------------------------------------------
// tensor

namespace {

/// Position of each (s, t) summand inside (X⊗Y)_i.
struct TensorLayout {
  std::map<int, std::size_t> offset;  // keyed by s
};

TensorLayout tensor_layout(const FreeComplex& x, const FreeComplex& y, int i) {
  TensorLayout l;
  std::size_t pos = 0;
  for (const auto& [s, xs] : x.terms()) {
    const FreeModule yt = y.term(i - s);
    if (yt.rank() == 0) continue;
    l.offset.emplace(s, pos);
    pos += xs.rank() * yt.rank();
  }
  return l;
}

FreeModule tensor_term(const FreeComplex& x, const FreeComplex& y, int i) {
  std::vector<int> twists;
  for (const auto& [s, xs] : x.terms()) {
    const FreeModule yt = y.term(i - s);
    for (int a : xs.twists())
      for (int b : yt.twists()) twists.push_back(a + b);
  }
  return FreeModule(x.ring(), std::move(twists));
}

std::vector<int> sum_indices(const FreeComplex& x, const FreeComplex& y) {
  std::vector<int> out;
  for (int s : support(x))
    for (int t : support(y)) out.push_back(s + t);
  return out;
}

}  // namespace

FreeComplex tensor(const FreeComplex& x, const FreeComplex& y) {
  if (!(x.ring() == y.ring())) throw ValidationError("tensor of complexes over different rings");
  std::map<int, FreeModule> terms;
  for (int i : sum_indices(x, y)) terms.emplace(i, tensor_term(x, y, i));
  auto term = [&](int i) {
    auto it = terms.find(i);
    return it == terms.end() ? FreeModule(x.ring()) : it->second;
  };
  std::map<int, GradedMap> diffs;
  for (const auto& [i, m] : terms) {
    MapBuilder b(m, term(i - 1));
    const TensorLayout src = tensor_layout(x, y, i);
    const TensorLayout dst = tensor_layout(x, y, i - 1);
    for (const auto& [s, off] : src.offset) {
      const int t = i - s;
      const std::size_t ry = y.term(t).rank();
      const std::size_t rx = x.term(s).rank();
      // ∂x ⊗ y into summand (s-1, t)
      if (auto it = dst.offset.find(s - 1); it != dst.offset.end()) {
        const GradedMap dx = x.differential(s);
        for (std::size_t xi = 0; xi < rx; ++xi)
          for (std::size_t xo = 0; xo < dx.target().rank(); ++xo) {
            const Poly& e = dx.entry(xo, xi);
            if (e.is_zero()) continue;
            for (std::size_t eta = 0; eta < ry; ++eta) b.add(it->second + xo * ry + eta, off + xi * ry + eta, e);
          }
      }
      // (-1)^s x ⊗ ∂y into summand (s, t-1)
      if (auto it = dst.offset.find(s); it != dst.offset.end()) {
        const GradedMap dy = y.differential(t);
        const std::size_t ry_out = dy.target().rank();
        for (std::size_t eta = 0; eta < ry; ++eta)
          for (std::size_t eo = 0; eo < ry_out; ++eo) {
            const Poly& e = dy.entry(eo, eta);
            if (e.is_zero()) continue;
            const Poly signed_e = parity_sign(s) < 0 ? -e : e;
            for (std::size_t xi = 0; xi < rx; ++xi) b.add(it->second + xi * ry_out + eo, off + xi * ry + eta, signed_e);
          }
      }
    }
    diffs.emplace(i, std::move(b).build());
  }
  return FreeComplex(x.ring(), std::move(terms), std::move(diffs));
}

ChainMap tensor(const ChainMap& f, const ChainMap& g) {
  FreeComplex source = tensor(f.source(), g.source());
  FreeComplex target = tensor(f.target(), g.target());
  std::map<int, GradedMap> c;
  for (const auto& [i, m] : source.terms()) {
    MapBuilder b(m, target.term(i));
    const TensorLayout src = tensor_layout(f.source(), g.source(), i);
    const TensorLayout dst = tensor_layout(f.target(), g.target(), i);
    for (const auto& [s, off] : src.offset) {
      auto it = dst.offset.find(s);
      if (it == dst.offset.end()) continue;
      const GradedMap fs = f.component(s);
      const GradedMap gt = g.component(i - s);
      const std::size_t ry = gt.source().rank(), ry_out = gt.target().rank();
      for (std::size_t xo = 0; xo < fs.target().rank(); ++xo)
        for (std::size_t xi = 0; xi < fs.source().rank(); ++xi) {
          const Poly& a = fs.entry(xo, xi);
          if (a.is_zero()) continue;
          for (std::size_t eo = 0; eo < ry_out; ++eo)
            for (std::size_t eta = 0; eta < ry; ++eta) {
              const Poly& bb = gt.entry(eo, eta);
              if (!bb.is_zero()) b.add(it->second + xo * ry_out + eo, off + xi * ry + eta, a * bb);
            }
        }
    }
    c.emplace(i, std::move(b).build());
  }
  return ChainMap(std::move(source), std::move(target), std::move(c));
}

ModuleComplex tensor(const FreeComplex& x, const PresentedModule& m) { return {x, m}; }

ModuleComplex tensor(const FreeComplex& x, const ModuleComplex& y) {
  return {tensor(x, y.frame), y.coefficients};
}

// ---------------------------------------------------------------------------
// Hom

namespace {

/// Hom(X,Y)_i summands Hom(X_s, Y_{s+i}) keyed by s.
TensorLayout hom_layout(const FreeComplex& x, const FreeComplex& y, int i) {
  TensorLayout l;
  std::size_t pos = 0;
  for (const auto& [s, xs] : x.terms()) {
    const FreeModule yt = y.term(s + i);
    if (yt.rank() == 0) continue;
    l.offset.emplace(s, pos);
    pos += xs.rank() * yt.rank();
  }
  return l;
}

FreeModule hom_term(const FreeComplex& x, const FreeComplex& y, int i) {
  std::vector<int> twists;
  for (const auto& [s, xs] : x.terms()) {
    const FreeModule yt = y.term(s + i);
    for (int a : xs.twists())
      for (int b : yt.twists()) twists.push_back(b - a);
  }
  return FreeModule(x.ring(), std::move(twists));
}

}  // namespace

FreeComplex hom_complex(const FreeComplex& x, const FreeComplex& y) {
  if (!(x.ring() == y.ring())) throw ValidationError("Hom of complexes over different rings");
  std::map<int, FreeModule> terms;
  for (int s : support(x))
    for (int t : support(y)) terms.emplace(t - s, hom_term(x, y, t - s));
  auto term = [&](int i) {
    auto it = terms.find(i);
    return it == terms.end() ? FreeModule(x.ring()) : it->second;
  };
  std::map<int, GradedMap> diffs;
  for (const auto& [i, m] : terms) {
    MapBuilder b(m, term(i - 1));
    const TensorLayout src = hom_layout(x, y, i);
    const TensorLayout dst = hom_layout(x, y, i - 1);
    for (const auto& [s, off] : src.offset) {
      const std::size_t rx = x.term(s).rank();
      const std::size_t ry = y.term(s + i).rank();
      // ∂^Y ∘ g lands in Hom(X_s, Y_{s+i-1})
      if (auto it = dst.offset.find(s); it != dst.offset.end()) {
        const GradedMap dy = y.differential(s + i);
        const std::size_t ry_out = dy.target().rank();
        for (std::size_t eta = 0; eta < ry; ++eta)
          for (std::size_t eo = 0; eo < ry_out; ++eo) {
            const Poly& e = dy.entry(eo, eta);
            if (e.is_zero()) continue;
            for (std::size_t xi = 0; xi < rx; ++xi) b.add(it->second + xi * ry_out + eo, off + xi * ry + eta, e);
          }
      }
      // -(-1)^i g ∘ ∂^X lands in Hom(X_{s+1}, Y_{s+i})
      if (auto it = dst.offset.find(s + 1); it != dst.offset.end()) {
        const GradedMap dx = x.differential(s + 1);
        const std::size_t rx_in = dx.source().rank();
        for (std::size_t xi = 0; xi < rx; ++xi)
          for (std::size_t xn = 0; xn < rx_in; ++xn) {
            const Poly& e = dx.entry(xi, xn);
            if (e.is_zero()) continue;
            const Poly signed_e = parity_sign(i) > 0 ? -e : e;
            for (std::size_t eta = 0; eta < ry; ++eta) b.add(it->second + xn * ry + eta, off + xi * ry + eta, signed_e);
          }
      }
    }
    diffs.emplace(i, std::move(b).build());
  }
  return FreeComplex(x.ring(), std::move(terms), std::move(diffs));
}

FreeComplex dual(const FreeComplex& x) { return hom_complex(x, FreeComplex::unit(x.ring())); }

ModuleComplex hom_complex(const FreeComplex& x, const PresentedModule& m) { return {dual(x), m}; }

ModuleComplex hom_complex(const FreeComplex& x, const ModuleComplex& y) {
  return {hom_complex(x, y.frame), y.coefficients};
}

}  // namespace locoh
