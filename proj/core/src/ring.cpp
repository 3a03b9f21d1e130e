#include <mutex>
#include <set>
#include <stdexcept>

#include "locoh/gring.hpp"

namespace locoh {

struct GradedRing::Impl {
  struct Basis {
    std::vector<Exponents> monomials;
    std::map<Exponents, std::size_t> index;
  };

  FieldSpec field;
  std::vector<std::string> names;
  std::vector<int> weights;
  int weight_sum = 0;

  mutable std::mutex mutex;
  mutable std::map<int, std::unique_ptr<Basis>> cache;

  const Basis& basis(int d) const {
    std::lock_guard lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return *it->second;
    auto b = std::make_unique<Basis>();
    if (d >= 0) {
      Exponents e(weights.size(), 0);
      enumerate(0, d, e, b->monomials);
      for (std::size_t i = 0; i < b->monomials.size(); ++i) b->index.emplace(b->monomials[i], i);
    }
    return *cache.emplace(d, std::move(b)).first->second;
  }

  // Exponent of variable v runs from high to low, giving graded-lex order.
  void enumerate(std::size_t v, int remaining, Exponents& e, std::vector<Exponents>& out) const {
    if (v + 1 == weights.size()) {
      if (remaining % weights[v] == 0) {
        e[v] = remaining / weights[v];
        out.push_back(e);
        e[v] = 0;
      }
      return;
    }
    for (int a = remaining / weights[v]; a >= 0; --a) {
      e[v] = a;
      enumerate(v + 1, remaining - a * weights[v], e, out);
    }
    e[v] = 0;
  }
};

GradedRing::GradedRing(FieldSpec field, std::vector<std::string> var_names, std::vector<int> weights)
    : impl_(std::make_shared<Impl>()) {
  if (var_names.empty()) throw std::invalid_argument("ring needs at least one variable");
  if (weights.size() != var_names.size())
    throw std::invalid_argument("ring: " + std::to_string(var_names.size()) + " variables but " +
                                std::to_string(weights.size()) + " weights");
  std::set<std::string> seen;
  for (const auto& name : var_names) {
    if (name.empty()) throw std::invalid_argument("ring: empty variable name");
    if (!seen.insert(name).second)
      throw std::invalid_argument("ring: duplicate variable '" + name + "'");
  }
  for (int w : weights)
    if (w < 1) throw std::invalid_argument("ring: weights must be positive");
  impl_->field = field;
  impl_->names = std::move(var_names);
  impl_->weights = std::move(weights);
  for (int w : impl_->weights) impl_->weight_sum += w;
}

GradedRing::GradedRing(FieldSpec field, std::vector<std::string> var_names)
    : GradedRing(field, var_names, std::vector<int>(var_names.size(), 1)) {}

const FieldSpec& GradedRing::field() const noexcept { return impl_->field; }
std::size_t GradedRing::num_vars() const noexcept { return impl_->names.size(); }
const std::vector<std::string>& GradedRing::var_names() const noexcept { return impl_->names; }
const std::vector<int>& GradedRing::weights() const noexcept { return impl_->weights; }
int GradedRing::weight_sum() const noexcept { return impl_->weight_sum; }

std::optional<std::size_t> GradedRing::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < impl_->names.size(); ++i)
    if (impl_->names[i] == name) return i;
  return std::nullopt;
}

int GradedRing::degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * impl_->weights[i];
  return d;
}

const std::vector<Exponents>& GradedRing::monomial_basis(int d) const {
  return impl_->basis(d).monomials;
}

std::size_t GradedRing::monomial_index(const Exponents& e) const {
  const auto& b = impl_->basis(degree(e));
  auto it = b.index.find(e);
  if (it == b.index.end()) throw std::invalid_argument("monomial_index: not a monomial of this ring");
  return it->second;
}

bool operator==(const GradedRing& a, const GradedRing& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->field == b.impl_->field && a.impl_->names == b.impl_->names &&
         a.impl_->weights == b.impl_->weights;
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    da += a[i] * weights[i];
    db += b[i] * weights[i];
  }
  if (da != db) return da > db;
  return a > b;
}

}  // namespace locoh
