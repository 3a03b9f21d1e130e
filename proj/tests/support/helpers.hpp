#pragma once

#include <random>
#include <string>
#include <vector>

#include "locoh/locoh.hpp"

namespace th {

inline locoh::GradedRing ring(std::vector<std::string> vars, std::uint32_t p = locoh::kDefaultCharacteristic) {
  return locoh::GradedRing(locoh::FieldSpec(p), std::move(vars));
}

inline locoh::Poly P(const locoh::GradedRing& r, const std::string& text) { return locoh::parse_poly(r, text); }

inline std::vector<locoh::Poly> polys(const locoh::GradedRing& r, const std::vector<std::string>& texts) {
  return locoh::parse_generators(r, texts);
}

/// R / (relations) as a cyclic module.
inline locoh::PresentedModule cyclic(const locoh::GradedRing& r, const std::vector<std::string>& relations) {
  if (relations.empty()) return locoh::PresentedModule::free(r);
  return locoh::PresentedModule::from_relations(r, {0}, {polys(r, relations)});
}

inline locoh::ExactMatrix random_matrix(std::mt19937& rng, locoh::FieldSpec f, std::size_t rows, std::size_t cols,
                                        int density_percent = 60) {
  locoh::ExactMatrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (static_cast<int>(rng() % 100) < density_percent) m.set(i, j, static_cast<long long>(rng() % 7) - 3);
  return m;
}

}  // namespace th
