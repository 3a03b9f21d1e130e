#pragma once

// Element-level field operations used by the dense kernels. Internal header.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "locoh/exactla.hpp"

namespace locoh::detail {

struct PrimeOps {
  using Elem = std::uint32_t;
  using Storage = ExactMatrix::PrimeStorage;

  std::uint32_t p;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    const std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(std::uint64_t{a} * b % p);
  }
  Elem inv(Elem a) const {
    std::uint64_t result = 1;
    std::uint64_t base = a;
    std::uint64_t e = p - 2;
    while (e > 0) {
      if (e & 1u) result = result * base % p;
      base = base * base % p;
      e >>= 1u;
    }
    return static_cast<Elem>(result);
  }
  // a - f*b
  Elem fms(Elem a, Elem f, Elem b) const {
    return static_cast<Elem>((std::uint64_t{a} + std::uint64_t{p - f} * b) % p);
  }
};

struct RationalOps {
  using Elem = mpq_class;
  using Storage = ExactMatrix::RationalStorage;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return 1 / a; }
  Elem fms(const Elem& a, const Elem& f, const Elem& b) const { return a - f * b; }
};

/// Calls fn(ops, storage) with the field-specific operations and storage.
template <class Fn>
decltype(auto) dispatch(ExactMatrix& m, Fn&& fn) {
  if (m.field().is_rational())
    return fn(RationalOps{}, std::get<ExactMatrix::RationalStorage>(m.storage()));
  return fn(PrimeOps{m.field().characteristic()}, std::get<ExactMatrix::PrimeStorage>(m.storage()));
}

template <class Fn>
decltype(auto) dispatch(const ExactMatrix& m, Fn&& fn) {
  if (m.field().is_rational())
    return fn(RationalOps{}, std::get<ExactMatrix::RationalStorage>(m.storage()));
  return fn(PrimeOps{m.field().characteristic()},
            std::get<ExactMatrix::PrimeStorage>(m.storage()));
}

/// Gauss-Jordan elimination in place, searching pivots only among the first
/// `pivot_limit` columns. Returns the pivot columns.
std::vector<std::size_t> eliminate_in_place(ExactMatrix& m, std::size_t pivot_limit);

}  // namespace locoh::detail
