#pragma once

// Weighted-graded polynomial rings k[x1..xn], their monomial strand bases and
// multiplication matrices between strands.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locoh/exactla.hpp"

namespace locoh {

using Exponents = std::vector<int>;

/// k[x1..xn] with positive integer weights. Cheap to copy; copies share the
/// strand-basis cache, which is safe to use from several threads.
class GradedRing {
 public:
  GradedRing(FieldSpec field, std::vector<std::string> var_names, std::vector<int> weights);
  /// All weights 1.
  GradedRing(FieldSpec field, std::vector<std::string> var_names);

  const FieldSpec& field() const noexcept;
  std::size_t num_vars() const noexcept;
  const std::vector<std::string>& var_names() const noexcept;
  const std::vector<int>& weights() const noexcept;
  int weight_sum() const noexcept;
  std::optional<std::size_t> var_index(std::string_view name) const;

  int degree(const Exponents& e) const;

  /// Monomials of weighted degree d in graded-lex order (x1 > x2 > ...);
  /// empty for d < 0. This order is the coordinate basis of R_d everywhere.
  const std::vector<Exponents>& monomial_basis(int d) const;
  /// Position of e inside monomial_basis(degree(e)).
  std::size_t monomial_index(const Exponents& e) const;
  std::size_t strand_dim(int d) const { return monomial_basis(d).size(); }

  /// Same field, names and weights.
  friend bool operator==(const GradedRing& a, const GradedRing& b);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Graded-lex comparison: higher weighted degree first, then lexicographically
/// larger exponent vector first.
struct GradedLexGreater {
  std::vector<int> weights;
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Polynomial with coefficients in the ring's field; zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Exponents, Scalar>;

  explicit Poly(GradedRing ring);

  static Poly constant(const GradedRing& ring, long long c);
  static Poly constant(const GradedRing& ring, const Scalar& c);
  static Poly monomial(const GradedRing& ring, Exponents e, const Scalar& c);
  static Poly variable(const GradedRing& ring, std::size_t index);

  const GradedRing& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Weighted degree of a nonzero homogeneous polynomial.
  std::optional<int> degree() const;
  /// Like degree() but throws NonHomogeneousError for zero or mixed degrees.
  int homogeneous_degree() const;

  Poly pow(unsigned exponent) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  /// Canonical text form, terms in graded-lex order, e.g. "x^2*y - 3*y^3".
  /// For Z/p coefficients are printed as residues in [0, p).
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Scalar& c);

  GradedRing ring_;
  Terms terms_;
};

/// Grammar: [sign] term ((+|-) term)*, term := factor (* factor)*,
/// factor := integer [/ integer] | variable [^ integer]. Whitespace ignored.
/// Throws ParseError / UnknownVariableError with the byte position.
Poly parse_poly(const GradedRing& ring, std::string_view src);

/// Multiplication by homogeneous f from R_d to R_{d + deg f} in monomial bases.
/// The zero polynomial gives the zero map R_d -> R_d.
ExactMatrix mult_matrix(const Poly& f, int d);
/// Multiplication by f (zero or homogeneous of degree target - d) from R_d to R_target.
ExactMatrix mult_matrix(const Poly& f, int d, int target);

}  // namespace locoh
