#pragma once

// Exact dense linear algebra over prime fields and the rationals.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace locoh {

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

/// Coefficient field: the rationals (characteristic 0) or Z/p for a prime p.
class FieldSpec {
 public:
  FieldSpec() = default;
  /// Throws std::invalid_argument unless characteristic is 0 or a prime.
  explicit FieldSpec(std::uint32_t characteristic);

  static FieldSpec rationals() { return FieldSpec(0); }

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_ = kDefaultCharacteristic;
};

bool is_prime(std::uint64_t n);

/// One field element, tagged with its field. Z/p residues live in [0, p);
/// rationals are kept in lowest terms with a positive denominator.
class Scalar {
 public:
  explicit Scalar(FieldSpec field = {});
  Scalar(FieldSpec field, long long value);

  static Scalar from_integer(FieldSpec field, const mpz_class& value);
  /// For Z/p the denominator must be invertible mod p.
  static Scalar from_rational(FieldSpec field, const mpq_class& value);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  std::uint32_t residue() const noexcept { return residue_; }
  const mpq_class& rational() const noexcept { return rational_; }

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Residue in [0, p) or "num" / "num/den".
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  std::uint32_t residue_ = 0;
  mpq_class rational_;
};

/// Dense row-major matrix over one field.
class ExactMatrix {
 public:
  ExactMatrix() : ExactMatrix(FieldSpec{}, 0, 0) {}
  ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(FieldSpec field, std::size_t n);
  /// Row-major integer entries, reduced into the field.
  static ExactMatrix from_integers(FieldSpec field, std::size_t rows, std::size_t cols,
                                   std::span<const long long> values);
  static ExactMatrix from_rows(FieldSpec field,
                               const std::vector<std::vector<long long>>& rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void set(std::size_t r, std::size_t c, long long value);
  bool is_zero_at(std::size_t r, std::size_t c) const;

  bool is_zero() const;
  ExactMatrix transpose() const;
  ExactMatrix select_columns(std::span<const std::size_t> columns) const;
  ExactMatrix block(std::size_t row, std::size_t col, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row, std::size_t col, const ExactMatrix& src);

  static ExactMatrix hstack(const ExactMatrix& left, const ExactMatrix& right);
  static ExactMatrix vstack(const ExactMatrix& top, const ExactMatrix& bottom);

  ExactMatrix operator-() const;
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  std::string to_string() const;

  // Storage is exposed to the elimination kernels only.
  using PrimeStorage = std::vector<std::uint32_t>;
  using RationalStorage = std::vector<mpq_class>;
  using Storage = std::variant<PrimeStorage, RationalStorage>;
  const Storage& storage() const noexcept { return data_; }
  Storage& storage() noexcept { return data_; }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  Storage data_;
};

struct RrefResult {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

RrefResult rref_with_pivots(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
/// Columns form a basis of the right kernel {v : m v = 0}.
ExactMatrix kernel_basis(const ExactMatrix& m);
/// The pivot columns of m, a basis of its column space.
ExactMatrix column_space_basis(const ExactMatrix& m);
/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);
bool is_invertible(const ExactMatrix& m);

/// A subquotient U/W of k^ambient_dim with W ⊆ U, plus a deterministic basis of
/// U/W given by coset representatives.
class StrandSpace {
 public:
  StrandSpace() : StrandSpace(FieldSpec{}, 0) {}
  /// The whole space k^ambient_dim (U = everything, W = 0).
  StrandSpace(FieldSpec field, std::size_t ambient_dim);

  /// k^ambient_dim / span(sub). Coset representatives are the standard basis
  /// vectors at the non-pivot coordinates of the reduced sub-basis.
  static StrandSpace quotient(FieldSpec field, std::size_t ambient_dim, const ExactMatrix& sub);
  /// span(super) / span(sub). Throws WellDefinednessError unless sub ⊆ super.
  static StrandSpace subquotient(const ExactMatrix& super, const ExactMatrix& sub);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return reps_.cols(); }
  const ExactMatrix& sub_basis() const noexcept { return sub_; }
  const ExactMatrix& super_basis() const noexcept { return super_; }
  const ExactMatrix& coset_reps() const noexcept { return reps_; }

  /// Coordinates (dim() x k) of the given ambient column vectors modulo W.
  /// Throws WellDefinednessError if some column is not in U.
  ExactMatrix coordinates(const ExactMatrix& vectors) const;
  bool contains_in_super(const ExactMatrix& vectors) const;
  bool contains_in_sub(const ExactMatrix& vectors) const;

 private:
  struct Solver;
  const Solver& solver() const;

  FieldSpec field_;
  std::size_t ambient_dim_ = 0;
  ExactMatrix sub_;
  ExactMatrix super_;
  ExactMatrix reps_;
  bool full_quotient_ = false;  // U is the whole ambient space
  std::shared_ptr<Solver> solver_;
};

/// Matrix (dst.dim() x src.dim()) of the map U_src/W_src -> U_dst/W_dst induced by
/// `ambient`. Throws WellDefinednessError if ambient(U_src) ⊄ U_dst or
/// ambient(W_src) ⊄ W_dst.
ExactMatrix induced_map(const StrandSpace& src, const StrandSpace& dst, const ExactMatrix& ambient);

}  // namespace locoh
