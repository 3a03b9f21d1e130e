#include <mutex>

#include "field_ops.hpp"
#include "locoh/errors.hpp"
#include "locoh/exactla.hpp"

namespace locoh {

namespace {

struct ReducedBasis {
  ExactMatrix basis;  // columns, reduced echelon form when read as rows
  std::vector<std::size_t> pivots;
};

// Reduced echelon basis of the column span of `vectors`.
ReducedBasis reduced_column_basis(const ExactMatrix& vectors) {
  ExactMatrix rows = vectors.transpose();
  auto pivots = detail::eliminate_in_place(rows, rows.cols());
  ExactMatrix top = rows.block(0, 0, pivots.size(), rows.cols());
  return {top.transpose(), std::move(pivots)};
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& pivots, std::size_t n) {
  std::vector<bool> taken(n, false);
  for (auto p : pivots) taken[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n; ++j)
    if (!taken[j]) out.push_back(j);
  return out;
}

}  // namespace

// Row operations E with E * [reps | sub] = [I; 0]. The first dim(U) rows of E
// give coordinates, the rest cut out U.
struct StrandSpace::Solver {
  std::once_flag once;
  ExactMatrix left_inverse;
  ExactMatrix annihilator;
};

StrandSpace::StrandSpace(FieldSpec field, std::size_t ambient_dim)
    : field_(field),
      ambient_dim_(ambient_dim),
      sub_(field, ambient_dim, 0),
      super_(ExactMatrix::identity(field, ambient_dim)),
      reps_(ExactMatrix::identity(field, ambient_dim)),
      full_quotient_(true),
      solver_(std::make_shared<Solver>()) {}

StrandSpace StrandSpace::quotient(FieldSpec field, std::size_t ambient_dim, const ExactMatrix& sub) {
  if (sub.rows() != ambient_dim)
    throw std::invalid_argument("quotient: sub vectors have wrong length");
  if (sub.field() != field) throw FieldMismatchError("quotient: field mismatch");
  StrandSpace s(field, ambient_dim);
  if (sub.cols() == 0 || sub.is_zero()) return s;
  auto reduced = reduced_column_basis(sub);
  const auto free = complement(reduced.pivots, ambient_dim);
  s.sub_ = std::move(reduced.basis);
  s.reps_ = ExactMatrix::identity(field, ambient_dim).select_columns(free);
  return s;
}

StrandSpace StrandSpace::subquotient(const ExactMatrix& super, const ExactMatrix& sub) {
  if (super.rows() != sub.rows())
    throw std::invalid_argument("subquotient: ambient dimensions differ");
  if (super.field() != sub.field()) throw FieldMismatchError("subquotient: field mismatch");
  const FieldSpec field = super.field();
  const std::size_t n = super.rows();

  auto u = reduced_column_basis(super);
  if (u.pivots.size() == n) return quotient(field, n, sub);

  StrandSpace s(field, n);
  s.full_quotient_ = false;
  s.super_ = u.basis;
  if (sub.cols() == 0 || sub.is_zero()) {
    s.sub_ = ExactMatrix(field, n, 0);
    s.reps_ = u.basis;
    return s;
  }
  auto w = reduced_column_basis(sub);
  auto in_u = solve(u.basis, w.basis);
  if (!in_u) throw WellDefinednessError("subquotient: sub space is not contained in super space");
  ExactMatrix coords = in_u->transpose();
  auto pivots = detail::eliminate_in_place(coords, coords.cols());
  s.sub_ = std::move(w.basis);
  s.reps_ = u.basis.select_columns(complement(pivots, u.basis.cols()));
  return s;
}

const StrandSpace::Solver& StrandSpace::solver() const {
  std::call_once(solver_->once, [this] {
    const ExactMatrix t = ExactMatrix::hstack(reps_, sub_);
    const std::size_t k = t.cols();
    ExactMatrix aug = ExactMatrix::hstack(t, ExactMatrix::identity(field_, ambient_dim_));
    const auto pivots = detail::eliminate_in_place(aug, k);
    if (pivots.size() != k)
      throw InvariantViolation("strand space basis is not linearly independent");
    solver_->left_inverse = aug.block(0, k, k, ambient_dim_);
    solver_->annihilator = aug.block(k, k, ambient_dim_ - k, ambient_dim_);
  });
  return *solver_;
}

ExactMatrix StrandSpace::coordinates(const ExactMatrix& vectors) const {
  if (vectors.rows() != ambient_dim_)
    throw std::invalid_argument("coordinates: vectors have wrong length");
  if (full_quotient_ && sub_.cols() == 0) return vectors;
  const auto& sv = solver();
  if (!full_quotient_ && !(sv.annihilator * vectors).is_zero())
    throw WellDefinednessError("vector does not lie in the super space");
  return (sv.left_inverse * vectors).block(0, 0, dim(), vectors.cols());
}

bool StrandSpace::contains_in_super(const ExactMatrix& vectors) const {
  if (full_quotient_) return true;
  return (solver().annihilator * vectors).is_zero();
}

bool StrandSpace::contains_in_sub(const ExactMatrix& vectors) const {
  if (vectors.cols() == 0) return true;
  if (sub_.cols() == 0) return vectors.is_zero();
  if (!contains_in_super(vectors)) return false;
  return (solver().left_inverse * vectors).block(0, 0, dim(), vectors.cols()).is_zero();
}

ExactMatrix induced_map(const StrandSpace& src, const StrandSpace& dst, const ExactMatrix& ambient) {
  if (ambient.rows() != dst.ambient_dim() || ambient.cols() != src.ambient_dim())
    throw std::invalid_argument("induced_map: ambient matrix has shape " +
                                std::to_string(ambient.rows()) + "x" +
                                std::to_string(ambient.cols()) + ", expected " +
                                std::to_string(dst.ambient_dim()) + "x" +
                                std::to_string(src.ambient_dim()));
  if (src.sub_basis().cols() > 0 && !dst.contains_in_sub(ambient * src.sub_basis()))
    throw WellDefinednessError("induced_map: image of the sub space leaves the target sub space");
  if (src.dim() == 0) return ExactMatrix(dst.field(), dst.dim(), 0);
  const ExactMatrix image = ambient * src.coset_reps();
  if (!dst.contains_in_super(image))
    throw WellDefinednessError("induced_map: image leaves the target super space");
  return dst.coordinates(image);
}

}  // namespace locoh
