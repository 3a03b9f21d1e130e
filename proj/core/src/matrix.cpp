#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "field_ops.hpp"
#include "locoh/errors.hpp"
#include "locoh/exactla.hpp"

namespace locoh {

using detail::dispatch;

namespace {

void require_same_field(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
  if (a.field() != b.field())
    throw FieldMismatchError(std::string(op) + ": matrices over " + a.field().name() + " and " +
                             b.field().name());
}

template <class Storage>
Storage& same_storage(ExactMatrix& m, const Storage&) {
  return std::get<Storage>(m.storage());
}

template <class Storage>
const Storage& same_storage(const ExactMatrix& m, const Storage&) {
  return std::get<Storage>(m.storage());
}

// In-place Gauss-Jordan elimination of a rows x cols row-major block restricted
// to the first `limit` columns for pivot search. Returns pivot columns.
template <class Ops, class Storage>
std::vector<std::size_t> eliminate(const Ops& ops, Storage& a, std::size_t rows, std::size_t cols,
                                   std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit && row < rows; ++col) {
    std::size_t found = rows;
    for (std::size_t r = row; r < rows; ++r) {
      if (!ops.is_zero(a[r * cols + col])) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;
    if (found != row)
      for (std::size_t c = col; c < cols; ++c) std::swap(a[found * cols + c], a[row * cols + c]);

    auto* prow = &a[row * cols];
    const auto inv = ops.inv(prow[col]);
    support.clear();
    for (std::size_t c = col; c < cols; ++c) {
      if (!ops.is_zero(prow[c])) {
        prow[c] = ops.mul(prow[c], inv);
        support.push_back(c);
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row) continue;
      auto* target = &a[r * cols];
      if (ops.is_zero(target[col])) continue;
      const auto factor = target[col];
      for (std::size_t c : support) target[c] = ops.fms(target[c], factor, prow[c]);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> detail::eliminate_in_place(ExactMatrix& m, std::size_t pivot_limit) {
  return dispatch(m, [&](const auto& ops, auto& a) {
    return eliminate(ops, a, m.rows(), m.cols(), std::min(pivot_limit, m.cols()));
  });
}

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_rational())
    data_ = RationalStorage(rows * cols);
  else
    data_ = PrimeStorage(rows * cols, 0u);
}

ExactMatrix ExactMatrix::identity(FieldSpec field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ExactMatrix ExactMatrix::from_integers(FieldSpec field, std::size_t rows, std::size_t cols,
                                       std::span<const long long> values) {
  if (values.size() != rows * cols)
    throw std::invalid_argument("from_integers: expected " + std::to_string(rows * cols) +
                                " entries, got " + std::to_string(values.size()));
  ExactMatrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, values[r * cols + c]);
  return m;
}

ExactMatrix ExactMatrix::from_rows(FieldSpec field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(field, rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < ncols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Scalar ExactMatrix::at(std::size_t r, std::size_t c) const {
  if (field_.is_rational())
    return Scalar::from_rational(field_, std::get<RationalStorage>(data_)[r * cols_ + c]);
  return Scalar(field_, std::get<PrimeStorage>(data_)[r * cols_ + c]);
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (value.field() != field_)
    throw FieldMismatchError("set: scalar over " + value.field().name() + " into matrix over " +
                             field_.name());
  if (field_.is_rational())
    std::get<RationalStorage>(data_)[r * cols_ + c] = value.rational();
  else
    std::get<PrimeStorage>(data_)[r * cols_ + c] = value.residue();
}

void ExactMatrix::set(std::size_t r, std::size_t c, long long value) {
  set(r, c, Scalar(field_, value));
}

bool ExactMatrix::is_zero_at(std::size_t r, std::size_t c) const {
  return dispatch(*this, [&](const auto& ops, const auto& a) { return ops.is_zero(a[r * cols_ + c]); });
}

bool ExactMatrix::is_zero() const {
  return dispatch(*this, [](const auto& ops, const auto& a) {
    return std::all_of(a.begin(), a.end(), [&](const auto& x) { return ops.is_zero(x); });
  });
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  dispatch(*this, [&](const auto&, const auto& a) {
    auto& b = same_storage(t, a);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) b[c * rows_ + r] = a[r * cols_ + c];
  });
  return t;
}

ExactMatrix ExactMatrix::select_columns(std::span<const std::size_t> columns) const {
  ExactMatrix out(field_, rows_, columns.size());
  dispatch(*this, [&](const auto&, const auto& a) {
    auto& b = same_storage(out, a);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < columns.size(); ++j)
        b[r * columns.size() + j] = a[r * cols_ + columns[j]];
  });
  return out;
}

ExactMatrix ExactMatrix::block(std::size_t row, std::size_t col, std::size_t nrows,
                               std::size_t ncols) const {
  if (row + nrows > rows_ || col + ncols > cols_) throw std::out_of_range("block out of range");
  ExactMatrix out(field_, nrows, ncols);
  dispatch(*this, [&](const auto&, const auto& a) {
    auto& b = same_storage(out, a);
    for (std::size_t r = 0; r < nrows; ++r)
      for (std::size_t c = 0; c < ncols; ++c) b[r * ncols + c] = a[(row + r) * cols_ + col + c];
  });
  return out;
}

void ExactMatrix::set_block(std::size_t row, std::size_t col, const ExactMatrix& src) {
  require_same_field(*this, src, "set_block");
  if (row + src.rows_ > rows_ || col + src.cols_ > cols_)
    throw std::out_of_range("set_block out of range");
  dispatch(src, [&](const auto&, const auto& s) {
    auto& b = same_storage(*this, s);
    for (std::size_t r = 0; r < src.rows_; ++r)
      for (std::size_t c = 0; c < src.cols_; ++c)
        b[(row + r) * cols_ + col + c] = s[r * src.cols_ + c];
  });
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& left, const ExactMatrix& right) {
  require_same_field(left, right, "hstack");
  if (left.rows_ != right.rows_) throw std::invalid_argument("hstack: row counts differ");
  ExactMatrix out(left.field_, left.rows_, left.cols_ + right.cols_);
  out.set_block(0, 0, left);
  out.set_block(0, left.cols_, right);
  return out;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& top, const ExactMatrix& bottom) {
  require_same_field(top, bottom, "vstack");
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("vstack: column counts differ");
  ExactMatrix out(top.field_, top.rows_ + bottom.rows_, top.cols_);
  out.set_block(0, 0, top);
  out.set_block(top.rows_, 0, bottom);
  return out;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix out = *this;
  dispatch(out, [](const auto& ops, auto& a) {
    for (auto& x : a) x = ops.neg(x);
  });
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b, "multiply");
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("multiply: shapes " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " and " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_));
  ExactMatrix out(a.field_, a.rows_, b.cols_);
  const std::size_t n = a.rows_, m = a.cols_, q = b.cols_;
  if (a.field_.is_rational()) {
    const auto& x = std::get<ExactMatrix::RationalStorage>(a.data_);
    const auto& y = std::get<ExactMatrix::RationalStorage>(b.data_);
    auto& z = std::get<ExactMatrix::RationalStorage>(out.data_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        const auto& f = x[i * m + k];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < q; ++j)
          if (sgn(y[k * q + j]) != 0) z[i * q + j] += f * y[k * q + j];
      }
  } else {
    const std::uint64_t p = a.field_.characteristic();
    const auto& x = std::get<ExactMatrix::PrimeStorage>(a.data_);
    const auto& y = std::get<ExactMatrix::PrimeStorage>(b.data_);
    auto& z = std::get<ExactMatrix::PrimeStorage>(out.data_);
    std::vector<std::uint64_t> acc(q);
    const std::uint64_t budget = std::max<std::uint64_t>(1, (UINT64_MAX - p) / ((p - 1) * (p - 1)) - 1);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      std::uint64_t terms = 0;
      for (std::size_t k = 0; k < m; ++k) {
        const std::uint64_t f = x[i * m + k];
        if (f == 0) continue;
        for (std::size_t j = 0; j < q; ++j) acc[j] += f * y[k * q + j];
        if (++terms == budget) {
          for (auto& v : acc) v %= p;
          terms = 0;
        }
      }
      for (std::size_t j = 0; j < q; ++j) z[i * q + j] = static_cast<std::uint32_t>(acc[j] % p);
    }
  }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b, "add");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("add: shape mismatch");
  ExactMatrix out = a;
  dispatch(out, [&](const auto& ops, auto& z) {
    const auto& y = same_storage(b, z);
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = ops.add(z[i], y[i]);
  });
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return a + (-b); }

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << at(r, c).to_string();
    out << "]";
  }
  out << "]";
  return out.str();
}

RrefResult rref_with_pivots(const ExactMatrix& m) {
  ExactMatrix reduced = m;
  auto pivots = dispatch(reduced, [&](const auto& ops, auto& a) {
    return eliminate(ops, a, m.rows(), m.cols(), m.cols());
  });
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const ExactMatrix& m) {
  // Eliminate on the shorter side.
  if (m.rows() > m.cols()) return rref_with_pivots(m.transpose()).rank();
  return rref_with_pivots(m).rank();
}

ExactMatrix kernel_basis(const ExactMatrix& m) {
  const auto [reduced, pivots] = rref_with_pivots(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  ExactMatrix basis(m.field(), m.cols(), free_cols.size());
  dispatch(reduced, [&](const auto& ops, const auto& r) {
    auto& b = same_storage(basis, r);
    const std::size_t nk = free_cols.size();
    for (std::size_t j = 0; j < nk; ++j) {
      const std::size_t f = free_cols[j];
      b[f * nk + j] = ops.one();
      for (std::size_t i = 0; i < pivots.size(); ++i)
        b[pivots[i] * nk + j] = ops.neg(r[i * m.cols() + f]);
    }
  });
  return basis;
}

ExactMatrix column_space_basis(const ExactMatrix& m) {
  const auto pivots = rref_with_pivots(m).pivots;
  return m.select_columns(pivots);
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b, "solve");
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row counts differ");
  ExactMatrix aug = ExactMatrix::hstack(a, b);
  const std::size_t n = a.cols();
  auto pivots = dispatch(aug, [&](const auto& ops, auto& s) {
    return eliminate(ops, s, aug.rows(), aug.cols(), aug.cols());
  });
  if (!pivots.empty() && pivots.back() >= n) return std::nullopt;
  ExactMatrix x(a.field(), n, b.cols());
  dispatch(aug, [&](const auto&, const auto& s) {
    auto& xs = same_storage(x, s);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        xs[pivots[i] * b.cols() + j] = s[i * aug.cols() + n + j];
  });
  return x;
}

bool is_invertible(const ExactMatrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

}  // namespace locoh
