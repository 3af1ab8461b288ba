#include "hodgesplit/linalg.hpp"

#include <algorithm>
#include <ostream>

#include "hodgesplit/errors.hpp"

namespace hodgesplit::linalg {

Matrix::Matrix(const FieldCtx& ctx, std::size_t rows, std::size_t cols)
    : ctx_(&ctx), rows_(rows), cols_(cols), data_(rows * cols, ctx.zero()) {}

Matrix Matrix::identity(const FieldCtx& ctx, std::size_t n) {
  Matrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ctx.one();
  return m;
}

Matrix Matrix::from_columns(const FieldCtx& ctx, std::size_t rows, std::span<const Vector> columns) {
  Matrix m(ctx, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw PreconditionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_ints(const FieldCtx& ctx, std::size_t rows, std::size_t cols,
                         std::span<const long long> entries) {
  if (entries.size() != rows * cols) throw PreconditionError("entry count mismatch");
  Matrix m(ctx, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = ctx.from_int(entries[i]);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(*ctx_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw PreconditionError("matrix shape mismatch");
  Matrix out(*ctx_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElement& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw PreconditionError("vector length mismatch");
  Vector out(rows_, ctx_->zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

Matrix Matrix::scaled(const FieldElement& s) const {
  Matrix out = *this;
  for (auto& e : out.data_) e *= s;
  return out;
}

Matrix Matrix::pow(std::size_t e) const {
  if (rows_ != cols_) throw PreconditionError("pow of a non-square matrix");
  Matrix result = identity(*ctx_, rows_);
  Matrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const FieldElement& e) { return e.is_zero(); });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? ctx_->one() : ctx_->zero())) return false;
  return true;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return ctx_ == rhs.ctx_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
  return os;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const FieldElement inv = m(row, col).inv();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const FieldElement f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) { return rref(m).size(); }

std::size_t rank_of(const FieldCtx& ctx, std::size_t dim, std::span<const Vector> vectors) {
  EchelonBasis basis(ctx, dim);
  for (const auto& v : vectors) basis.insert(v);
  return basis.size();
}

std::vector<Vector> kernel(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.ctx(), m.cols());
    v[free] = m.ctx().one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw PreconditionError("right-hand side length mismatch");
  Matrix aug(m.ctx(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.ctx(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.ctx(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = m.ctx().one();
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw PreconditionError("matrix is singular");
  Matrix inv(m.ctx(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

Vector zero_vector(const FieldCtx& ctx, std::size_t n) { return Vector(n, ctx.zero()); }

Vector unit_vector(const FieldCtx& ctx, std::size_t n, std::size_t i) {
  Vector v = zero_vector(ctx, n);
  v.at(i) = ctx.one();
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& e) { return e.is_zero(); });
}

EchelonBasis::EchelonBasis(const FieldCtx& ctx, std::size_t dim) : ctx_(&ctx), dim_(dim) {}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != dim_) throw PreconditionError("vector length mismatch in echelon basis");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const FieldElement f = v[pivots_[k]];
    if (f.is_zero()) continue;
    const Vector& row = rows_[k];
    for (std::size_t i = pivots_[k]; i < dim_; ++i) v[i] -= f * row[i];
  }
  return v;
}

bool EchelonBasis::insert(const Vector& v) {
  Vector r = reduce(v);
  std::size_t piv = 0;
  while (piv < dim_ && r[piv].is_zero()) ++piv;
  if (piv == dim_) return false;
  const FieldElement inv = r[piv].inv();
  for (std::size_t i = piv; i < dim_; ++i) r[i] *= inv;
  // Keep the stored rows fully reduced at the new pivot.
  for (auto& row : rows_) {
    const FieldElement f = row[piv];
    if (f.is_zero()) continue;
    for (std::size_t i = piv; i < dim_; ++i) row[i] -= f * r[i];
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

}  // namespace hodgesplit::linalg
