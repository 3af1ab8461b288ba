#pragma once

// Dense matrices over a finite field with exact Gaussian elimination.
// Pivoting is deterministic: the first nonzero entry in column order.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "hodgesplit/gf.hpp"

namespace hodgesplit::linalg {

using gf::FieldCtx;
using gf::FieldElement;
using Vector = std::vector<FieldElement>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldCtx& ctx, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldCtx& ctx, std::size_t n);
  static Matrix from_columns(const FieldCtx& ctx, std::size_t rows, std::span<const Vector> columns);
  /// Row-major integer entries, mapped into the field.
  static Matrix from_ints(const FieldCtx& ctx, std::size_t rows, std::size_t cols,
                          std::span<const long long> entries);

  const FieldCtx& ctx() const { return *ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  std::vector<Vector> columns() const;
  Matrix transpose() const;

  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  Matrix scaled(const FieldElement& s) const;
  Matrix pow(std::size_t e) const;

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& rhs) const;

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

 private:
  const FieldCtx* ctx_ = nullptr;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

std::size_t rank(Matrix m);
/// Rank of the span of a list of vectors of equal length.
std::size_t rank_of(const FieldCtx& ctx, std::size_t dim, std::span<const Vector> vectors);
/// Basis of the null space, one vector per free column, in column order.
std::vector<Vector> kernel(const Matrix& m);
/// Some x with m * x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Throws PreconditionError when m is singular.
Matrix inverse(const Matrix& m);

Vector zero_vector(const FieldCtx& ctx, std::size_t n);
Vector unit_vector(const FieldCtx& ctx, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

/// An incrementally built basis kept in reduced echelon form.  The pivot of a
/// vector is its first nonzero coordinate; every stored vector has pivot
/// coefficient 1 and is zero at the pivots of the others.
class EchelonBasis {
 public:
  EchelonBasis(const FieldCtx& ctx, std::size_t dim);

  /// Reduces `v` against the stored vectors.
  Vector reduce(Vector v) const;
  /// Adds `v` if it is independent of the stored vectors; returns whether it was added.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }

  std::size_t size() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Vector>& vectors() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  const FieldCtx* ctx_;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hodgesplit::linalg
