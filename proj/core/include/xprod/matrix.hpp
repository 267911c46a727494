#pragma once

#include <optional>
#include <vector>

#include "xprod/field.hpp"

namespace xprod {

using Vec = std::vector<Scalar>;

class Matrix;
struct RrefForm;


Vec zero_vec(const Field& f, size_t n);
Vec unit_vec(const Field& f, size_t n, size_t i);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);

// Dense exact matrix.  Row-major storage; all entries share one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, size_t rows, size_t cols);
  static Matrix identity(const Field& f, size_t n);
  static Matrix from_rows(const Field& f, const std::vector<std::vector<int64_t>>& rows);
  static Matrix from_cols(const Field& f, size_t dim, const std::vector<Vec>& cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Field& field() const { return f_; }

  Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Vec apply(const Vec& v) const;  // M * v
  Vec col(size_t j) const;
  Vec row_vec(size_t i) const;
  void set_col(size_t j, const Vec& v);
  Matrix submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const;
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  // Deterministic reduced row echelon form: leftmost pivot column, first
  // nonzero row from the top.
  RrefForm rref() const;
  size_t rank() const;

  // Columns form the canonical basis of ker(M); cols() - rank(M) of them.
  Matrix nullspace_basis() const;

  // One solution of M x = rhs with free variables set to 0, if consistent.
  std::optional<Vec> solve(const Vec& rhs) const;
  std::optional<Matrix> solve_matrix(const Matrix& rhs) const;
  std::optional<Matrix> inverse() const;

  std::string to_string() const;

 private:
  Field f_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

struct RrefForm {
  Matrix m;
  std::vector<size_t> pivots;  // pivot column of each nonzero row, ascending
};

// Canonical basis of the column space: transpose of rref of the transpose.
// Unique for a given subspace, so usable for equality tests.
Matrix column_space(const Matrix& m);

}  // namespace xprod
