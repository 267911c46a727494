#include "xprod/matrix.hpp"

#include <sstream>

#include "xprod/errors.hpp"

namespace xprod {

Vec zero_vec(const Field& f, size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(const Field& f, size_t n, size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = Scalar::one(f);
  return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeMismatch("vector sizes differ");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeMismatch("vector sizes differ");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Matrix::Matrix(const Field& f, size_t rows, size_t cols)
    : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, size_t n) {
  Matrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<int64_t>>& rows) {
  size_t nc = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), nc);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw ShapeMismatch("ragged row list");
    for (size_t j = 0; j < nc; ++j) m.at(i, j) = Scalar::of(f, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_cols(const Field& f, size_t dim, const std::vector<Vec>& cols) {
  Matrix m(f, dim, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix addition");
  Matrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix subtraction");
  Matrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ShapeMismatch("matrix product");
  check_same_field(f_, o.f_);
  Matrix m(f_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (!y.is_zero()) m.at(i, j) += x * y;
      }
    }
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m = *this;
  for (auto& x : m.a_) x *= c;
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(f_ == o.f_)) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!(a_[i] == o.a_[i])) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(f_, rows_);
}

Matrix Matrix::transpose() const {
  Matrix m(f_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw ShapeMismatch("matrix apply");
  Vec r = zero_vec(f_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Vec Matrix::col(size_t j) const {
  Vec v = zero_vec(f_, rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::row_vec(size_t i) const {
  Vec v = zero_vec(f_, cols_);
  for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Matrix::set_col(size_t j, const Vec& v) {
  if (v.size() != rows_) throw ShapeMismatch("set_col");
  for (size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const {
  Matrix m(f_, nr, nc);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
  return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("hstack");
  Matrix m(a.field(), a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw ShapeMismatch("vstack");
  Matrix m(a.field(), a.rows() + b.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

RrefForm Matrix::rref() const {
  RrefForm out{*this, {}};
  Matrix& m = out.m;
  size_t pr = 0;
  for (size_t c = 0; c < cols_ && pr < rows_; ++c) {
    size_t sel = pr;
    while (sel < rows_ && m.at(sel, c).is_zero()) ++sel;
    if (sel == rows_) continue;
    if (sel != pr)
      for (size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(pr, j));
    Scalar inv = m.at(pr, c).inverse();
    for (size_t j = c; j < cols_; ++j) m.at(pr, j) *= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == pr || m.at(i, c).is_zero()) continue;
      Scalar factor = m.at(i, c);
      for (size_t j = c; j < cols_; ++j) m.at(i, j) -= factor * m.at(pr, j);
    }
    out.pivots.push_back(c);
    ++pr;
  }
  return out;
}

Matrix Matrix::nullspace_basis() const {
  RrefForm r = rref();
  std::vector<size_t> free_cols;
  {
    size_t pi = 0;
    for (size_t c = 0; c < cols_; ++c) {
      if (pi < r.pivots.size() && r.pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Matrix basis(f_, cols_, free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    size_t fc = free_cols[k];
    basis.at(fc, k) = Scalar::one(f_);
    for (size_t i = 0; i < r.pivots.size(); ++i)
      basis.at(r.pivots[i], k) = -r.m.at(i, fc);
  }
  return basis;
}

std::optional<Vec> Matrix::solve(const Vec& rhs) const {
  if (rhs.size() != rows_) throw ShapeMismatch("solve rhs");
  Matrix aug = hstack(*this, from_cols(f_, rows_, {rhs}));
  RrefForm r = aug.rref();
  for (size_t p : r.pivots)
    if (p == cols_) return std::nullopt;
  Vec x = zero_vec(f_, cols_);
  for (size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.m.at(i, cols_);
  return x;
}

std::optional<Matrix> Matrix::solve_matrix(const Matrix& rhs) const {
  if (rhs.rows() != rows_) throw ShapeMismatch("solve_matrix rhs");
  Matrix aug = hstack(*this, rhs);
  RrefForm r = aug.rref();
  for (size_t p : r.pivots)
    if (p >= cols_) return std::nullopt;
  Matrix x(f_, cols_, rhs.cols());
  for (size_t i = 0; i < r.pivots.size(); ++i)
    for (size_t j = 0; j < rhs.cols(); ++j) x.at(r.pivots[i], j) = r.m.at(i, cols_ + j);
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto x = solve_matrix(identity(f_, rows_));
  if (!x) return std::nullopt;
  if ((*x * *this).is_identity()) return x;
  return std::nullopt;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).to_string();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

size_t Matrix::rank() const { return rref().pivots.size(); }

Matrix column_space(const Matrix& m) {
  RrefForm r = m.transpose().rref();
  Matrix basis(m.field(), m.rows(), r.pivots.size());
  for (size_t i = 0; i < r.pivots.size(); ++i)
    for (size_t j = 0; j < m.rows(); ++j) basis.at(j, i) = r.m.at(i, j);
  return basis;
}

}  // namespace xprod
