#include "tropkp/matrix.hpp"

#include <utility>

namespace tropkp {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("matrix product: dimension mismatch");
  RatMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const Rational& a = (*this)(i, l);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(l, j);
    }
  return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RatMatrix RatMatrix::columns(std::span<const std::size_t> cols) const {
  RatMatrix r(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] >= cols_) throw InvalidArgument("column index out of range");
      r(i, j) = (*this)(i, cols[j]);
    }
  return r;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

namespace {

// Reduces m in place to row echelon form; returns the rank and, through
// `sign`, the parity of row swaps.
std::size_t eliminate(RatMatrix& m, int& sign) {
  sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of non-square matrix");
  RatMatrix w = m;
  int sign = 1;
  if (eliminate(w, sign) < w.rows()) return Rational(0);
  Rational d = sign;
  for (std::size_t i = 0; i < w.rows(); ++i) d *= w(i, i);
  return d;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix w = m;
  int sign = 1;
  return eliminate(w, sign);
}

bool is_positive_definite(const RatMatrix& m) {
  if (!m.is_symmetric()) return false;
  for (std::size_t s = 1; s <= m.rows(); ++s) {
    RatMatrix lead(s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) lead(i, j) = m(i, j);
    if (determinant(lead) <= 0) return false;
  }
  return true;
}

Rational bilinear(std::span<const Rational> x, const RatMatrix& m, std::span<const Rational> y) {
  if (x.size() != m.rows() || y.size() != m.cols()) throw InvalidArgument("bilinear: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < y.size(); ++j) row += m(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

}  // namespace tropkp
