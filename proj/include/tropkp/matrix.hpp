#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tropkp/rational.hpp"

namespace tropkp {

// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const;

  /// Columns listed in `cols` (0-based), in the given order.
  RatMatrix columns(std::span<const std::size_t> cols) const;

  bool is_symmetric() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Determinant by rational Gaussian elimination with row pivoting.
Rational determinant(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
/// All leading principal minors strictly positive.
bool is_positive_definite(const RatMatrix& m);

/// x^T M y for integer or rational vectors.
Rational bilinear(std::span<const Rational> x, const RatMatrix& m, std::span<const Rational> y);

}  // namespace tropkp
