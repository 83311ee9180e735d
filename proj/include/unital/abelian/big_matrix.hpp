#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unital/abelian/int_matrix.hpp"

namespace unital {

using BigInt = boost::multiprecision::cpp_int;

/// Checked narrowing; throws OverflowError.
Int to_int(const BigInt& x);

/// Row-major matrix of arbitrary-precision integers. Used for Smith-form
/// transforms, whose entries can outgrow 64 bits.
class BigMatrix {
 public:
  BigMatrix() = default;
  BigMatrix(std::size_t rows, std::size_t cols);
  explicit BigMatrix(const IntMatrix& m);
  static BigMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  BigMatrix operator*(const BigMatrix& rhs) const;
  bool operator==(const BigMatrix&) const = default;
  bool is_diagonal() const;
  BigInt determinant() const;
  /// Throws OverflowError if an entry does not fit.
  IntMatrix to_int() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t target, std::size_t source, const BigInt& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const BigInt& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

}  // namespace unital
