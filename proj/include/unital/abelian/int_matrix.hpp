#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace unital {

using Int = std::int64_t;
using Coords = std::vector<Int>;

// Overflow-checked arithmetic; throws OverflowError.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Floor-style modulus: result in [0, |m|) for m != 0.
Int mod_floor(Int a, Int m);

/// Dense row-major integer matrix with exact (overflow-checked) arithmetic.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols_if_empty = 0);
  static IntMatrix column(std::span<const Int> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::vector<Int>> to_rows() const;
  Coords col(std::size_t j) const;
  Coords row(std::size_t i) const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  Coords operator*(std::span<const Int> v) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& rhs) const = default;

  IntMatrix transpose() const;
  /// Columns [first, first+count).
  IntMatrix col_range(std::size_t first, std::size_t count) const;
  /// Rows [first, first+count).
  IntMatrix row_range(std::size_t first, std::size_t count) const;
  /// Horizontal concatenation [this | rhs]; row counts must agree.
  IntMatrix hcat(const IntMatrix& rhs) const;
  /// Vertical concatenation; column counts must agree.
  IntMatrix vcat(const IntMatrix& rhs) const;

  bool is_zero() const;
  bool is_diagonal() const;

  /// Exact determinant (fraction-free Bareiss). Square matrices only.
  Int determinant() const;

  // Elementary operations used by normal-form algorithms.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t target, std::size_t source, Int factor);
  void add_col_multiple(std::size_t target, std::size_t source, Int factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

}  // namespace unital
