#include "unital/abelian/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "unital/errors.hpp"

namespace unital {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Int mod_floor(Int a, Int m) {
  if (m < 0) m = -m;
  Int r = a % m;
  return r < 0 ? r + m : r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix: row " + std::to_string(i));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::column(std::span<const Int> v) {
  IntMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = row(i);
  return out;
}

Coords IntMatrix::col(std::size_t j) const {
  Coords c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Coords IntMatrix::row(std::size_t i) const {
  return Coords(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix product: dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Int b = rhs(k, j);
        if (b != 0) out(i, j) = checked_add(out(i, j), checked_mul(a, b));
      }
    }
  }
  return out;
}

Coords IntMatrix::operator*(std::span<const Int> v) const {
  if (cols_ != v.size()) throw InputError("matrix-vector product: dimension mismatch");
  Coords out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Int a = (*this)(i, j);
      if (a != 0 && v[j] != 0) acc = checked_add(acc, checked_mul(a, v[j]));
    }
    out[i] = acc;
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix sum: dimension mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = checked_add(data_[k], rhs.data_[k]);
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix difference: dimension mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = checked_sub(data_[k], rhs.data_[k]);
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = checked_sub(0, data_[k]);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::col_range(std::size_t first, std::size_t count) const {
  IntMatrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  return out;
}

IntMatrix IntMatrix::row_range(std::size_t first, std::size_t count) const {
  IntMatrix out(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
  return out;
}

IntMatrix IntMatrix::hcat(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw InputError("hcat: row count mismatch");
  IntMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
  }
  return out;
}

IntMatrix IntMatrix::vcat(const IntMatrix& rhs) const {
  if (cols_ != rhs.cols_) throw InputError("vcat: column count mismatch");
  IntMatrix out(rows_ + rhs.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(rhs.data_.begin(), rhs.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Int x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  std::vector<__int128> a(data_.begin(), data_.end());
  auto at = [&](std::size_t i, std::size_t j) -> __int128& { return a[i * n + j]; };
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 num;
        __int128 t1;
        __int128 t2;
        if (__builtin_mul_overflow(at(i, j), at(k, k), &t1) || __builtin_mul_overflow(at(i, k), at(k, j), &t2) ||
            __builtin_sub_overflow(t1, t2, &num))
          throw OverflowError("integer overflow in determinant");
        at(i, j) = num / prev;
      }
    }
    prev = at(k, k);
  }
  const __int128 det = sign * at(n - 1, n - 1);
  if (det > INT64_MAX || det < INT64_MIN) throw OverflowError("determinant exceeds 64 bits");
  return static_cast<Int>(det);
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, Int factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Int s = (*this)(source, c);
    if (s != 0) (*this)(target, c) = checked_add((*this)(target, c), checked_mul(factor, s));
  }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, Int factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Int s = (*this)(r, source);
    if (s != 0) (*this)(r, target) = checked_add((*this)(r, target), checked_mul(factor, s));
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = checked_sub(0, (*this)(i, c));
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = checked_sub(0, (*this)(r, j));
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace unital
