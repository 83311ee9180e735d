#include "unital/abelian/smith.hpp"

#include <algorithm>

#include "unital/errors.hpp"

namespace unital {

namespace {

Int abs_value(Int x) { return x < 0 ? -x : x; }
BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// q with |a - q*p| <= |p|/2.
template <class T>
T nearest_quotient(const T& a, const T& p) {
  T q = a / p;
  const T r = a - q * p;
  if (r != 0 && 2 * abs_value(r) > abs_value(p)) q += ((r < 0) == (p < 0)) ? 1 : -1;
  return q;
}

template <class Mat, class T>
class Reducer {
 public:
  explicit Reducer(const Mat& M)
      : U_(Mat::identity(M.rows())), D_(M), V_(Mat::identity(M.cols())), U_inv_(Mat::identity(M.rows())),
        V_inv_(Mat::identity(M.cols())) {}

  void run() {
    const std::size_t k = std::min(D_.rows(), D_.cols());
    for (std::size_t t = 0; t < k; ++t) {
      if (!reduce_pivot(t)) break;
      if (D_(t, t) < 0) row_neg(t);
      rank_ = t + 1;
    }
  }

  SmithDecomposition result() const {
    return {BigMatrix(U_), BigMatrix(D_), BigMatrix(V_), BigMatrix(U_inv_), BigMatrix(V_inv_), rank_};
  }

 private:
  // Returns false when the trailing submatrix is zero.
  bool reduce_pivot(std::size_t t) {
    Mat& D = D_;
    const std::size_t m = D.rows();
    const std::size_t n = D.cols();
    for (;;) {
      std::size_t pi = m;
      std::size_t pj = n;
      T best = 0;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          const T v = abs_value(D(i, j));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      }
      if (best == 0) return false;
      row_swap(t, pi);
      col_swap(t, pj);
      const T p = D(t, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        row_add(i, t, -nearest_quotient<T>(D(i, t), p));
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        col_add(j, t, -nearest_quotient<T>(D(t, j), p));
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (D(i, j) % p != 0) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) return true;
    }
  }

  void row_add(std::size_t target, std::size_t source, const T& k) {
    D_.add_row_multiple(target, source, k);
    U_.add_row_multiple(target, source, k);
    U_inv_.add_col_multiple(source, target, -k);
  }
  void row_swap(std::size_t i, std::size_t j) {
    D_.swap_rows(i, j);
    U_.swap_rows(i, j);
    U_inv_.swap_cols(i, j);
  }
  void row_neg(std::size_t i) {
    D_.negate_row(i);
    U_.negate_row(i);
    U_inv_.negate_col(i);
  }
  void col_add(std::size_t target, std::size_t source, const T& k) {
    D_.add_col_multiple(target, source, k);
    V_.add_col_multiple(target, source, k);
    V_inv_.add_row_multiple(source, target, -k);
  }
  void col_swap(std::size_t i, std::size_t j) {
    D_.swap_cols(i, j);
    V_.swap_cols(i, j);
    V_inv_.swap_rows(i, j);
  }

  Mat U_;
  Mat D_;
  Mat V_;
  Mat U_inv_;
  Mat V_inv_;
  std::size_t rank_ = 0;
};

}  // namespace

std::vector<BigInt> SmithDecomposition::diagonal() const {
  std::vector<BigInt> d(std::min(D.rows(), D.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = D(i, i);
  return d;
}

std::vector<Int> SmithDecomposition::diagonal_int() const {
  std::vector<Int> d;
  for (const auto& x : diagonal()) d.push_back(to_int(x));
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& M) {
  try {
    Reducer<IntMatrix, Int> r(M);
    r.run();
    return r.result();
  } catch (const OverflowError&) {
    Reducer<BigMatrix, BigInt> r{BigMatrix(M)};
    r.run();
    return r.result();
  }
}

std::optional<Coords> solve_integer(const IntMatrix& M, const Coords& y) {
  if (y.size() != M.rows()) throw InputError("solve_integer: right-hand side has wrong length");
  const SmithDecomposition s = smith_normal_form(M);
  const BigMatrix uy = s.U * BigMatrix(IntMatrix::column(y));
  BigMatrix z(M.cols(), 1);
  for (std::size_t i = 0; i < uy.rows(); ++i) {
    if (i < s.rank) {
      const BigInt& d = s.D(i, i);
      if (uy(i, 0) % d != 0) return std::nullopt;
      z(i, 0) = uy(i, 0) / d;
    } else if (uy(i, 0) != 0) {
      return std::nullopt;
    }
  }
  return (s.V * z).to_int().col(0);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Echelon column_echelon(const BigMatrix& m) {
  BigMatrix a = m;
  const std::size_t s = a.rows(), t = a.cols();
  Echelon e;
  std::size_t c = 0;
  for (std::size_t r = 0; r < s && c < t; ++r) {
    while (true) {
      std::size_t best = t;
      for (std::size_t j = c; j < t; ++j)
        if (a(r, j) != 0 && (best == t || abs(a(r, j)) < abs(a(r, best)))) best = j;
      if (best == t) break;
      a.swap_cols(c, best);
      bool done = true;
      for (std::size_t j = c + 1; j < t; ++j)
        if (a(r, j) != 0) {
          a.add_col_multiple(j, c, -floor_div(a(r, j), a(r, c)));
          done = done && a(r, j) == 0;
        }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) a.negate_col(c);
    // shorten earlier columns against this pivot
    for (std::size_t j = 0; j < c; ++j) {
      const BigInt q = floor_div(a(r, j), a(r, c));
      if (q != 0) a.add_col_multiple(j, c, -q);
    }
    e.pivot.push_back(r);
    ++c;
  }
  e.h = BigMatrix(s, c);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < c; ++j) e.h(i, j) = a(i, j);
  return e;
}

void reduce_mod_lattice(const Echelon& e, std::vector<BigInt>& v) {
  for (std::size_t k = 0; k < e.pivot.size(); ++k) {
    const std::size_t p = e.pivot[k];
    const BigInt q = floor_div(v[p], e.h(p, k));
    if (q == 0) continue;
    for (std::size_t i = p; i < v.size(); ++i) v[i] -= q * e.h(i, k);
  }
}

BigMatrix integer_kernel_basis_big(const IntMatrix& M) {
  const SmithDecomposition s = smith_normal_form(M);
  BigMatrix basis(M.cols(), M.cols() - s.rank);
  for (std::size_t j = s.rank; j < M.cols(); ++j)
    for (std::size_t i = 0; i < M.cols(); ++i) basis(i, j - s.rank) = s.V(i, j);
  return column_echelon(basis).h;
}

IntMatrix integer_kernel_basis(const IntMatrix& M) { return integer_kernel_basis_big(M).to_int(); }

IntMatrix lattice_basis(const IntMatrix& M) { return column_echelon(BigMatrix(M)).h.to_int(); }

}  // namespace unital
