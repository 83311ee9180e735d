#pragma once

#include <optional>
#include <vector>

#include "unital/abelian/big_matrix.hpp"
#include "unital/abelian/int_matrix.hpp"

namespace unital {

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... ,
/// nonzero diagonal entries positive and ahead of the zero ones.
/// The inverses of U and V are tracked alongside.
struct SmithDecomposition {
  BigMatrix U;
  BigMatrix D;
  BigMatrix V;
  BigMatrix U_inv;
  BigMatrix V_inv;
  std::size_t rank = 0;

  /// Diagonal entries d_0 .. d_{min(m,n)-1}.
  std::vector<BigInt> diagonal() const;
  /// Same, narrowed to 64 bits (throws OverflowError).
  std::vector<Int> diagonal_int() const;
};

/// Runs in 64-bit arithmetic and redoes the reduction with big integers
/// if an intermediate value overflows.
SmithDecomposition smith_normal_form(const IntMatrix& M);

/// Integer solution x of M x = y, if one exists.
std::optional<Coords> solve_integer(const IntMatrix& M, const Coords& y);

/// Hermite-style column basis of a lattice: column k is zero above row
/// pivot[k], positive there, pivots increase, and every other entry in a
/// pivot row lies in [0, pivot value).
struct Echelon {
  BigMatrix h;
  std::vector<std::size_t> pivot;
};
Echelon column_echelon(const BigMatrix& m);
/// Representative of v + lattice with pivot coordinates in [0, pivot value).
void reduce_mod_lattice(const Echelon& e, std::vector<BigInt>& v);
BigInt floor_div(const BigInt& a, const BigInt& b);

/// Integer kernel of M, echelon-reduced, without narrowing.
BigMatrix integer_kernel_basis_big(const IntMatrix& M);

/// Basis (as columns) of the integer kernel of M.
IntMatrix integer_kernel_basis(const IntMatrix& M);

/// Basis (as columns) of the lattice spanned by the columns of M.
IntMatrix lattice_basis(const IntMatrix& M);

}  // namespace unital
