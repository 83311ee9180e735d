#pragma once

// Brute-force reference computations for tests. None of these call into
// the Smith-form machinery; they work from definitions.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "unital/abelian/big_matrix.hpp"
#include "unital/abelian/hom.hpp"
#include "unital/complexes/complex.hpp"

namespace oracle {

using unital::Coords;
using unital::Int;
using unital::IntMatrix;
using Wide = unital::BigInt;

/// Z/m_0 x ... x Z/m_k with plain componentwise arithmetic (m_i >= 1).
struct NaiveGroup {
  std::vector<Int> moduli;

  std::uint64_t order() const;
  std::vector<Coords> elements() const;
  Coords add(const Coords& x, const Coords& y) const;
  bool is_zero(const Coords& x) const;
  /// Smallest n >= 1 with n x = 0, by repeated addition.
  std::uint64_t element_order(const Coords& x) const;
};

/// Multiset of element orders, as order -> count.
std::map<std::uint64_t, std::uint64_t> order_census(const NaiveGroup& g);
std::map<std::uint64_t, std::uint64_t> order_census(const unital::FgAbGroup& g);

/// Exact determinant by cofactor expansion (n <= 8).
Wide determinant(const IntMatrix& m);
Wide determinant(const unital::BigMatrix& m);
/// Rank over Q by fraction-free elimination.
std::size_t rank(const IntMatrix& m);
/// gcd of all k x k minors, k = 1..min(rows, cols).
std::vector<Wide> determinantal_divisors(const IntMatrix& m);

/// |Z^rows / im(M)| by enumerating cosets, or nullopt when the quotient is
/// infinite. Gives up (returns 0) if more than `cap` cosets would be visited.
struct CokerCount {
  bool infinite = false;
  std::uint64_t order = 0;
  bool gave_up = false;
};
CokerCount coker_brute_force(const IntMatrix& m, std::uint64_t cap);

/// Elements of a finite group x with f(x) = 0, by enumeration.
std::vector<Coords> kernel_elements(const unital::GroupHom& f);
/// Distinct values f(x), by enumeration.
std::vector<Coords> image_elements(const unital::GroupHom& f);

/// Random finite group with order at most max_order (invariant factors drawn
/// from random cyclic pieces).
unital::FgAbGroup random_group(std::mt19937& rng, std::uint64_t max_order);
/// Random well-defined homomorphism between finite groups.
unital::GroupHom random_hom(std::mt19937& rng, const unital::FgAbGroup& s, const unital::FgAbGroup& t);
/// Random homomorphism S -> T that vanishes on im(g).
unital::GroupHom random_hom_killing(std::mt19937& rng, const unital::GroupHom& g, const unital::FgAbGroup& t);

/// |ker(d_out)| / |im(d_in)| at `degree`, by enumerating elements.
std::uint64_t homology_order(const unital::Complex& x, int degree);

unital::Complex2 random_complex2(std::mt19937& rng, std::uint64_t max_order);
/// Random A -> B -> C with lambda∘delta = 0.
unital::Complex3 random_complex3(std::mt19937& rng, std::uint64_t max_order);

}  // namespace oracle
