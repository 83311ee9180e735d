#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "unital/abelian/int_matrix.hpp"

namespace unital {

struct CanonicalQuotient;
class FgAbGroup;
CanonicalQuotient canonical_quotient(const IntMatrix& relations);
FgAbGroup group_from_order_census(const std::vector<std::uint64_t>& orders);

/// Finitely generated abelian group Z/d_1 + ... + Z/d_k + Z^r in invariant-factor
/// form: d_i >= 2 and d_i | d_{i+1}. Coordinates are ordered torsion first, then free.
class FgAbGroup {
 public:
  /// The trivial group.
  FgAbGroup() = default;

  /// Re-canonicalizes any list of cyclic orders (0 = infinite cyclic, 1 = trivial)
  /// plus extra free rank, e.g. ({2, 3}, 0) gives Z/6.
  explicit FgAbGroup(const std::vector<Int>& cyclic_orders, std::size_t free_rank = 0);

  static FgAbGroup cyclic(Int n) { return FgAbGroup({n}); }
  static FgAbGroup free(std::size_t rank) { return FgAbGroup({}, rank); }

  const std::vector<Int>& invariant_factors() const noexcept { return factors_; }
  std::size_t free_rank() const noexcept { return free_rank_; }
  std::size_t num_generators() const noexcept { return factors_.size() + free_rank_; }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  bool is_trivial() const noexcept { return factors_.empty() && free_rank_ == 0; }

  /// Order of the group; throws FinitenessError when free_rank > 0.
  std::uint64_t order() const;

  /// Modulus of coordinate i (0 for free coordinates).
  Int modulus(std::size_t i) const { return i < factors_.size() ? factors_[i] : 0; }

  Coords zero() const { return Coords(num_generators(), 0); }
  Coords generator(std::size_t i) const;
  Coords normalize(Coords x) const;
  Coords add(const Coords& x, const Coords& y) const;
  Coords sub(const Coords& x, const Coords& y) const;
  Coords neg(const Coords& x) const;
  Coords scale(Int k, const Coords& x) const;
  bool is_zero(const Coords& x) const;
  /// Throws GroupMismatch unless x has the right length.
  void check_shape(const Coords& x) const;

  // Enumeration (finite groups only). Order is lexicographic on reduced
  // coordinates, which coincides with the mixed-radix index order.
  std::vector<Coords> elements() const;
  std::uint64_t index_of(const Coords& x) const;
  Coords element_at(std::uint64_t index) const;

  /// Order of an element of a finite group.
  std::uint64_t element_order(const Coords& x) const;

  std::string to_string() const;
  bool operator==(const FgAbGroup&) const = default;

 private:
  struct CanonicalTag {};
  FgAbGroup(CanonicalTag, std::vector<Int> factors, std::size_t free_rank)
      : factors_(std::move(factors)), free_rank_(free_rank) {}

  std::vector<Int> factors_;
  std::size_t free_rank_ = 0;

  void require_finite(const char* what) const;

  friend CanonicalQuotient canonical_quotient(const IntMatrix& relations);
  friend FgAbGroup group_from_order_census(const std::vector<std::uint64_t>& orders);
};

/// Element of a fixed group; coordinates are always reduced.
class GroupElem {
 public:
  GroupElem(FgAbGroup group, Coords coords);
  static GroupElem zero(const FgAbGroup& group) { return {group, group.zero()}; }

  const FgAbGroup& group() const noexcept { return group_; }
  const Coords& coords() const noexcept { return coords_; }
  bool is_zero() const { return group_.is_zero(coords_); }

  GroupElem operator+(const GroupElem& rhs) const;
  GroupElem operator-(const GroupElem& rhs) const;
  GroupElem operator-() const;
  bool operator==(const GroupElem& rhs) const = default;
  /// Lexicographic on coordinates; elements of different groups are unordered.
  bool operator<(const GroupElem& rhs) const { return coords_ < rhs.coords_; }

  std::string to_string() const;

 private:
  FgAbGroup group_;
  Coords coords_;
};

GroupElem add(const GroupElem& x, const GroupElem& y);
GroupElem neg(const GroupElem& x);
GroupElem normalize(const FgAbGroup& group, Coords coords);

/// Quotient Z^s / im(R) in canonical form, with the coordinate changes
/// between Z^s and canonical coordinates.
struct CanonicalQuotient {
  FgAbGroup group;
  /// canonical-coords x s: image of each standard basis vector of Z^s.
  IntMatrix to_canonical;
  /// s x canonical-coords: a representative in Z^s of each canonical generator.
  IntMatrix from_canonical;
};

CanonicalQuotient canonical_quotient(const IntMatrix& relations);

/// Invariant factors recovered from an element-order census: `orders` lists
/// the order of every element of a finite abelian group (any order of listing).
FgAbGroup group_from_order_census(const std::vector<std::uint64_t>& orders);

}  // namespace unital
