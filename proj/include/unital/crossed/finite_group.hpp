#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace unital {

/// Finite group as a multiplication table on 0..n-1, with 0 the identity.
class FiniteGroup {
 public:
  using Elem = std::uint32_t;
  static constexpr std::size_t max_order = 64;

  /// The trivial group.
  FiniteGroup();
  /// Checks the group axioms exhaustively; element 0 must be the identity.
  explicit FiniteGroup(std::vector<std::vector<Elem>> table, std::string name = "");

  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup dihedral(std::size_t n);  // order 2n
  static FiniteGroup symmetric(std::size_t n);
  static FiniteGroup quaternion();
  /// Closure of permutations of {0..degree-1}; elements in BFS order from the identity.
  static FiniteGroup from_permutations(const std::vector<std::vector<std::size_t>>& gens);
  static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);

  std::size_t size() const noexcept { return table_.size(); }
  Elem identity() const noexcept { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[a][b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem conj(Elem g, Elem h) const { return mul(mul(inv(h), g), h); }  // h^{-1} g h
  Elem power(Elem a, std::int64_t k) const;
  std::size_t order_of(Elem a) const;
  bool is_abelian() const;
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::vector<Elem>>& table() const noexcept { return table_; }

  /// Subgroup generated by gens, sorted.
  std::vector<Elem> generated(const std::vector<Elem>& gens) const;
  bool is_normal(const std::vector<Elem>& subgroup) const;
  std::vector<Elem> center() const;

  bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

 private:
  std::vector<std::vector<Elem>> table_;
  std::vector<Elem> inv_;
  std::string name_;
};

/// G/N for normal N, with the projection and a set-theoretic section.
struct Quotient {
  FiniteGroup group;
  std::vector<FiniteGroup::Elem> proj;
  std::vector<FiniteGroup::Elem> section;
};
Quotient quotient(const FiniteGroup& g, const std::vector<FiniteGroup::Elem>& normal);

/// Subgroup as a group in its own right, elements renumbered in sorted order
/// with the identity first; `embed` maps back.
struct Subgroup {
  FiniteGroup group;
  std::vector<FiniteGroup::Elem> embed;
};
Subgroup subgroup(const FiniteGroup& g, const std::vector<FiniteGroup::Elem>& elems);

bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h, const std::vector<FiniteGroup::Elem>& f);

}  // namespace unital
