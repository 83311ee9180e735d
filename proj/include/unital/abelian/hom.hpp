#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unital/abelian/group.hpp"
#include "unital/abelian/int_matrix.hpp"

namespace unital {

/// Homomorphism given by an integer matrix: column j is the image of source
/// generator j in target coordinates. Composition is the matrix product.
class GroupHom {
 public:
  /// Checks well-definedness (throws IllDefinedHom) and reduces entries.
  GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

  static GroupHom identity(const FgAbGroup& g);
  static GroupHom zero(const FgAbGroup& source, const FgAbGroup& target);
  /// Multiplication by k on g.
  static GroupHom scalar(const FgAbGroup& g, Int k);

  const FgAbGroup& source() const noexcept { return source_; }
  const FgAbGroup& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  Coords apply(const Coords& x) const;
  Coords operator()(const Coords& x) const { return apply(x); }
  GroupElem apply(const GroupElem& x) const;

  GroupHom operator+(const GroupHom& rhs) const;
  GroupHom operator-(const GroupHom& rhs) const;
  GroupHom operator-() const;
  bool operator==(const GroupHom&) const = default;

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_iso() const { return is_injective() && is_surjective(); }

  std::string to_string() const;

 private:
  FgAbGroup source_;
  FgAbGroup target_;
  IntMatrix matrix_;
};

/// g after f.
GroupHom compose(const GroupHom& g, const GroupHom& f);
Coords apply(const GroupHom& f, const Coords& x);

/// Subgroup with its inclusion, or quotient with its projection.
struct KernelResult {
  FgAbGroup group;
  GroupHom incl;
};
struct CokernelResult {
  FgAbGroup group;
  GroupHom proj;
};

KernelResult kernel(const GroupHom& f);
CokernelResult cokernel(const GroupHom& f);
/// Image of f as a subgroup of the target.
KernelResult image(const GroupHom& f);

/// Some x with f(x) = y, if any.
std::optional<Coords> preimage(const GroupHom& f, const Coords& y);

/// The unique h with incl∘h = g, for injective incl whose image contains im(g).
/// Throws InputError otherwise.
GroupHom lift_through(const GroupHom& g, const GroupHom& incl);

/// Canonical sum of summands[0..n) with structure maps.
class DirectSum {
 public:
  DirectSum() = default;
  explicit DirectSum(std::vector<FgAbGroup> summands);
  DirectSum(const FgAbGroup& g, const FgAbGroup& h) : DirectSum(std::vector<FgAbGroup>{g, h}) {}

  const FgAbGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return summands_.size(); }
  const FgAbGroup& summand(std::size_t k) const { return summands_.at(k); }
  const GroupHom& inj(std::size_t k) const { return inj_.at(k); }
  const GroupHom& proj(std::size_t k) const { return proj_.at(k); }

  /// Element with the given components.
  Coords pack(const std::vector<Coords>& parts) const;
  std::vector<Coords> unpack(const Coords& x) const;
  Coords component(const Coords& x, std::size_t k) const { return proj(k).apply(x); }

  /// Sum of maps[k]∘proj_k : sum → T.
  GroupHom hom_from(const std::vector<GroupHom>& maps) const;
  /// Sum of inj_k∘maps[k] : S → sum.
  GroupHom hom_into(const std::vector<GroupHom>& maps) const;

 private:
  std::vector<FgAbGroup> summands_;
  FgAbGroup group_;
  std::vector<GroupHom> inj_;
  std::vector<GroupHom> proj_;
};

DirectSum direct_sum(const FgAbGroup& g, const FgAbGroup& h);

/// Finite group with elements numbered in index order, for inner loops.
class IndexedGroup {
 public:
  explicit IndexedGroup(const FgAbGroup& g);

  const FgAbGroup& group() const noexcept { return group_; }
  std::uint32_t size() const noexcept { return n_; }
  std::uint32_t add(std::uint32_t i, std::uint32_t j) const {
    return table_.empty() ? add_slow(i, j) : table_[static_cast<std::size_t>(i) * n_ + j];
  }
  std::uint32_t neg(std::uint32_t i) const { return neg_[i]; }
  std::uint32_t sub(std::uint32_t i, std::uint32_t j) const { return add(i, neg_[j]); }
  std::uint32_t index(const Coords& x) const { return static_cast<std::uint32_t>(group_.index_of(x)); }
  Coords element(std::uint32_t i) const { return group_.element_at(i); }

 private:
  std::uint32_t add_slow(std::uint32_t i, std::uint32_t j) const;

  FgAbGroup group_;
  std::uint32_t n_ = 1;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> neg_;
};

/// Hom between finite groups as an array of image indices.
std::vector<std::uint32_t> hom_table(const GroupHom& f);

}  // namespace unital
