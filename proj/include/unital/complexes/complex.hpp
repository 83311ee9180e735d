#pragma once

#include <string>
#include <vector>

#include "unital/abelian/hom.hpp"

namespace unital {

/// Bounded cochain complex concentrated in degrees -(n-1) .. 0.
/// terms[i] sits in degree i-(n-1); diffs[i] : terms[i] -> terms[i+1].
class Complex {
 public:
  Complex() = default;
  /// Checks that consecutive differentials compose to zero.
  Complex(std::vector<FgAbGroup> terms, std::vector<GroupHom> diffs);

  std::size_t length() const noexcept { return terms_.size(); }
  int min_degree() const noexcept { return 1 - static_cast<int>(terms_.size()); }
  const FgAbGroup& term(int degree) const;
  /// Differential leaving `degree`.
  const GroupHom& diff(int degree) const;
  const std::vector<FgAbGroup>& terms() const noexcept { return terms_; }
  const std::vector<GroupHom>& diffs() const noexcept { return diffs_; }

  bool operator==(const Complex&) const = default;
  std::string to_string() const;

 protected:
  std::size_t pos(int degree) const;

  std::vector<FgAbGroup> terms_;
  std::vector<GroupHom> diffs_;
};

/// A --lambda--> B in degrees -1, 0.
class Complex2 : public Complex {
 public:
  explicit Complex2(const GroupHom& lambda);
  /// Throws InputError unless c has length 2.
  explicit Complex2(const Complex& c);

  const FgAbGroup& A() const { return terms_[0]; }
  const FgAbGroup& B() const { return terms_[1]; }
  const GroupHom& lambda() const { return diffs_[0]; }
};

/// A --delta--> B --lambda--> C in degrees -2, -1, 0; lambda∘delta = 0.
class Complex3 : public Complex {
 public:
  Complex3(const GroupHom& delta, const GroupHom& lambda);
  explicit Complex3(const Complex& c);

  const FgAbGroup& A() const { return terms_[0]; }
  const FgAbGroup& B() const { return terms_[1]; }
  const FgAbGroup& C() const { return terms_[2]; }
  const GroupHom& delta() const { return diffs_[0]; }
  const GroupHom& lambda() const { return diffs_[1]; }
};

/// Degreewise maps; maps[i] acts on the term at position i.
class StrictMorphism {
 public:
  /// Checks lengths and that every square commutes.
  StrictMorphism(Complex source, Complex target, std::vector<GroupHom> maps);

  static StrictMorphism identity(const Complex& x);

  const Complex& source() const noexcept { return source_; }
  const Complex& target() const noexcept { return target_; }
  const GroupHom& at(int degree) const;
  const std::vector<GroupHom>& maps() const noexcept { return maps_; }

 private:
  Complex source_;
  Complex target_;
  std::vector<GroupHom> maps_;
};

/// g after f.
StrictMorphism compose(const StrictMorphism& g, const StrictMorphism& f);
/// Degreewise isomorphism.
bool is_isomorphism(const StrictMorphism& f);

/// H^n with the data needed to move between cycles and classes.
struct HomologyData {
  int degree = 0;
  FgAbGroup group;
  /// Cycles Z^n with their inclusion into X^n.
  KernelResult cycles;
  /// Z^n -> H^n.
  GroupHom proj;

  /// Class of a cycle given in X^n coordinates; throws InputError on non-cycles.
  Coords class_of(const Coords& cycle) const;
  /// Lexicographically smallest cycle in the class (finite X^n), else some cycle.
  Coords representative(const Coords& cls) const;
  /// Some cycle in the class, without search.
  Coords any_representative(const Coords& cls) const;
};

HomologyData homology_data(const Complex& x, int degree);
FgAbGroup homology(const Complex& x, int degree);
bool is_acyclic(const Complex& x);

/// Map induced by f on H^degree.
GroupHom induced_map(const StrictMorphism& f, int degree);

struct QuasiIsoResult {
  bool is_qiso = true;
  /// induced[i] is the map on H at position i.
  std::vector<GroupHom> induced;
  std::vector<int> failing_degrees;
};
QuasiIsoResult is_quasi_isomorphism(const StrictMorphism& f);

/// Mapping cone of f between 2-term complexes:
/// degree n is X^{n+1} + Y^n, (x, y) |-> (-d_X x, f(x) + d_Y y).
Complex3 cone(const StrictMorphism& f);

/// A -> ker(B -> C), the soft truncation at -1 shifted into degrees -1, 0.
struct Truncation {
  Complex2 complex;
  /// ker(lambda) -> B.
  GroupHom incl;
};
Truncation truncate_shift(const Complex3& x);

}  // namespace unital
