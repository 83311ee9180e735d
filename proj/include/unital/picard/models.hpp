#pragma once

#include <string>
#include <utility>
#include <vector>

#include "unital/complexes/complex.hpp"
#include "unital/limits.hpp"
#include "unital/verification.hpp"

namespace unital {

// ---- 2-term model: objects B, Hom(b, b') = {a in A : λa = b - b'} ----

struct Morphism1 {
  Coords source;
  Coords target;
  Coords a;
  bool operator==(const Morphism1&) const = default;
};

class PicardModel1 {
 public:
  explicit PicardModel1(Complex2 base);

  const Complex2& base() const noexcept { return base_; }
  const FgAbGroup& A() const { return base_.A(); }
  const FgAbGroup& B() const { return base_.B(); }
  Coords lambda(const Coords& a) const { return base_.lambda().apply(a); }

  bool is_morphism(const Coords& a, const Coords& b, const Coords& b2) const;
  /// Throws InputError when λa != b - b2.
  Morphism1 morphism(const Coords& a, const Coords& b, const Coords& b2) const;
  Morphism1 identity(const Coords& b) const;
  /// f then g; requires f.target == g.source.
  Morphism1 compose(const Morphism1& f, const Morphism1& g) const;
  Morphism1 tensor(const Morphism1& f, const Morphism1& g) const;
  /// All morphisms b -> b2, as a coset of ker λ, in lexicographic order.
  std::vector<Morphism1> hom(const Coords& b, const Coords& b2) const;

 private:
  Complex2 base_;
};

/// (e, a_φ) with a_φ : e⊗e -> e, i.e. λ(a_φ) = e.
struct SaavedraUnit {
  Coords e;
  Coords a_phi;
  bool operator==(const SaavedraUnit&) const = default;
  auto operator<=>(const SaavedraUnit&) const = default;
};

struct UnitMorphism1 {
  SaavedraUnit source;
  SaavedraUnit target;
  Coords u;
  bool operator==(const UnitMorphism1&) const = default;
};

bool is_saavedra_unit(const PicardModel1& m, const SaavedraUnit& s);
/// Sorted by (e, a_φ).
std::vector<SaavedraUnit> enumerate_units_1(const PicardModel1& m, const Limits& limits = {});
/// Both paths of the square e_s⊗e_s -> e_t, evaluated as morphisms:
/// (u⊗u) then a_φ(t), and a_φ(s) then u.
std::pair<Morphism1, Morphism1> unit_square_1(const PicardModel1& m, const SaavedraUnit& s, const SaavedraUnit& t,
                                              const Coords& u);
/// Every u in Hom(e_s, e_t) making the square commute.
std::vector<UnitMorphism1> unit_morphisms_1(const PicardModel1& m, const SaavedraUnit& s, const SaavedraUnit& t);
/// Fast form: componentwise sum.
SaavedraUnit tensor_units_1(const PicardModel1& m, const SaavedraUnit& s, const SaavedraUnit& t);
/// Reference form: a_φ of the product is built as the composite of the
/// constraint isomorphisms (identities in the strict model) followed by
/// a_φ(s)⊗a_φ(t), with endpoints checked at every step.
SaavedraUnit tensor_units_1_composite(const PicardModel1& m, const SaavedraUnit& s, const SaavedraUnit& t);
SaavedraUnit canonical_unit(const PicardModel1& m);
VerificationReport verify_contractible_1(const PicardModel1& m, const Limits& limits = {});

// ---- 3-term model: objects C, 1-cells b with λb = c - c', 2-cells α with δα = b - b' ----

struct Cell1 {
  Coords source;
  Coords target;
  Coords b;
  bool operator==(const Cell1&) const = default;
};

struct Cell2 {
  Cell1 source;
  Cell1 target;
  Coords alpha;
  bool operator==(const Cell2&) const = default;
};

class PicardModel2 {
 public:
  explicit PicardModel2(Complex3 base);

  const Complex3& base() const noexcept { return base_; }
  const FgAbGroup& A() const { return base_.A(); }
  const FgAbGroup& B() const { return base_.B(); }
  const FgAbGroup& C() const { return base_.C(); }
  Coords delta(const Coords& a) const { return base_.delta().apply(a); }
  Coords lambda(const Coords& b) const { return base_.lambda().apply(b); }

  Cell1 cell1(const Coords& b, const Coords& c, const Coords& c2) const;
  Cell2 cell2(const Coords& alpha, const Cell1& f, const Cell1& g) const;
  Cell1 identity1(const Coords& c) const;
  Cell2 identity2(const Cell1& f) const;
  Cell1 compose(const Cell1& f, const Cell1& g) const;
  Cell1 tensor(const Cell1& f, const Cell1& g) const;
  /// α then β.
  Cell2 vcompose(const Cell2& alpha, const Cell2& beta) const;
  /// α : f => f', β : g => g' gives f;g => f';g'.
  Cell2 hcompose(const Cell2& alpha, const Cell2& beta) const;
  Cell2 tensor(const Cell2& alpha, const Cell2& beta) const;

 private:
  Complex3 base_;
};

/// (e, φ) with φ : e⊗e -> e, i.e. λφ = e.
struct JKUnit {
  Coords e;
  Coords phi;
  bool operator==(const JKUnit&) const = default;
  auto operator<=>(const JKUnit&) const = default;
};

/// (f, θ) with θ : (f⊗f);φ_t => φ_s;f.
struct UnitMorphism2 {
  JKUnit source;
  JKUnit target;
  Coords f;
  Coords theta;
  bool operator==(const UnitMorphism2&) const = default;
};

struct Unit2Morphism {
  UnitMorphism2 source;
  UnitMorphism2 target;
  Coords gamma;
};

bool is_jk_unit(const PicardModel2& m, const JKUnit& u);
std::vector<JKUnit> enumerate_units_2(const PicardModel2& m, const Limits& limits = {});
/// The two 1-cells e_s⊗e_s -> e_t that θ must connect: (f⊗f);φ_t and φ_s;f.
std::pair<Cell1, Cell1> unit_morphism_paths(const PicardModel2& m, const JKUnit& s, const JKUnit& t, const Coords& f);
bool is_unit_morphism(const PicardModel2& m, const UnitMorphism2& mor);
std::vector<UnitMorphism2> unit_1morphisms(const PicardModel2& m, const JKUnit& s, const JKUnit& t);
/// Both pastings (f⊗f);φ_t => φ_s;g for γ : f => g:
/// (γ⊗γ);φ_t then θ_g, and θ_f then φ_s;γ.
std::pair<Cell2, Cell2> pastings(const PicardModel2& m, const UnitMorphism2& m1, const UnitMorphism2& m2,
                                 const Coords& gamma);
std::vector<Unit2Morphism> unit_2morphisms(const PicardModel2& m, const UnitMorphism2& m1, const UnitMorphism2& m2);
/// Unit 1-morphism composite s -> t -> r.
UnitMorphism2 compose_unit_morphisms(const PicardModel2& m, const UnitMorphism2& a, const UnitMorphism2& b);
JKUnit tensor_units_2(const PicardModel2& m, const JKUnit& s, const JKUnit& t);
JKUnit canonical_unit(const PicardModel2& m);
VerificationReport verify_contractible_2(const PicardModel2& m, const Limits& limits = {});

std::string to_string(const Coords& x);
std::string to_string(const SaavedraUnit& u);
std::string to_string(const JKUnit& u);

}  // namespace unital
