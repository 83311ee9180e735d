#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unital/cech/nerve.hpp"
#include "unital/complexes/complex.hpp"
#include "unital/limits.hpp"
#include "unital/picard/models.hpp"

namespace unital {

/// A value of `group` on every element of V_level.
struct SheafSections {
  FgAbGroup group;
  int level = 0;
  std::vector<Coords> values;

  static SheafSections zero(const FgAbGroup& g, int level, const Nerve& n);
  static SheafSections constant(const FgAbGroup& g, int level, const Nerve& n, const Coords& value);
  const Coords& at(std::size_t x) const { return values.at(x); }
  bool operator==(const SheafSections&) const = default;
};

/// Throws InputError unless s has one reduced-shape value per simplex.
void check_sections(const Nerve& n, const SheafSections& s);
/// d_i^* s, a section over V_{level+1}.
SheafSections pullback(const Nerve& n, const SheafSections& s, std::size_t i);
SheafSections apply(const GroupHom& f, const SheafSections& s);
SheafSections add(const SheafSections& x, const SheafSections& y);
SheafSections sub(const SheafSections& x, const SheafSections& y);
/// Alternating sum of the pullbacks d_i^*.
SheafSections coboundary(const Nerve& n, const SheafSections& s);

namespace relation {
inline const std::string cocycle_a = "d_0^*(a)+d_2^*(a)=d_1^*(a)";
inline const std::string cocycle_b = "d_0^*(b)=d_1^*(b)+λ(a)";
inline const std::string transition = "a=d_0^*(a_φ)-d_1^*(a_φ)";
inline const std::string unit = "λ(a_φ)=b";
}  // namespace relation

/// Torsor cocycle: a over V_1, b over V_0.
struct TorsorCocycle {
  SheafSections a;
  SheafSections b;
  bool operator==(const TorsorCocycle&) const = default;
};

/// Saavedra unit cocycle: a over V_1, a_φ and b over V_0.
struct UnitCocycle1 {
  SheafSections a;
  SheafSections a_phi;
  SheafSections b;
  bool operator==(const UnitCocycle1&) const = default;
};

/// Throw CocycleError naming the first violated relation.
void validate_torsor_cocycle(const Nerve& n, const Complex2& x, const TorsorCocycle& c);
void validate_unit_cocycle(const Nerve& n, const Complex2& x, const UnitCocycle1& c);

/// Re-choosing the local section by alpha in A(V_0).
TorsorCocycle act(const Nerve& n, const Complex2& x, const TorsorCocycle& c, const SheafSections& alpha);
UnitCocycle1 act(const Nerve& n, const Complex2& x, const UnitCocycle1& c, const SheafSections& alpha);

struct TorsorClasses {
  std::uint64_t count = 0;
  /// Lexicographically first cocycle of each class, ordered by (b, a).
  std::vector<TorsorCocycle> representatives;
  /// Classes under addition of cocycles.
  FgAbGroup group;
  std::uint64_t cocycles = 0;
  std::uint64_t states = 0;
};

struct UnitClasses {
  std::uint64_t count = 0;
  /// Lexicographically first cocycle of each class, ordered vertexwise by
  /// (a_φ, b), then a.
  std::vector<UnitCocycle1> representatives;
  FgAbGroup group;
  std::uint64_t cocycles = 0;
  std::uint64_t states = 0;
};

/// Exhaustive cocycle search followed by quotienting by the coboundary action.
TorsorClasses torsor_classes(const Nerve& n, const Complex2& x, const Limits& limits = {});
UnitClasses unit_cocycles(const Nerve& n, const Complex2& x, const Limits& limits = {});

// ---- total complex ----

/// Cochain in total degree 0: components[j] is a section of X^{-j} over V_j.
struct TotalCocycle {
  Complex complex;
  std::vector<SheafSections> components;
  /// Components vanish on degenerate simplices.
  bool normalized = false;
};

/// Tot^{-1} -> Tot^0 -> Tot^1 of the Čech double complex with coefficients
/// in x, differential δ + (-1)^p d_X on X^q(V_p).
class TotalComplex {
 public:
  TotalComplex(const Nerve& n, const Complex& x, bool normalized = false);

  /// As a three-term complex; total degree t sits at Complex degree t - 1.
  const Complex& cochains() const noexcept { return cochains_; }
  const Complex& coefficients() const noexcept { return x_; }
  bool normalized() const noexcept { return normalized_; }

  /// Blocks of total degree t in [-1, 1]: block j is X^{-j} over V_{t+j},
  /// absent (empty sections of the trivial group) when t + j is out of range.
  std::vector<SheafSections> decode(int t, const Coords& v) const;
  Coords encode(int t, const std::vector<SheafSections>& blocks) const;

  FgAbGroup h0() const;

 private:
  struct Layout {
    std::vector<std::size_t> offset;  // per block j, naive coordinate offset
    std::vector<int> level;           // per block j, -1 when absent
    std::size_t dim = 0;
    std::vector<Int> moduli;          // per naive coordinate
    CanonicalQuotient cq;
  };
  const Layout& layout(int t) const { return layouts_[static_cast<std::size_t>(t + 1)]; }
  std::vector<std::size_t> cells(int level) const;

  Nerve nerve_;
  Complex x_;
  bool normalized_;
  std::vector<Layout> layouts_;
  Complex cochains_;
};

/// Degree-0 cohomology of the total complex, in canonical form.
FgAbGroup classify_h0(const Nerve& n, const Complex& x, const Limits& limits = {}, bool normalized = false);

/// Throws CocycleError naming the block where the total differential fails.
void validate_total_cocycle(const Nerve& n, const TotalCocycle& c);

/// Saavedra unit cocycle as a total cocycle with coefficients unit_complex_1(x).
TotalCocycle to_total(const Nerve& n, const Complex2& x, const UnitCocycle1& c);

/// Constant cocycle: a = 0, a_φ = s.a_phi, b = s.e everywhere.
UnitCocycle1 cocycle_of_unit(const Nerve& n, const Complex2& x, const SaavedraUnit& s);
/// Constant total cocycle with coefficients unit_complex_2(x): (φ, e) on V_0.
TotalCocycle cocycle_of_unit(const Nerve& n, const Complex3& x, const JKUnit& s);

struct SaavedraDescent {
  SaavedraUnit unit;
  /// act(c, alpha) == cocycle_of_unit(unit).
  SheafSections alpha;
};
struct JKDescent {
  JKUnit unit;
  /// Total-degree -1 cochain whose differential is c - cocycle_of_unit(unit).
  std::vector<SheafSections> trivialization;
};

/// The unit read off at vertex 0, with data moving c onto its constant cocycle.
SaavedraDescent unit_of_cocycle(const Nerve& n, const Complex2& x, const UnitCocycle1& c);
JKDescent unit_of_cocycle(const Nerve& n, const Complex3& x, const TotalCocycle& c);

}  // namespace unital
