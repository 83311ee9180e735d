#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unital/cech/nerve.hpp"
#include "unital/crossed/finite_group.hpp"
#include "unital/limits.hpp"
#include "unital/verification.hpp"

namespace unital {

/// λ: G -> H with a right action of H on G, action[h][g] = g^h.
struct CrossedModule {
  FiniteGroup G;
  FiniteGroup H;
  std::vector<FiniteGroup::Elem> boundary;
  std::vector<std::vector<FiniteGroup::Elem>> action;

  FiniteGroup::Elem lambda(FiniteGroup::Elem g) const { return boundary.at(g); }
  FiniteGroup::Elem act(FiniteGroup::Elem g, FiniteGroup::Elem h) const { return action.at(h).at(g); }
};

/// H acting on itself by g^h = h^{-1} g h.
std::vector<std::vector<FiniteGroup::Elem>> conjugation_action(const FiniteGroup& h);
/// g^h = g for all h.
std::vector<std::vector<FiniteGroup::Elem>> trivial_action(const FiniteGroup& g, const FiniteGroup& h);

/// Exhaustive check of: λ a homomorphism, the action a right action by
/// automorphisms, equivariance λ(g^h) = h^{-1}λ(g)h and the Peiffer identity
/// g^{λ(g')} = g'^{-1} g g'. Failing checks carry the first counterexample.
VerificationReport verify_crossed_module(const CrossedModule& x);
/// Throws InputError naming the first failed axiom.
void require_crossed_module(const CrossedModule& x);

/// |H / im λ|.
std::size_t pi0_order(const CrossedModule& x);
/// ker λ, sorted.
std::vector<FiniteGroup::Elem> pi1(const CrossedModule& x);

/// G -> K = {(g, h) : λ(g) = h}, g |-> (g, λg), with K multiplied by
/// (g1, h1)(g2, h2) = (g2 g1^{h2}, h1 h2) and acting on G through h.
struct UnitCrossedModule {
  CrossedModule module;
  /// K element k is the pair (pairs[k].first, pairs[k].second).
  std::vector<std::pair<FiniteGroup::Elem, FiniteGroup::Elem>> pairs;
};
UnitCrossedModule unit_crossed_module(const CrossedModule& x);

// ---- point-model units: objects H, Hom(h, h') = {g : λ(g) h' = h} ----

/// (e, g_φ) with g_φ : e⊗e -> e, i.e. λ(g_φ) = e.
struct NAUnit {
  FiniteGroup::Elem e = 0;
  FiniteGroup::Elem phi = 0;
  bool operator==(const NAUnit&) const = default;
  auto operator<=>(const NAUnit&) const = default;
};

/// f⊗g for f : h1 -> h1', g : h2 -> h2' is g^{h1^{-1}} f.
FiniteGroup::Elem tensor_morphisms(const CrossedModule& x, FiniteGroup::Elem f, FiniteGroup::Elem h1,
                                   FiniteGroup::Elem g);
bool is_unit_morphism(const CrossedModule& x, const NAUnit& s, const NAUnit& t, FiniteGroup::Elem u);

struct NAUnitReport {
  std::vector<NAUnit> units;
  VerificationReport report;
};
NAUnitReport enumerate_units_nonabelian(const CrossedModule& x, const Limits& limits = {});

// ---- cocycle triples ----

/// g over V_1, g' and h over V_0.
struct UnitTriple {
  std::vector<FiniteGroup::Elem> g;
  std::vector<FiniteGroup::Elem> g_prime;
  std::vector<FiniteGroup::Elem> h;
  bool operator==(const UnitTriple&) const = default;
  auto operator<=>(const UnitTriple&) const = default;
};

namespace relation {
inline const std::string triple_unit = "λ(g')=h";
inline const std::string triple_transition = "g=d_1^*(g')^{-1}d_0^*(g')";
inline const std::string triple_cocycle = "d_1^*(g)=d_2^*(g)d_0^*(g)";
inline const std::string triple_boundary = "d_0^*(h)=d_1^*(h)λ(g)";
}  // namespace relation

/// Sizes and ranges only; throws InputError.
void check_triple_shape(const Nerve& n, const CrossedModule& x, const UnitTriple& t);
/// The cocycle conditions; throws CocycleError naming the first one violated.
void validate_unit_triple(const Nerve& n, const CrossedModule& x, const UnitTriple& t);
bool is_unit_triple(const Nerve& n, const CrossedModule& x, const UnitTriple& t);

/// (g1, g1', h1)(g2, g2', h2) = (g2 g1^{d_0^* h2}, g2' g1'^{h2}, h1 h2), pointwise.
UnitTriple h0_group_law(const Nerve& n, const CrossedModule& x, const UnitTriple& t1, const UnitTriple& t2);
UnitTriple identity_triple(const Nerve& n);

/// The triple determined by g' over V_0: h = λ(g'), g = d_1^*(g')^{-1} d_0^*(g').
UnitTriple triple_of(const Nerve& n, const CrossedModule& x, const std::vector<FiniteGroup::Elem>& g_prime);
/// Every valid triple, in lexicographic order of g'.
std::vector<UnitTriple> enumerate_unit_triples(const Nerve& n, const CrossedModule& x, const Limits& limits = {});

}  // namespace unital
