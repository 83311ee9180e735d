#pragma once

#include "unital/complexes/complex.hpp"

namespace unital {

/// A --(a, λa)--> ker(A+B -> B, (a,b) |-> λa - b).
struct UnitComplex1 {
  Complex2 complex;
  /// ker(λ - id_B) -> A+B.
  GroupHom witness;
  DirectSum ambient;
};
UnitComplex1 unit_complex_1(const Complex2& x);

/// A --(δa, a)--> B+A --(b - δa, λb)--> ker(B+C -> C, (b,c) |-> λb - c).
struct UnitComplex2 {
  Complex3 complex;
  /// ker(λ - id_C) -> B+C.
  GroupHom witness;
  DirectSum BA;
  DirectSum BC;
};
UnitComplex2 unit_complex_2(const Complex3& x);

/// Comparison truncate_shift(cone(id_X)) -> unit_complex_1(X):
/// id on A, (b, a') |-> (a', -b).
StrictMorphism cone_comparison(const Complex2& x);

/// unit_complex_1(X) -> (A --id--> A): id_A, (a, b) |-> a.
StrictMorphism unit1_to_id_A(const Complex2& x);
/// (A --id--> A) -> unit_complex_1(X): id_A, a |-> (a, λa).
StrictMorphism id_A_to_unit1(const Complex2& x);
/// (ker λ --id--> ker λ) -> unit_complex_1(X): incl, k |-> (k, 0).
StrictMorphism ker_lambda_to_unit1(const Complex2& x);

/// unit_complex_1(X) -> X: id_A, pr_B.
StrictMorphism forgetful_morphism_1(const Complex2& x);
/// unit_complex_2(X) -> X: id_A, pr_B, pr_C.
StrictMorphism forgetful_morphism_2(const Complex3& x);

/// A --(δa, a)--> B+A --(b - δa)--> B.
Complex3 alternate_complex_1(const Complex3& x);
/// A --(δa, a)--> ker λ + A --(k - δa)--> ker λ.
Complex3 alternate_complex_2(const Complex3& x);
/// unit_complex_2(X) -> alternate_complex_1(X): id_A, id, (b, c) |-> b.
StrictMorphism unit2_to_alternate_1(const Complex3& x);
/// alternate_complex_2(X) -> unit_complex_2(X): id_A, (k, a) |-> (k, a), k |-> (k, 0).
StrictMorphism alternate_2_to_unit2(const Complex3& x);

}  // namespace unital
