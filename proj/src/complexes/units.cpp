#include "unital/complexes/units.hpp"

#include <utility>

namespace unital {

UnitComplex1 unit_complex_1(const Complex2& x) {
  const GroupHom& lambda = x.lambda();
  DirectSum ab(x.A(), x.B());
  const GroupHom phi = ab.hom_from({lambda, -GroupHom::identity(x.B())});
  KernelResult k = kernel(phi);
  const GroupHom d = lift_through(ab.hom_into({GroupHom::identity(x.A()), lambda}), k.incl);
  return {Complex2(d), std::move(k.incl), std::move(ab)};
}

UnitComplex2 unit_complex_2(const Complex3& x) {
  const GroupHom& delta = x.delta();
  const GroupHom& lambda = x.lambda();
  DirectSum ba(x.B(), x.A());
  DirectSum bc(x.B(), x.C());
  const GroupHom first = ba.hom_into({delta, GroupHom::identity(x.A())});
  const GroupHom second = bc.hom_into({ba.hom_from({GroupHom::identity(x.B()), -delta}),
                                       ba.hom_from({lambda, GroupHom::zero(x.A(), x.C())})});
  KernelResult k = kernel(bc.hom_from({lambda, -GroupHom::identity(x.C())}));
  const GroupHom lifted = lift_through(second, k.incl);
  return {Complex3(first, lifted), std::move(k.incl), std::move(ba), std::move(bc)};
}

StrictMorphism cone_comparison(const Complex2& x) {
  const Complex3 c = cone(StrictMorphism::identity(x));
  const Truncation t = truncate_shift(c);
  const UnitComplex1 u = unit_complex_1(x);
  const DirectSum mid(x.B(), x.A());
  // (b, a') |-> (a', -b)
  const GroupHom swap = u.ambient.hom_into({mid.proj(1), -mid.proj(0)});
  const GroupHom m0 = lift_through(compose(swap, t.incl), u.witness);
  return {t.complex, u.complex, {GroupHom::identity(x.A()), m0}};
}

StrictMorphism unit1_to_id_A(const Complex2& x) {
  const UnitComplex1 u = unit_complex_1(x);
  const GroupHom id = GroupHom::identity(x.A());
  return {u.complex, Complex2(id), {id, compose(u.ambient.proj(0), u.witness)}};
}

StrictMorphism id_A_to_unit1(const Complex2& x) {
  const UnitComplex1 u = unit_complex_1(x);
  const GroupHom id = GroupHom::identity(x.A());
  return {Complex2(id), u.complex, {id, u.complex.lambda()}};
}

StrictMorphism ker_lambda_to_unit1(const Complex2& x) {
  const UnitComplex1 u = unit_complex_1(x);
  const KernelResult k = kernel(x.lambda());
  const GroupHom m0 = lift_through(compose(u.ambient.inj(0), k.incl), u.witness);
  return {Complex2(GroupHom::identity(k.group)), u.complex, {k.incl, m0}};
}

StrictMorphism forgetful_morphism_1(const Complex2& x) {
  const UnitComplex1 u = unit_complex_1(x);
  return {u.complex, x, {GroupHom::identity(x.A()), compose(u.ambient.proj(1), u.witness)}};
}

StrictMorphism forgetful_morphism_2(const Complex3& x) {
  const UnitComplex2 u = unit_complex_2(x);
  return {u.complex, x, {GroupHom::identity(x.A()), u.BA.proj(0), compose(u.BC.proj(1), u.witness)}};
}

Complex3 alternate_complex_1(const Complex3& x) {
  const DirectSum ba(x.B(), x.A());
  const GroupHom first = ba.hom_into({x.delta(), GroupHom::identity(x.A())});
  const GroupHom second = ba.hom_from({GroupHom::identity(x.B()), -x.delta()});
  return Complex3(first, second);
}

Complex3 alternate_complex_2(const Complex3& x) {
  const KernelResult k = kernel(x.lambda());
  const GroupHom delta = lift_through(x.delta(), k.incl);
  const DirectSum ka(k.group, x.A());
  const GroupHom first = ka.hom_into({delta, GroupHom::identity(x.A())});
  const GroupHom second = ka.hom_from({GroupHom::identity(k.group), -delta});
  return Complex3(first, second);
}

StrictMorphism unit2_to_alternate_1(const Complex3& x) {
  const UnitComplex2 u = unit_complex_2(x);
  return {u.complex, alternate_complex_1(x),
          {GroupHom::identity(x.A()), GroupHom::identity(u.BA.group()), compose(u.BC.proj(0), u.witness)}};
}

StrictMorphism alternate_2_to_unit2(const Complex3& x) {
  const UnitComplex2 u = unit_complex_2(x);
  const KernelResult k = kernel(x.lambda());
  const DirectSum ka(k.group, x.A());
  const GroupHom m1 = ka.hom_from({compose(u.BA.inj(0), k.incl), u.BA.inj(1)});
  const GroupHom m0 = lift_through(compose(u.BC.inj(0), k.incl), u.witness);
  return {alternate_complex_2(x), u.complex, {GroupHom::identity(x.A()), m1, m0}};
}

}  // namespace unital
