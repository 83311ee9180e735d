#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "unital/complexes/complex.hpp"
#include "unital/complexes/units.hpp"
#include "unital/errors.hpp"

using namespace unital;

namespace {

const FgAbGroup Z2 = FgAbGroup::cyclic(2);
const FgAbGroup Z3 = FgAbGroup::cyclic(3);
const FgAbGroup Z4 = FgAbGroup::cyclic(4);

Complex2 times2() { return Complex2(GroupHom(Z2, Z4, IntMatrix{{2}})); }
Complex3 zero_then_id() { return Complex3(GroupHom::zero(Z2, Z2), GroupHom::identity(Z2)); }

void check_homology_against_enumeration(const Complex& x) {
  for (int d = x.min_degree(); d <= 0; ++d) REQUIRE(homology(x, d).order() == oracle::homology_order(x, d));
}

// Every square of f commutes on every element.
void check_squares_exhaustively(const StrictMorphism& f) {
  const Complex& s = f.source();
  const Complex& t = f.target();
  for (int d = s.min_degree(); d < 0; ++d)
    for (const auto& x : s.term(d).elements())
      REQUIRE(f.at(d + 1).apply(s.diff(d).apply(x)) == t.diff(d).apply(f.at(d).apply(x)));
}

}  // namespace

TEST_CASE("homology examples", "[complex]") {
  const Complex2 x = times2();
  CHECK(homology(x, -1).is_trivial());
  CHECK(homology(x, 0) == Z2);
  check_homology_against_enumeration(x);

  const Complex2 id(GroupHom::identity(FgAbGroup({2, 6})));
  CHECK(is_acyclic(id));

  const Complex3 y = zero_then_id();
  CHECK(homology(y, -2) == Z2);
  CHECK(homology(y, -1).is_trivial());
  CHECK(homology(y, 0).is_trivial());
  check_homology_against_enumeration(y);

  CHECK_THROWS_AS(homology(x, -2), InputError);
  CHECK_THROWS_AS(homology(x, 1), InputError);
}

TEST_CASE("complex validation", "[complex]") {
  CHECK_THROWS_AS(Complex3(GroupHom::identity(Z2), GroupHom::identity(Z2)), InputError);
  CHECK_THROWS_AS(Complex3(GroupHom::identity(Z2), GroupHom::identity(Z3)), GroupMismatch);
  const Complex2 x = times2();
  CHECK_THROWS_AS(StrictMorphism(x, x, {GroupHom::identity(Z2), GroupHom::zero(Z4, Z4)}), InputError);
}

TEST_CASE("homology representatives are lexicographically smallest", "[complex]") {
  // Z/4 --x2--> Z/8: H^0 = Z/8 / <2> = Z/2, class of 1 is {1,3,5,7}.
  const Complex2 x(GroupHom(Z4, FgAbGroup::cyclic(8), IntMatrix{{2}}));
  const HomologyData h = homology_data(x, 0);
  REQUIRE(h.group == Z2);
  CHECK(h.representative(h.class_of({5})) == Coords{1});
  CHECK(h.representative(h.group.zero()) == Coords{0});
}

TEST_CASE("homology matches enumeration on random complexes", "[complex][property]") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    check_homology_against_enumeration(oracle::random_complex2(rng, 24));
    check_homology_against_enumeration(oracle::random_complex3(rng, 16));
  }
}

TEST_CASE("unit complex of a 2-term complex", "[units]") {
  const UnitComplex1 u = unit_complex_1(times2());
  CHECK(u.complex.A() == Z2);
  CHECK(u.complex.B() == Z2);
  CHECK(u.complex.lambda().is_iso());
  CHECK(is_acyclic(u.complex));
  // ker(λ - id) = {(0,0), (1,2)}
  std::set<std::vector<Coords>> members;
  for (const auto& k : u.complex.B().elements()) members.insert(u.ambient.unpack(u.witness.apply(k)));
  CHECK(members == std::set<std::vector<Coords>>{{{0}, {0}}, {{1}, {2}}});

  const UnitComplex1 v = unit_complex_1(Complex2(GroupHom::zero(FgAbGroup(), Z3)));
  CHECK(v.complex.A().is_trivial());
  CHECK(v.complex.B().is_trivial());

  const UnitComplex1 w = unit_complex_1(Complex2(GroupHom::zero(Z3, Z4)));
  CHECK(w.complex.B() == Z3);
  CHECK(w.complex.lambda().is_iso());
}

TEST_CASE("unit complex of a 3-term complex", "[units]") {
  const UnitComplex2 u = unit_complex_2(zero_then_id());
  CHECK(is_acyclic(u.complex));
  check_homology_against_enumeration(u.complex);
  CHECK(is_acyclic(unit_complex_2(Complex3(GroupHom::zero(FgAbGroup(), FgAbGroup()), GroupHom::zero(FgAbGroup(), FgAbGroup()))).complex));
  const Complex3 y(GroupHom::identity(Z4), GroupHom::zero(Z4, Z2));
  const UnitComplex2 v = unit_complex_2(y);
  check_homology_against_enumeration(v.complex);
  CHECK(is_acyclic(v.complex));
}

TEST_CASE("unit complexes are acyclic", "[units][property]") {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const Complex2 x = oracle::random_complex2(rng, 16);
    const UnitComplex1 u = unit_complex_1(x);
    REQUIRE(is_acyclic(u.complex));
    check_homology_against_enumeration(u.complex);
    const Complex3 y = oracle::random_complex3(rng, 12);
    const UnitComplex2 v = unit_complex_2(y);
    REQUIRE(is_acyclic(v.complex));
    check_homology_against_enumeration(v.complex);
  }
}

TEST_CASE("cone and truncation", "[cone]") {
  const Complex2 x = times2();
  const Complex3 c = cone(StrictMorphism::identity(x));
  CHECK(is_acyclic(c));
  check_homology_against_enumeration(c);
  const StrictMorphism cmp = cone_comparison(x);
  CHECK(is_isomorphism(cmp));
  check_squares_exhaustively(cmp);

  // cone of 0 -> X
  const Complex2 zero_x(GroupHom::zero(FgAbGroup(), FgAbGroup()));
  const StrictMorphism z(zero_x, x, {GroupHom::zero(FgAbGroup(), Z2), GroupHom::zero(FgAbGroup(), Z4)});
  const Complex3 cz = cone(z);
  CHECK(homology(cz, -1) == homology(x, -1));
  CHECK(homology(cz, 0) == homology(x, 0));

  CHECK(is_acyclic(cone(StrictMorphism::identity(Complex2(GroupHom::zero(FgAbGroup(), Z3))))));

  const Truncation t = truncate_shift(Complex3(GroupHom::zero(Z2, Z3), GroupHom::zero(Z3, Z4)));
  CHECK(t.complex.B() == Z3);
  const Truncation t2 = truncate_shift(zero_then_id());
  CHECK(t2.complex.B().is_trivial());
}

TEST_CASE("cone comparison is an isomorphism", "[cone][property]") {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const Complex2 x = oracle::random_complex2(rng, 24);
    REQUIRE(is_acyclic(cone(StrictMorphism::identity(x))));
    const StrictMorphism cmp = cone_comparison(x);
    REQUIRE(is_isomorphism(cmp));
  }
}

TEST_CASE("quasi-isomorphisms", "[qiso]") {
  const Complex2 x = times2();
  CHECK(is_quasi_isomorphism(id_A_to_unit1(x)).is_qiso);
  CHECK(is_quasi_isomorphism(unit1_to_id_A(x)).is_qiso);
  CHECK(is_quasi_isomorphism(ker_lambda_to_unit1(x)).is_qiso);
  CHECK(is_quasi_isomorphism(StrictMorphism::identity(x)).is_qiso);
  const Complex2 src(GroupHom::zero(FgAbGroup(), Z2));
  const Complex2 dst(GroupHom::zero(FgAbGroup(), FgAbGroup()));
  const auto r = is_quasi_isomorphism(StrictMorphism(src, dst, {GroupHom::zero(FgAbGroup(), FgAbGroup()), GroupHom::zero(Z2, FgAbGroup())}));
  CHECK_FALSE(r.is_qiso);
  CHECK(r.failing_degrees == std::vector<int>{0});
}

TEST_CASE("quasi-isomorphism closure properties", "[qiso][property]") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 25; ++trial) {
    const Complex2 x = oracle::random_complex2(rng, 16);
    const StrictMorphism f = id_A_to_unit1(x);
    const StrictMorphism g = unit1_to_id_A(x);
    REQUIRE(is_quasi_isomorphism(compose(g, f)).is_qiso);
    const StrictMorphism iso = cone_comparison(x);
    REQUIRE(is_quasi_isomorphism(compose(g, iso)).is_qiso);
    const Complex3 y = oracle::random_complex3(rng, 12);
    REQUIRE(is_quasi_isomorphism(unit2_to_alternate_1(y)).is_qiso);
    REQUIRE(is_quasi_isomorphism(alternate_2_to_unit2(y)).is_qiso);
    REQUIRE(is_quasi_isomorphism(compose(unit2_to_alternate_1(y), alternate_2_to_unit2(y))).is_qiso);
  }
}

TEST_CASE("forgetful morphisms", "[forgetful]") {
  const Complex2 x = times2();
  const UnitComplex1 u = unit_complex_1(x);
  const StrictMorphism f = forgetful_morphism_1(x);
  check_squares_exhaustively(f);
  // (1,2) in ker(λ - id) maps to 2 in B
  for (const auto& k : u.complex.B().elements()) {
    const auto parts = u.ambient.unpack(u.witness.apply(k));
    CHECK(f.at(0).apply(k) == parts[1]);
    if (parts[0] == Coords{1}) CHECK(f.at(0).apply(k) == Coords{2});
  }
  const StrictMorphism ft = forgetful_morphism_1(Complex2(GroupHom::zero(FgAbGroup(), FgAbGroup())));
  CHECK(ft.at(0).is_zero());
  check_squares_exhaustively(forgetful_morphism_2(zero_then_id()));
}
