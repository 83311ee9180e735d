#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "unital/complexes/units.hpp"
#include "unital/errors.hpp"
#include "unital/picard/models.hpp"

using namespace unital;

namespace {

const FgAbGroup Z2 = FgAbGroup::cyclic(2);
const FgAbGroup Z3 = FgAbGroup::cyclic(3);
const FgAbGroup Z4 = FgAbGroup::cyclic(4);

PicardModel1 times2() { return PicardModel1(Complex2(GroupHom(Z2, Z4, IntMatrix{{2}}))); }
PicardModel1 zero3() { return PicardModel1(Complex2(GroupHom::zero(Z3, Z3))); }
PicardModel2 zero_then_id() { return PicardModel2(Complex3(GroupHom::zero(Z2, Z2), GroupHom::identity(Z2))); }

// All (e, a) in B x A with λa = e, by scanning pairs.
std::vector<SaavedraUnit> scan_units(const PicardModel1& m) {
  std::vector<SaavedraUnit> out;
  for (const auto& e : m.B().elements())
    for (const auto& a : m.A().elements())
      if (m.base().lambda().apply(a) == e) out.push_back({e, a});
  return out;
}

// u in A with λu = e_s - e_t and 2u + a_t = a_s + u, by scanning A.
std::vector<Coords> scan_unit_morphisms(const PicardModel1& m, const SaavedraUnit& s, const SaavedraUnit& t) {
  const auto& A = m.A();
  std::vector<Coords> out;
  for (const auto& u : A.elements()) {
    if (m.base().lambda().apply(u) != m.B().sub(s.e, t.e)) continue;
    if (A.add(A.add(u, u), t.a_phi) == A.add(s.a_phi, u)) out.push_back(u);
  }
  return out;
}

}  // namespace

TEST_CASE("Saavedra units of small models", "[saavedra]") {
  const auto m = times2();
  const auto units = enumerate_units_1(m);
  CHECK(units == std::vector<SaavedraUnit>{{{0}, {0}}, {{2}, {1}}});
  CHECK(units == scan_units(m));

  const auto z = zero3();
  CHECK(enumerate_units_1(z) == std::vector<SaavedraUnit>{{{0}, {0}}, {{0}, {1}}, {{0}, {2}}});
  CHECK(enumerate_units_1(z).size() == kernel(z.base().lambda()).group.order());

  const PicardModel1 t(Complex2(GroupHom::zero(FgAbGroup(), Z4)));
  CHECK(enumerate_units_1(t) == std::vector<SaavedraUnit>{{{0}, {}}});

  CHECK_THROWS_AS(enumerate_units_1(PicardModel1(Complex2(GroupHom::zero(FgAbGroup::free(1), Z2)))), FinitenessError);
}

TEST_CASE("unit morphisms of small models", "[saavedra]") {
  const auto m = times2();
  const SaavedraUnit s{{0}, {0}};
  const SaavedraUnit t{{2}, {1}};
  const auto ms = unit_morphisms_1(m, s, t);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].u == Coords{1});
  CHECK(scan_unit_morphisms(m, s, t) == std::vector<Coords>{{1}});
  CHECK(unit_morphisms_1(m, t, t).at(0).u == Coords{0});

  const auto z = zero3();
  const auto mz = unit_morphisms_1(z, {{0}, {1}}, {{0}, {2}});
  REQUIRE(mz.size() == 1);
  CHECK(mz[0].u == Coords{2});
  const auto [p1, p2] = unit_square_1(z, {{0}, {1}}, {{0}, {2}}, {2});
  CHECK(p1 == p2);
  const auto [q1, q2] = unit_square_1(z, {{0}, {1}}, {{0}, {2}}, {1});
  CHECK_FALSE(q1 == q2);
}

TEST_CASE("tensor of Saavedra units", "[saavedra]") {
  const auto m = times2();
  const SaavedraUnit u{{2}, {1}};
  CHECK(tensor_units_1(m, u, u) == SaavedraUnit{{0}, {0}});
  CHECK(tensor_units_1(m, u, canonical_unit(m)) == u);
  const auto z = zero3();
  CHECK(tensor_units_1(z, {{0}, {1}}, {{0}, {2}}) == SaavedraUnit{{0}, {0}});
}

TEST_CASE("canonical unit and morphisms into it", "[saavedra]") {
  const auto m = times2();
  const auto e = canonical_unit(m);
  CHECK(e == SaavedraUnit{{0}, {0}});
  for (const auto& s : enumerate_units_1(m)) {
    const auto ms = unit_morphisms_1(m, s, e);
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].u == s.a_phi);
    CHECK(tensor_units_1(m, s, e) == s);
  }
}

TEST_CASE("Saavedra model properties on random complexes", "[saavedra][property]") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const PicardModel1 m(oracle::random_complex2(rng, 16));
    const auto units = enumerate_units_1(m);
    REQUIRE(units == scan_units(m));
    REQUIRE(units.size() == m.A().order());
    const auto rep = verify_contractible_1(m);
    REQUIRE(rep.passed());
    REQUIRE(rep.counts.at("morphisms") == units.size() * units.size());
    for (const auto& s : units)
      for (const auto& t : units) {
        const auto ms = unit_morphisms_1(m, s, t);
        REQUIRE(ms.size() == 1);
        REQUIRE(std::vector<Coords>{ms[0].u} == scan_unit_morphisms(m, s, t));
        REQUIRE(ms[0].u == m.A().sub(s.a_phi, t.a_phi));
        REQUIRE(tensor_units_1_composite(m, s, t) == tensor_units_1(m, s, t));
      }
    // functoriality of the tensor on unit morphisms
    for (const auto& s : units)
      for (const auto& t : units) {
        const auto& s2 = units.front();
        const auto& t2 = units.back();
        const auto lhs = unit_morphisms_1(m, tensor_units_1(m, s, s2), tensor_units_1(m, t, t2)).at(0).u;
        const auto rhs = m.A().add(unit_morphisms_1(m, s, t).at(0).u, unit_morphisms_1(m, s2, t2).at(0).u);
        REQUIRE(lhs == rhs);
      }
    // one isomorphism class, as H^0 of the unit complex
    REQUIRE(homology(unit_complex_1(m.base()).complex, 0).is_trivial());
  }
}

TEST_CASE("contractibility reports for small models", "[saavedra]") {
  const auto r = verify_contractible_1(times2());
  CHECK(r.passed());
  CHECK(r.counts.at("units") == 2);
  CHECK(r.counts.at("morphisms") == 4);
  const auto r0 = verify_contractible_1(PicardModel1(Complex2(GroupHom::zero(FgAbGroup(), FgAbGroup()))));
  CHECK(r0.passed());
  CHECK(r0.counts.at("units") == 1);
  const auto r3 = verify_contractible_1(zero3());
  CHECK(r3.passed());
  CHECK(r3.counts.at("morphisms") == 9);
}

TEST_CASE("Joyal-Kock units of small models", "[jk]") {
  const auto m = zero_then_id();
  CHECK(enumerate_units_2(m) == std::vector<JKUnit>{{{0}, {0}}, {{1}, {1}}});
  const PicardModel2 c_triv(Complex3(GroupHom::zero(Z2, Z3), GroupHom::zero(Z3, FgAbGroup())));
  const auto u = enumerate_units_2(c_triv);
  CHECK(u.size() == 3);
  for (const auto& x : u) CHECK(x.e.empty());
  const PicardModel2 b_triv(Complex3(GroupHom::zero(Z2, FgAbGroup()), GroupHom::zero(FgAbGroup(), Z3)));
  CHECK(enumerate_units_2(b_triv) == std::vector<JKUnit>{{{0}, {}}});
}

TEST_CASE("Joyal-Kock unit 1- and 2-morphisms", "[jk]") {
  const auto m = zero_then_id();
  const JKUnit s{{0}, {0}};
  const JKUnit t{{1}, {1}};
  const auto ms = unit_1morphisms(m, s, t);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].f == Coords{1});
  CHECK(ms[0].theta == Coords{0});
  CHECK(ms[1].f == Coords{1});
  CHECK(ms[1].theta == Coords{1});
  const auto g = unit_2morphisms(m, ms[0], ms[1]);
  REQUIRE(g.size() == 1);
  CHECK(g[0].gamma == Coords{1});
  // γ found by scanning A against the pasting equation directly
  std::vector<Coords> scan;
  for (const auto& x : m.A().elements()) {
    const auto [l, r] = pastings(m, ms[0], ms[1], x);
    if (l == r) scan.push_back(x);
  }
  CHECK(scan == std::vector<Coords>{{1}});
  const auto id = unit_2morphisms(m, ms[0], ms[0]);
  REQUIRE(id.size() == 1);
  CHECK(id[0].gamma == Coords{0});
}

TEST_CASE("theta orientation", "[jk]") {
  // θ : (f⊗f);φ_t => φ_s;f, so δθ is the difference of the two evaluated paths.
  std::mt19937 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const PicardModel2 m(oracle::random_complex3(rng, 8));
    const auto units = enumerate_units_2(m);
    for (const auto& s : units)
      for (const auto& t : units)
        for (const auto& mor : unit_1morphisms(m, s, t)) {
          const auto [p1, p2] = unit_morphism_paths(m, s, t, mor.f);
          REQUIRE(m.delta(mor.theta) == m.B().sub(p1.b, p2.b));
          REQUIRE(m.delta(mor.theta) == m.B().sub(m.B().add(mor.f, t.phi), s.phi));
        }
  }
}

TEST_CASE("tensor of Joyal-Kock units", "[jk]") {
  const auto m = zero_then_id();
  CHECK(tensor_units_2(m, {{1}, {1}}, {{1}, {1}}) == JKUnit{{0}, {0}});
  CHECK(tensor_units_2(m, {{1}, {1}}, canonical_unit(m)) == JKUnit{{1}, {1}});
  CHECK(verify_contractible_2(m).passed());
}

TEST_CASE("Joyal-Kock model properties on random complexes", "[jk][property]") {
  std::mt19937 rng(81);
  for (int trial = 0; trial < 15; ++trial) {
    const PicardModel2 m(oracle::random_complex3(rng, 6));
    const auto units = enumerate_units_2(m);
    REQUIRE(units.size() == m.B().order());
    const auto rep = verify_contractible_2(m);
    REQUIRE(rep.passed());
    std::uint64_t total = 0;
    for (const auto& s : units)
      for (const auto& t : units) {
        const auto ms = unit_1morphisms(m, s, t);
        REQUIRE(!ms.empty());
        total += ms.size();
        const UnitMorphism2 w{s, t, m.B().sub(s.phi, t.phi), m.A().zero()};
        REQUIRE(is_unit_morphism(m, w));
        for (const auto& a : ms)
          for (const auto& b : ms) {
            REQUIRE(m.delta(m.A().sub(a.theta, b.theta)) == m.B().sub(a.f, b.f));
            const auto g = unit_2morphisms(m, a, b);
            REQUIRE(g.size() == 1);
            REQUIRE(g[0].gamma == m.A().sub(a.theta, b.theta));
          }
        for (const auto& r : units) {
          const auto c = compose_unit_morphisms(m, ms.front(), unit_1morphisms(m, t, r).front());
          REQUIRE(is_unit_morphism(m, c));
        }
      }
    REQUIRE(rep.counts.at("one_morphisms") == total);
    REQUIRE(homology(unit_complex_2(m.base()).complex, 0).is_trivial());
  }
}
