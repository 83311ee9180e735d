#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "unital/abelian/hom.hpp"
#include "unital/abelian/smith.hpp"
#include "unital/errors.hpp"

using namespace unital;

namespace {

void check_smith(const IntMatrix& m) {
  const SmithDecomposition s = smith_normal_form(m);
  REQUIRE(s.U * BigMatrix(m) * s.V == s.D);
  REQUIRE(s.D.is_diagonal());
  REQUIRE(s.U * s.U_inv == BigMatrix::identity(m.rows()));
  REQUIRE(s.V * s.V_inv == BigMatrix::identity(m.cols()));
  const auto du = oracle::determinant(s.U);
  const auto dv = oracle::determinant(s.V);
  REQUIRE((du == 1 || du == -1));
  REQUIRE((dv == 1 || dv == -1));
  const auto d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    REQUIRE(d[i] >= 0);
    if (i + 1 < d.size()) {
      if (d[i] == 0) REQUIRE(d[i + 1] == 0);
      else REQUIRE(d[i + 1] % d[i] == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith form of small examples", "[smith]") {
  const IntMatrix one{{1}};
  const auto s1 = smith_normal_form(one);
  CHECK(s1.D == BigMatrix(one));
  CHECK(s1.U == BigMatrix(one));
  CHECK(s1.V == BigMatrix(one));

  const IntMatrix m{{2, 4}, {-2, 6}};
  const auto s = smith_normal_form(m);
  CHECK(s.diagonal_int() == std::vector<Int>{2, 10});
  const auto count = oracle::coker_brute_force(m, 1000);
  CHECK(count.order == 20);

  const IntMatrix z{{0}};
  CHECK(smith_normal_form(z).D == BigMatrix(z));

  const IntMatrix empty(0, 3);
  check_smith(empty);
  check_smith(IntMatrix(2, 0));
}

TEST_CASE("smith form agrees with determinantal divisors", "[smith][property]") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<Int> entry(-20, 20);
  for (int trial = 0; trial < 150; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    check_smith(m);
    const auto d = smith_normal_form(m).diagonal();
    const auto delta = oracle::determinantal_divisors(m);
    BigInt prod = 1;
    for (std::size_t k = 0; k < d.size(); ++k) {
      prod *= d[k];
      REQUIRE(prod == delta[k]);
    }
  }
}

TEST_CASE("solve and kernel basis", "[smith]") {
  const IntMatrix m{{2, 4, 6}, {1, 1, 1}};
  const auto x = solve_integer(m, {2, 1});
  REQUIRE(x);
  CHECK(m * std::span<const Int>(*x) == Coords{2, 1});
  CHECK_FALSE(solve_integer(IntMatrix{{2}}, {1}));
  const IntMatrix k = integer_kernel_basis(m);
  CHECK(k.cols() == 1);
  CHECK((m * k).is_zero());
}

TEST_CASE("groups are canonical", "[group]") {
  CHECK(FgAbGroup({2, 3}).invariant_factors() == std::vector<Int>{6});
  CHECK(FgAbGroup({4, 6}).invariant_factors() == std::vector<Int>{2, 12});
  CHECK(FgAbGroup({1, 1}).is_trivial());
  CHECK(FgAbGroup({0, 2}).free_rank() == 1);
  CHECK(FgAbGroup({0, 2}).invariant_factors() == std::vector<Int>{2});
  CHECK(FgAbGroup({2}, 1).to_string() == "Z/2 + Z^1");
  CHECK_THROWS_AS(FgAbGroup::free(1).order(), FinitenessError);
  CHECK_THROWS_AS(FgAbGroup::free(1).elements(), FinitenessError);
}

TEST_CASE("element operations", "[group]") {
  const auto z4 = FgAbGroup::cyclic(4);
  CHECK(z4.add({3}, {3}) == Coords{2});
  CHECK(z4.neg({0}) == Coords{0});
  CHECK(z4.neg({1}) == Coords{3});
  CHECK(z4.normalize(z4.normalize({-5})) == z4.normalize({-5}));
  const GroupElem a(z4, {3});
  CHECK((a + a).coords() == Coords{2});
  CHECK((-a).coords() == Coords{1});
  const GroupElem b(FgAbGroup::cyclic(2), {1});
  CHECK_THROWS_AS(a + b, GroupMismatch);
  CHECK_THROWS_AS(z4.add({1, 0}, {1}), GroupMismatch);

  const GroupHom times2(FgAbGroup::cyclic(2), z4, IntMatrix{{2}});
  CHECK(times2.apply(Coords{1}) == Coords{2});
}

TEST_CASE("element enumeration is in index order", "[group]") {
  const FgAbGroup g({2, 4});
  const auto elems = g.elements();
  REQUIRE(elems.size() == 8);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    CHECK(g.index_of(elems[i]) == i);
    if (i) CHECK(elems[i - 1] < elems[i]);
  }
}

TEST_CASE("ill-defined homomorphisms are rejected", "[hom]") {
  CHECK_THROWS_AS(GroupHom(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4), IntMatrix{{1}}), IllDefinedHom);
  CHECK_THROWS_AS(GroupHom(FgAbGroup::cyclic(2), FgAbGroup::free(1), IntMatrix{{1}}), IllDefinedHom);
  CHECK_THROWS_AS(GroupHom(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4), IntMatrix{{2, 0}}), GroupMismatch);
  CHECK_NOTHROW(GroupHom(FgAbGroup::cyclic(4), FgAbGroup::cyclic(2), IntMatrix{{1}}));
  CHECK_NOTHROW(GroupHom(FgAbGroup::free(1), FgAbGroup::cyclic(3), IntMatrix{{2}}));
}

TEST_CASE("kernel examples", "[hom]") {
  const GroupHom mod2(FgAbGroup::cyclic(4), FgAbGroup::cyclic(2), IntMatrix{{1}});
  const auto k = kernel(mod2);
  CHECK(k.group == FgAbGroup::cyclic(2));
  CHECK(k.incl.apply(Coords{1}) == Coords{2});
  CHECK(oracle::kernel_elements(mod2).size() == 2);

  CHECK(kernel(GroupHom::identity(FgAbGroup::cyclic(6))).group.is_trivial());
  CHECK(kernel(GroupHom::zero(FgAbGroup::cyclic(3), FgAbGroup::cyclic(5))).group == FgAbGroup::cyclic(3));

  // Z -> Z/3 has kernel 3Z.
  const GroupHom red(FgAbGroup::free(1), FgAbGroup::cyclic(3), IntMatrix{{1}});
  const auto kz = kernel(red);
  CHECK(kz.group == FgAbGroup::free(1));
  CHECK((kz.incl.apply(Coords{1}) == Coords{3} || kz.incl.apply(Coords{1}) == Coords{-3}));
}

TEST_CASE("cokernel examples", "[hom]") {
  const GroupHom times2(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4), IntMatrix{{2}});
  CHECK(cokernel(times2).group == FgAbGroup::cyclic(2));
  const std::size_t img = oracle::image_elements(times2).size();
  CHECK(4 / img == 2);
  CHECK(cokernel(GroupHom::identity(FgAbGroup::cyclic(4))).group.is_trivial());
  CHECK(cokernel(GroupHom::zero(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4))).group == FgAbGroup::cyclic(4));
}

TEST_CASE("kernel and cokernel against enumeration", "[hom][property]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const FgAbGroup s = oracle::random_group(rng, 64);
    const FgAbGroup t = oracle::random_group(rng, 64);
    const GroupHom f = oracle::random_hom(rng, s, t);
    const auto ker_elems = oracle::kernel_elements(f);
    const auto img_elems = oracle::image_elements(f);
    const auto k = kernel(f);
    const auto q = cokernel(f);
    const auto im = image(f);
    REQUIRE(k.group.order() == ker_elems.size());
    REQUIRE(s.order() == k.group.order() * img_elems.size());
    REQUIRE(t.order() == img_elems.size() * q.group.order());
    REQUIRE(im.group.order() == img_elems.size());
    REQUIRE(compose(f, k.incl).is_zero());
    REQUIRE(compose(q.proj, f).is_zero());
    REQUIRE(k.incl.is_injective());
    REQUIRE(q.proj.is_surjective());
    // incl hits exactly the kernel
    std::set<Coords> hit;
    for (const auto& x : k.group.elements()) hit.insert(k.incl.apply(x));
    REQUIRE(hit == std::set<Coords>(ker_elems.begin(), ker_elems.end()));
    std::set<Coords> im_hit;
    for (const auto& x : im.group.elements()) im_hit.insert(im.incl.apply(x));
    REQUIRE(im_hit == std::set<Coords>(img_elems.begin(), img_elems.end()));
    // kernel structure by element orders
    REQUIRE(oracle::order_census(k.group) == [&] {
      std::map<std::uint64_t, std::uint64_t> c;
      for (const auto& x : ker_elems) ++c[s.element_order(x)];
      return c;
    }());
  }
}

TEST_CASE("preimage and lift_through", "[hom]") {
  const GroupHom times2(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4), IntMatrix{{2}});
  CHECK(preimage(times2, {2}) == Coords{1});
  CHECK_FALSE(preimage(times2, {1}));
  const GroupHom g(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4), IntMatrix{{2}});
  const GroupHom h = lift_through(g, times2);
  CHECK(h == GroupHom::identity(FgAbGroup::cyclic(2)));
  const GroupHom bad(FgAbGroup::cyclic(4), FgAbGroup::cyclic(4), IntMatrix{{1}});
  CHECK_THROWS_AS(lift_through(bad, times2), InputError);
}

TEST_CASE("direct sum examples", "[hom]") {
  const auto s = direct_sum(FgAbGroup::cyclic(2), FgAbGroup::cyclic(3));
  CHECK(s.group().invariant_factors() == std::vector<Int>{6});
  CHECK(oracle::order_census(s.group()) == oracle::order_census(oracle::NaiveGroup{{2, 3}}));
  CHECK(direct_sum(FgAbGroup::cyclic(5), FgAbGroup()).group() == FgAbGroup::cyclic(5));
  CHECK(direct_sum(FgAbGroup::cyclic(2), FgAbGroup::cyclic(2)).group().invariant_factors() == std::vector<Int>{2, 2});
}

TEST_CASE("direct sum structure maps", "[hom][property]") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const FgAbGroup g = oracle::random_group(rng, 24);
    const FgAbGroup h = oracle::random_group(rng, 24);
    const DirectSum s(g, h);
    REQUIRE(compose(s.proj(0), s.inj(0)) == GroupHom::identity(g));
    REQUIRE(compose(s.proj(1), s.inj(1)) == GroupHom::identity(h));
    REQUIRE(compose(s.proj(0), s.inj(1)).is_zero());
    REQUIRE(compose(s.proj(1), s.inj(0)).is_zero());
    REQUIRE(compose(s.inj(0), s.proj(0)) + compose(s.inj(1), s.proj(1)) == GroupHom::identity(s.group()));
    std::vector<Int> moduli = g.invariant_factors();
    moduli.insert(moduli.end(), h.invariant_factors().begin(), h.invariant_factors().end());
    REQUIRE(oracle::order_census(s.group()) == oracle::order_census(oracle::NaiveGroup{moduli}));
    for (const auto& x : s.group().elements()) REQUIRE(s.pack(s.unpack(x)) == x);
  }
}

TEST_CASE("order census recovers invariant factors", "[group]") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const FgAbGroup g = oracle::random_group(rng, 200);
    std::vector<std::uint64_t> orders;
    for (const auto& x : g.elements()) orders.push_back(g.element_order(x));
    REQUIRE(group_from_order_census(orders) == g);
  }
}

TEST_CASE("indexed group tables", "[hom]") {
  const FgAbGroup g({2, 6});
  const IndexedGroup ig(g);
  for (std::uint32_t i = 0; i < ig.size(); ++i)
    for (std::uint32_t j = 0; j < ig.size(); ++j) REQUIRE(ig.element(ig.add(i, j)) == g.add(ig.element(i), ig.element(j)));
  const GroupHom f(g, FgAbGroup::cyclic(2), IntMatrix{{1, 1}});
  const auto t = hom_table(f);
  for (std::uint32_t i = 0; i < ig.size(); ++i) REQUIRE(t[i] == FgAbGroup::cyclic(2).index_of(f.apply(ig.element(i))));
}
