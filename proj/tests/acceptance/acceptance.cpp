// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cech_oracle.hpp"
#include "crossed_catalog.hpp"
#include "oracles.hpp"
#include "unital/abelian/smith.hpp"
#include "unital/cech/cocycles.hpp"
#include "unital/complexes/units.hpp"
#include "unital/crossed/crossed_module.hpp"
#include "unital/errors.hpp"
#include "unital/picard/models.hpp"

using namespace unital;
using Elem = FiniteGroup::Elem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// big enough that the samples below never hit a cap
Limits wide_limits() {
  Limits l;
  l.max_states = 2'000'000'000;
  return l;
}

const std::vector<Complex2>& sample2() {
  static const std::vector<Complex2> s = [] {
    std::mt19937 rng(20240601);
    std::vector<Complex2> v;
    for (int i = 0; i < 60; ++i) v.push_back(oracle::random_complex2(rng, 36));
    return v;
  }();
  return s;
}

const std::vector<Complex3>& sample3() {
  static const std::vector<Complex3> s = [] {
    std::mt19937 rng(20240602);
    std::vector<Complex3> v;
    for (int i = 0; i < 30; ++i) v.push_back(oracle::random_complex3(rng, 16));
    return v;
  }();
  return s;
}

std::string check_failures(const VerificationReport& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.passed) s += c.name + (c.witness.empty() ? "" : " [" + c.witness + "]") + "; ";
  return s;
}

// 1
Outcome saavedra() {
  Outcome o;
  std::uint64_t units = 0, morphisms = 0;
  for (const auto& x : sample2()) {
    const PicardModel1 m(x);
    const auto rep = verify_contractible_1(m, wide_limits());
    if (!rep.passed()) o.fail(x.to_string() + ": " + check_failures(rep));
    const auto nA = x.A().order();
    const auto us = enumerate_units_1(m, wide_limits());
    if (us.size() != nA) o.fail(x.to_string() + ": unit count");
    if (rep.counts.at("morphisms") != nA * nA) o.fail(x.to_string() + ": morphism count");
    units += us.size();
    morphisms += rep.counts.at("morphisms");
  }
  if (o.ok)
    o.detail = std::to_string(sample2().size()) + " complexes, " + std::to_string(units) + " units, " +
               std::to_string(morphisms) + " unique unit morphisms";
  return o;
}

// 2
Outcome representing_complex_1() {
  Outcome o;
  for (const auto& x : sample2()) {
    const Complex u = unit_complex_1(x).complex;
    for (int d : {-1, 0})
      if (!homology(u, d).is_trivial() || oracle::homology_order(u, d) != 1)
        o.fail(x.to_string() + ": H^" + std::to_string(d) + " nonzero");
    for (const auto& f : {unit1_to_id_A(x), id_A_to_unit1(x), ker_lambda_to_unit1(x)})
      if (!is_quasi_isomorphism(f).is_qiso) o.fail(x.to_string() + ": comparison map is not a quasi-isomorphism");
  }
  if (o.ok) o.detail = std::to_string(sample2().size()) + " complexes, 3 comparison maps each";
  return o;
}

// 3
Outcome cone_identity() {
  Outcome o;
  for (const auto& x : sample2()) {
    const Complex3 c = cone(StrictMorphism::identity(x));
    if (!is_acyclic(c)) o.fail(x.to_string() + ": cone(id) not acyclic");
    const auto f = cone_comparison(x);
    if (!(f.source() == truncate_shift(c).complex) || !(f.target() == unit_complex_1(x).complex) || !is_isomorphism(f))
      o.fail(x.to_string() + ": comparison is not an isomorphism");
  }
  if (o.ok) o.detail = std::to_string(sample2().size()) + " complexes";
  return o;
}

// 4
Outcome joyal_kock() {
  Outcome o;
  std::uint64_t pairs = 0, parallel = 0;
  for (const auto& x : sample3()) {
    const PicardModel2 m(x);
    const auto units = enumerate_units_2(m, wide_limits());
    if (units.empty() || !is_jk_unit(m, JKUnit{x.C().zero(), x.B().zero()})) o.fail(x.to_string() + ": no (0,0) unit");
    const auto rep = verify_contractible_2(m, wide_limits());
    if (!rep.passed()) o.fail(x.to_string() + ": " + check_failures(rep));
    pairs += rep.counts.at("unit_pairs");
    parallel += rep.counts.at("parallel_pairs");
  }
  if (o.ok)
    o.detail = std::to_string(sample3().size()) + " complexes, " + std::to_string(pairs) + " unit pairs, " +
               std::to_string(parallel) + " parallel 1-morphism pairs";
  return o;
}

// 5
Outcome representing_complex_2() {
  Outcome o;
  for (const auto& x : sample3()) {
    const Complex u = unit_complex_2(x).complex;
    for (int d : {-2, -1, 0})
      if (!homology(u, d).is_trivial() || oracle::homology_order(u, d) != 1)
        o.fail(x.to_string() + ": H^" + std::to_string(d) + " nonzero");
    if (!is_quasi_isomorphism(unit2_to_alternate_1(x)).is_qiso) o.fail(x.to_string() + ": alternate 1");
    if (!is_quasi_isomorphism(alternate_2_to_unit2(x)).is_qiso) o.fail(x.to_string() + ": alternate 2");
  }
  if (o.ok) o.detail = std::to_string(sample3().size()) + " complexes, both alternates";
  return o;
}

// 6
Outcome cech() {
  Outcome o;
  std::mt19937 rng(20240603);
  const std::vector<std::pair<std::string, Nerve>> nerves = {{"point", point_nerve()}, {"circle", circle_nerve(3)}};
  std::size_t samples = 0;
  for (int i = 0; i < 12; ++i) {
    const Complex2 x = oracle::random_complex2(rng, 16);
    const Complex3 y = oracle::random_complex3(rng, 16);
    ++samples;
    for (const auto& [name, n] : nerves) {
      const auto u = unit_cocycles(n, x, wide_limits());
      if (u.count != 1) o.fail(name + " " + x.to_string() + ": " + std::to_string(u.count) + " unit classes");
      if (!classify_h0(n, unit_complex_1(x).complex, wide_limits()).is_trivial())
        o.fail(name + " " + x.to_string() + ": H^0 of unit_complex_1 nontrivial");
      if (!classify_h0(n, unit_complex_2(y).complex, wide_limits()).is_trivial())
        o.fail(name + " " + y.to_string() + ": H^0 of unit_complex_2 nontrivial");
    }
  }
  const Complex2 z(GroupHom::zero(FgAbGroup::cyclic(2), FgAbGroup::cyclic(2)));
  const auto t = torsor_classes(circle_nerve(3), z);
  const auto brute = oracle::brute_torsor_classes(oracle::tuple_circle(3), 2, 2, 0);
  if (t.count != 4) o.fail("circle torsor classes: " + std::to_string(t.count));
  if (brute.classes != t.count || brute.cocycles != t.cocycles) o.fail("brute-force enumerator disagrees");
  if (o.ok)
    o.detail = std::to_string(samples) + " pairs of coefficient complexes on point and circle; circle torsors " +
               std::to_string(t.count) + " (brute force " + std::to_string(brute.classes) + ")";
  return o;
}

// 7
Outcome crossed() {
  Outcome o;
  const Nerve p = point_nerve();
  const auto cat = oracle::crossed_catalog(12);
  if (cat.size() < 20) o.fail("catalog too small");
  std::uint64_t products = 0;
  for (const auto& x : cat) {
    const std::string name = x.G.name() + " -> " + x.H.name();
    const auto u = unit_crossed_module(x);
    if (!verify_crossed_module(u.module).passed()) o.fail(name + ": unit crossed module fails the axioms");
    if (pi0_order(u.module) != 1 || pi1(u.module).size() != 1) o.fail(name + ": π_0 or π_1 nontrivial");

    const auto ts = enumerate_unit_triples(p, x);
    const UnitTriple e = identity_triple(p);
    auto inverse = [&](const UnitTriple& a) {
      std::size_t found = 0;
      UnitTriple inv = e;
      for (const auto& b : ts)
        if (h0_group_law(p, x, a, b) == e && h0_group_law(p, x, b, a) == e) {
          ++found;
          inv = b;
        }
      if (found != 1) o.fail(name + ": inverse count " + std::to_string(found));
      return inv;
    };
    std::vector<UnitTriple> invs;
    for (const auto& a : ts) {
      if (!(h0_group_law(p, x, a, e) == a) || !(h0_group_law(p, x, e, a) == a)) o.fail(name + ": identity");
      invs.push_back(inverse(a));
    }
    for (const auto& a : ts)
      for (const auto& b : ts) {
        const auto ab = h0_group_law(p, x, a, b);
        if (!is_unit_triple(p, x, ab)) o.fail(name + ": not closed");
        for (const auto& c : ts) {
          ++products;
          if (!(h0_group_law(p, x, ab, c) == h0_group_law(p, x, a, h0_group_law(p, x, b, c))))
            o.fail(name + ": not associative");
        }
      }
    // t1 t2^{-1} is the unit morphism unit(t1) -> unit(t2), and the law composes them
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = 0; j < ts.size(); ++j) {
        const auto ab = h0_group_law(p, x, ts[i], invs[j]);
        const NAUnit s{ts[i].h[0], ts[i].g_prime[0]}, t{ts[j].h[0], ts[j].g_prime[0]};
        if (!is_unit_morphism(x, s, t, ab.g_prime[0])) o.fail(name + ": law does not give unit morphisms");
        for (std::size_t k = 0; k < ts.size(); ++k) {
          const auto bc = h0_group_law(p, x, ts[j], invs[k]);
          if (x.G.mul(ab.g_prime[0], bc.g_prime[0]) != h0_group_law(p, x, ab, bc).g_prime[0])
            o.fail(name + ": law does not match composition");
        }
      }
  }
  if (o.ok)
    o.detail = std::to_string(cat.size()) + " crossed modules, " + std::to_string(products) +
               " associativity instances on the point nerve";
  return o;
}

// 8
Outcome kernel_parametrization() {
  Outcome o;
  std::size_t abelian = 0, nonabelian = 0;
  for (const auto& x : sample2()) {
    std::vector<Coords> over_zero;
    for (const auto& u : enumerate_units_1(PicardModel1(x), wide_limits()))
      if (x.B().is_zero(u.e)) over_zero.push_back(u.a_phi);
    auto ker = oracle::kernel_elements(x.lambda());
    std::sort(ker.begin(), ker.end());
    std::sort(over_zero.begin(), over_zero.end());
    if (over_zero != ker) o.fail(x.to_string() + ": units over 0 do not match ker λ");
    ++abelian;
  }
  for (const auto& y : sample3()) {
    std::vector<Coords> over_zero;
    for (const auto& u : enumerate_units_2(PicardModel2(y), wide_limits()))
      if (y.C().is_zero(u.e)) over_zero.push_back(u.phi);
    auto ker = oracle::kernel_elements(y.lambda());
    std::sort(ker.begin(), ker.end());
    if (over_zero != ker) o.fail(y.to_string() + ": JK units over 0 do not match ker λ");
    ++abelian;
  }
  for (const auto& x : oracle::crossed_catalog(12)) {
    std::vector<Elem> over_one, ker;
    for (const auto& u : enumerate_units_nonabelian(x).units)
      if (u.e == x.H.identity()) over_one.push_back(u.phi);
    for (Elem g = 0; g < x.G.size(); ++g)
      if (x.lambda(g) == x.H.identity()) ker.push_back(g);
    std::sort(over_one.begin(), over_one.end());
    if (over_one != ker) o.fail(x.G.name() + " -> " + x.H.name() + ": units over 1 do not match ker λ");
    ++nonabelian;
  }
  if (o.ok)
    o.detail = std::to_string(abelian) + " abelian and " + std::to_string(nonabelian) + " crossed-module inputs";
  return o;
}

// 9
Outcome smith() {
  Outcome o;
  std::mt19937 rng(20240604);
  std::uniform_int_distribution<int> dim(1, 6);
  std::size_t brute = 0, infinite = 0, by_divisors = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // alternate small and wide entries so plenty of cokernels are small enough to enumerate
    const Int bound = trial % 2 ? 3 : 30;
    std::uniform_int_distribution<Int> entry(-bound, bound);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    const auto s = smith_normal_form(m);
    const std::string where = "matrix " + std::to_string(trial);
    if (!(s.U * BigMatrix(m) * s.V == s.D) || !s.D.is_diagonal()) o.fail(where + ": U M V != D");
    if (!(s.U * s.U_inv == BigMatrix::identity(m.rows())) || !(s.V * s.V_inv == BigMatrix::identity(m.cols())))
      o.fail(where + ": inverses");
    const auto du = oracle::determinant(s.U), dv = oracle::determinant(s.V);
    if (!(du == 1 || du == -1) || !(dv == 1 || dv == -1)) o.fail(where + ": not unimodular");
    const auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i] < 0 || (d[i] == 0 ? d[i + 1] != 0 : d[i + 1] % d[i] != 0)) o.fail(where + ": divisibility chain");

    // |coker| from the form: product of the diagonal, infinite with fewer than rows nonzero pivots
    BigInt order = 1;
    std::size_t nonzero = 0;
    for (const auto& v : d)
      if (v != 0) {
        order *= v;
        ++nonzero;
      }
    const bool inf = nonzero < m.rows();
    const auto c = oracle::coker_brute_force(m, 200000);
    if (c.infinite != inf) o.fail(where + ": finiteness of the cokernel");
    if (c.infinite) {
      ++infinite;
    } else if (!c.gave_up) {
      ++brute;
      if (BigInt(c.order) != order) o.fail(where + ": |coker| disagrees with enumeration");
    } else {
      ++by_divisors;
      const auto delta = oracle::determinantal_divisors(m);
      if (delta[m.rows() - 1] != order) o.fail(where + ": |coker| disagrees with determinantal divisors");
    }
  }
  if (o.ok)
    o.detail = "200 matrices: " + std::to_string(brute) + " cokernels enumerated, " + std::to_string(infinite) +
               " infinite (rank), " + std::to_string(by_divisors) + " too large, checked by determinantal divisors";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double budget_s;  // 0 = no time bound
  };
  const std::vector<Criterion> criteria = {
      {1, "Saavedra units are contractible", saavedra, 10},
      {2, "unit_complex_1 is acyclic and represents the units", representing_complex_1, 0},
      {3, "truncate_shift(cone(id_X)) is isomorphic to unit_complex_1", cone_identity, 0},
      {4, "Joyal-Kock units are contractible", joyal_kock, 30},
      {5, "unit_complex_2 is acyclic and both alternates are quasi-isomorphic", representing_complex_2, 0},
      {6, "Cech classification of units and torsors", cech, 0},
      {7, "crossed-module units and the h0 group law", crossed, 0},
      {8, "units over the unit object biject with ker λ", kernel_parametrization, 0},
      {9, "Smith normal form", smith, 5},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s)
      o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s");
    std::printf("%s [%d] %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
