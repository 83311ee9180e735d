#include "unital/crossed/crossed_module.hpp"

#include <algorithm>

#include "unital/errors.hpp"
#include "unital/guards.hpp"

namespace unital {

using Elem = FiniteGroup::Elem;

std::vector<std::vector<Elem>> conjugation_action(const FiniteGroup& h) {
  std::vector<std::vector<Elem>> a(h.size(), std::vector<Elem>(h.size()));
  for (Elem y = 0; y < h.size(); ++y)
    for (Elem g = 0; g < h.size(); ++g) a[y][g] = h.conj(g, y);
  return a;
}

std::vector<std::vector<Elem>> trivial_action(const FiniteGroup& g, const FiniteGroup& h) {
  std::vector<std::vector<Elem>> a(h.size(), std::vector<Elem>(g.size()));
  for (auto& row : a)
    for (Elem x = 0; x < g.size(); ++x) row[x] = x;
  return a;
}

namespace {

std::string tuple(std::initializer_list<Elem> xs) {
  std::string s = "(";
  bool first = true;
  for (Elem x : xs) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

VerificationReport verify_crossed_module(const CrossedModule& x) {
  VerificationReport rep;
  const FiniteGroup& G = x.G;
  const FiniteGroup& H = x.H;
  bool shape = x.boundary.size() == G.size() && x.action.size() == H.size();
  for (Elem b : x.boundary) shape = shape && b < H.size();
  for (const auto& row : x.action) {
    shape = shape && row.size() == G.size();
    for (Elem v : row) shape = shape && v < G.size();
  }
  rep.add("boundary and action tables have the right shape", shape);
  if (!shape) return rep;

  std::string w;
  for (Elem a = 0; a < G.size() && w.empty(); ++a)
    for (Elem b = 0; b < G.size() && w.empty(); ++b)
      if (x.lambda(G.mul(a, b)) != H.mul(x.lambda(a), x.lambda(b))) w = "g,g'=" + tuple({a, b});
  rep.add("boundary is a homomorphism", w.empty(), w);

  w.clear();
  for (Elem g = 0; g < G.size() && w.empty(); ++g) {
    if (x.act(g, 0) != g) w = "g^1 != g at g=" + std::to_string(g);
    for (Elem h1 = 0; h1 < H.size() && w.empty(); ++h1)
      for (Elem h2 = 0; h2 < H.size() && w.empty(); ++h2)
        if (x.act(g, H.mul(h1, h2)) != x.act(x.act(g, h1), h2)) w = "g,h1,h2=" + tuple({g, h1, h2});
  }
  rep.add("right action: g^{h1 h2} = (g^{h1})^{h2}", w.empty(), w);

  w.clear();
  for (Elem h = 0; h < H.size() && w.empty(); ++h)
    for (Elem a = 0; a < G.size() && w.empty(); ++a)
      for (Elem b = 0; b < G.size() && w.empty(); ++b)
        if (x.act(G.mul(a, b), h) != G.mul(x.act(a, h), x.act(b, h))) w = "g,g',h=" + tuple({a, b, h});
  rep.add("action by automorphisms", w.empty(), w);

  w.clear();
  for (Elem g = 0; g < G.size() && w.empty(); ++g)
    for (Elem h = 0; h < H.size() && w.empty(); ++h)
      if (x.lambda(x.act(g, h)) != H.conj(x.lambda(g), h)) w = "g,h=" + tuple({g, h});
  rep.add("equivariance λ(g^h) = h^{-1}λ(g)h", w.empty(), w);

  w.clear();
  for (Elem g = 0; g < G.size() && w.empty(); ++g)
    for (Elem g2 = 0; g2 < G.size() && w.empty(); ++g2)
      if (x.act(g, x.lambda(g2)) != G.conj(g, g2)) w = "g,g'=" + tuple({g, g2});
  rep.add("Peiffer identity g^{λ(g')} = g'^{-1} g g'", w.empty(), w);
  return rep;
}

void require_crossed_module(const CrossedModule& x) {
  const auto rep = verify_crossed_module(x);
  for (const auto& c : rep.checks)
    if (!c.passed) throw InputError("not a crossed module: " + c.name + (c.witness.empty() ? "" : " at " + c.witness));
}

std::size_t pi0_order(const CrossedModule& x) {
  std::vector<Elem> img(x.boundary);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return x.H.size() / img.size();
}

std::vector<Elem> pi1(const CrossedModule& x) {
  std::vector<Elem> k;
  for (Elem g = 0; g < x.G.size(); ++g)
    if (x.lambda(g) == 0) k.push_back(g);
  return k;
}

UnitCrossedModule unit_crossed_module(const CrossedModule& x) {
  require_crossed_module(x);
  const FiniteGroup& G = x.G;
  UnitCrossedModule out;
  // K ordered by g, so the identity (1, 1) comes first
  std::vector<Elem> index(G.size());
  for (Elem g = 0; g < G.size(); ++g) {
    index[g] = static_cast<Elem>(out.pairs.size());
    out.pairs.emplace_back(g, x.lambda(g));
  }
  const std::size_t n = out.pairs.size();
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto [g1, h1] = out.pairs[a];
      const auto [g2, h2] = out.pairs[b];
      const Elem g = G.mul(g2, x.act(g1, h2));
      const Elem h = x.H.mul(h1, h2);
      if (x.lambda(g) != h) throw Error("unit crossed module: product left ker(λ inv)");
      t[a][b] = index[g];
    }
  FiniteGroup K(std::move(t), "K");
  std::vector<Elem> boundary(G.size());
  for (Elem g = 0; g < G.size(); ++g) boundary[g] = index[g];
  std::vector<std::vector<Elem>> action(n, std::vector<Elem>(G.size()));
  for (std::size_t k = 0; k < n; ++k)
    for (Elem g = 0; g < G.size(); ++g) action[k][g] = x.act(g, out.pairs[k].second);
  out.module = CrossedModule{G, std::move(K), std::move(boundary), std::move(action)};
  return out;
}

Elem tensor_morphisms(const CrossedModule& x, Elem f, Elem h1, Elem g) {
  return x.G.mul(x.act(g, x.H.inv(h1)), f);
}

bool is_unit_morphism(const CrossedModule& x, const NAUnit& s, const NAUnit& t, Elem u) {
  const FiniteGroup& G = x.G;
  const FiniteGroup& H = x.H;
  if (x.lambda(u) != H.mul(s.e, H.inv(t.e))) return false;
  // (u⊗u) then φ_t  ==  φ_s then u
  return G.mul(tensor_morphisms(x, u, s.e, u), t.phi) == G.mul(s.phi, u);
}

NAUnitReport enumerate_units_nonabelian(const CrossedModule& x, const Limits& limits) {
  require_crossed_module(x);
  if (x.G.size() > limits.max_group_order || x.H.size() > limits.max_group_order)
    throw CapExceeded("crossed module groups above the order cap");
  const FiniteGroup& G = x.G;
  StateCounter counter(limits);
  NAUnitReport out;
  for (Elem e = 0; e < x.H.size(); ++e)
    for (Elem phi = 0; phi < G.size(); ++phi) {
      counter.add();
      if (x.lambda(phi) == e) out.units.push_back({e, phi});
    }
  const auto& units = out.units;
  auto& rep = out.report;
  rep.counts["units"] = units.size();
  rep.add("unit count equals |G|", units.size() == G.size(), std::to_string(units.size()));

  // unique morphism per ordered pair, by scanning G
  std::vector<std::vector<Elem>> mor(units.size(), std::vector<Elem>(units.size()));
  std::string bad;
  std::uint64_t morphisms = 0;
  for (std::size_t s = 0; s < units.size(); ++s)
    for (std::size_t t = 0; t < units.size(); ++t) {
      std::size_t found = 0;
      for (Elem u = 0; u < G.size(); ++u) {
        counter.add();
        if (is_unit_morphism(x, units[s], units[t], u)) {
          mor[s][t] = u;
          ++found;
        }
      }
      morphisms += found;
      if (found != 1 && bad.empty())
        bad = "units " + std::to_string(s) + "," + std::to_string(t) + ": " + std::to_string(found) + " morphisms";
    }
  rep.counts["morphisms"] = morphisms;
  rep.add("exactly one unit morphism per ordered pair", bad.empty(), bad);
  if (!bad.empty()) return out;

  bad.clear();
  for (std::size_t s = 0; s < units.size() && bad.empty(); ++s)
    for (std::size_t t = 0; t < units.size() && bad.empty(); ++t)
      for (std::size_t r = 0; r < units.size() && bad.empty(); ++r) {
        counter.add();
        if (G.mul(mor[s][t], mor[t][r]) != mor[s][r])
          bad = "units " + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(r);
      }
  rep.add("composition coherent", bad.empty(), bad);

  // units over the identity object are exactly ker λ
  std::vector<Elem> over_one;
  for (const auto& u : units)
    if (u.e == 0) over_one.push_back(u.phi);
  rep.add("units with e = 1 biject with ker λ", over_one == pi1(x), std::to_string(over_one.size()));
  rep.counts["states"] = counter.count();
  return out;
}

void check_triple_shape(const Nerve& n, const CrossedModule& x, const UnitTriple& t) {
  if (t.g.size() != n.size(1) || t.g_prime.size() != n.size(0) || t.h.size() != n.size(0))
    throw InputError("triple does not match the nerve");
  for (Elem v : t.g)
    if (v >= x.G.size()) throw InputError("triple entry outside G");
  for (Elem v : t.g_prime)
    if (v >= x.G.size()) throw InputError("triple entry outside G");
  for (Elem v : t.h)
    if (v >= x.H.size()) throw InputError("triple entry outside H");
}

void validate_unit_triple(const Nerve& n, const CrossedModule& x, const UnitTriple& t) {
  check_triple_shape(n, x, t);
  const FiniteGroup& G = x.G;
  const FiniteGroup& H = x.H;
  for (std::size_t v = 0; v < n.size(0); ++v)
    if (x.lambda(t.g_prime[v]) != t.h[v]) throw CocycleError(relation::triple_unit, n.label(0, v));
  for (std::size_t e = 0; e < n.size(1); ++e) {
    const Elem p = t.g_prime[n.face(1, 0, e)], q = t.g_prime[n.face(1, 1, e)];
    if (t.g[e] != G.mul(G.inv(q), p)) throw CocycleError(relation::triple_transition, n.label(1, e));
  }
  for (std::size_t s = 0; s < n.size(2); ++s) {
    const Elem g0 = t.g[n.face(2, 0, s)], g1 = t.g[n.face(2, 1, s)], g2 = t.g[n.face(2, 2, s)];
    if (g1 != G.mul(g2, g0)) throw CocycleError(relation::triple_cocycle, n.label(2, s));
  }
  for (std::size_t e = 0; e < n.size(1); ++e) {
    const Elem h0 = t.h[n.face(1, 0, e)], h1 = t.h[n.face(1, 1, e)];
    if (h0 != H.mul(h1, x.lambda(t.g[e]))) throw CocycleError(relation::triple_boundary, n.label(1, e));
  }
}

bool is_unit_triple(const Nerve& n, const CrossedModule& x, const UnitTriple& t) {
  try {
    validate_unit_triple(n, x, t);
    return true;
  } catch (const CocycleError&) {
    return false;
  }
}

UnitTriple h0_group_law(const Nerve& n, const CrossedModule& x, const UnitTriple& t1, const UnitTriple& t2) {
  check_triple_shape(n, x, t1);
  check_triple_shape(n, x, t2);
  const FiniteGroup& G = x.G;
  UnitTriple out;
  for (std::size_t e = 0; e < n.size(1); ++e) {
    const Elem h2 = t2.h[n.face(1, 0, e)];
    out.g.push_back(G.mul(t2.g[e], x.act(t1.g[e], h2)));
  }
  for (std::size_t v = 0; v < n.size(0); ++v) {
    out.g_prime.push_back(G.mul(t2.g_prime[v], x.act(t1.g_prime[v], t2.h[v])));
    out.h.push_back(x.H.mul(t1.h[v], t2.h[v]));
  }
  return out;
}

UnitTriple identity_triple(const Nerve& n) {
  return {std::vector<Elem>(n.size(1), 0), std::vector<Elem>(n.size(0), 0), std::vector<Elem>(n.size(0), 0)};
}

UnitTriple triple_of(const Nerve& n, const CrossedModule& x, const std::vector<Elem>& g_prime) {
  if (g_prime.size() != n.size(0)) throw InputError("g' does not match the nerve");
  UnitTriple t;
  t.g_prime = g_prime;
  for (Elem v : g_prime) t.h.push_back(x.lambda(v));
  for (std::size_t e = 0; e < n.size(1); ++e)
    t.g.push_back(x.G.mul(x.G.inv(g_prime[n.face(1, 1, e)]), g_prime[n.face(1, 0, e)]));
  return t;
}

std::vector<UnitTriple> enumerate_unit_triples(const Nerve& n, const CrossedModule& x, const Limits& limits) {
  require_crossed_module(x);
  StateCounter counter(limits);
  std::vector<UnitTriple> out;
  std::vector<Elem> gp(n.size(0), 0);
  while (true) {
    counter.add();
    out.push_back(triple_of(n, x, gp));
    std::size_t p = gp.size();
    while (p > 0 && gp[p - 1] + 1 == x.G.size()) gp[--p] = 0;
    if (p == 0) break;
    ++gp[p - 1];
  }
  return out;
}

}  // namespace unital
