#include <algorithm>
#include <functional>
#include <limits>

#include "unital/cech/cocycles.hpp"
#include "unital/errors.hpp"
#include "unital/guards.hpp"

namespace unital {

namespace {

using Assign = std::vector<std::uint32_t>;
using Check = std::function<bool(const Assign&)>;

// Depth-first search over variables in order, values ascending, so the
// solutions come out sorted.
struct Search {
  std::vector<const IndexedGroup*> dom;
  std::vector<std::vector<Check>> checks;
  StateCounter* counter = nullptr;
  std::vector<Assign> found;
  Assign cur;

  void run() {
    cur.assign(dom.size(), 0);
    go(0);
  }
  void go(std::size_t v) {
    if (v == dom.size()) {
      found.push_back(cur);
      return;
    }
    for (std::uint32_t i = 0; i < dom[v]->size(); ++i) {
      counter->add();
      cur[v] = i;
      bool ok = true;
      for (const auto& c : checks[v])
        if (!c(cur)) {
          ok = false;
          break;
        }
      if (ok) go(v + 1);
    }
  }
};

struct Quotient {
  std::vector<std::size_t> reps;
  std::vector<std::size_t> class_of;
  FgAbGroup group;
};

std::size_t locate(const std::vector<Assign>& sorted, const Assign& x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || *it != x) throw Error("coboundary action left the cocycle set");
  return static_cast<std::size_t>(it - sorted.begin());
}

// Orbits of the action of A^{V_0}, plus the class group by an order census.
Quotient quotient(const Search& s, const IndexedGroup& A, std::size_t vertices,
                  const std::function<Assign(const Assign&, const Assign&)>& act, StateCounter& counter) {
  std::uint64_t actions = 1;
  for (std::size_t v = 0; v < vertices; ++v) {
    if (actions > std::numeric_limits<std::uint64_t>::max() / A.size()) throw CapExceeded("coboundary group too large");
    actions *= A.size();
  }
  const auto& found = s.found;
  Quotient q;
  const std::size_t none = static_cast<std::size_t>(-1);
  q.class_of.assign(found.size(), none);
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (q.class_of[i] != none) continue;
    const std::size_t c = q.reps.size();
    q.reps.push_back(i);
    Assign alpha(vertices, 0);
    for (std::uint64_t k = 0; k < actions; ++k) {
      counter.add();
      q.class_of[locate(found, act(found[i], alpha))] = c;
      for (std::size_t p = vertices; p-- > 0;) {
        if (++alpha[p] < A.size()) break;
        alpha[p] = 0;
      }
    }
  }
  // classes form a group under componentwise addition
  const Assign zero(s.dom.size(), 0);
  const std::size_t zero_class = q.class_of[locate(found, zero)];
  std::vector<std::uint64_t> census;
  for (std::size_t r : q.reps) {
    Assign x = found[r];
    std::uint64_t k = 1;
    while (q.class_of[locate(found, x)] != zero_class) {
      for (std::size_t v = 0; v < x.size(); ++v) x[v] = s.dom[v]->add(x[v], found[r][v]);
      ++k;
      counter.add();
    }
    census.push_back(k);
  }
  q.group = group_from_order_census(census);
  return q;
}

SheafSections to_sections(const IndexedGroup& g, int level, const Assign& x, std::size_t start, std::size_t stride,
                          std::size_t count) {
  SheafSections s{g.group(), level, {}};
  for (std::size_t i = 0; i < count; ++i) s.values.push_back(g.element(x[start + i * stride]));
  return s;
}

struct Tables {
  IndexedGroup A;
  IndexedGroup B;
  std::vector<std::uint32_t> lambda;
  Tables(const Complex2& x, const Limits& limits)
      : A((require_enumerable(x.A(), limits, "A"), x.A())),
        B((require_enumerable(x.B(), limits, "B"), x.B())),
        lambda(hom_table(x.lambda())) {}
};

// Triangle relation d_0^*a + d_2^*a = d_1^*a, attached to whichever of its
// three edges is assigned last. `edge_var` maps an edge to its variable.
void add_triangle_checks(const Nerve& n, const IndexedGroup& A, Search& s,
                         const std::function<std::size_t(std::size_t)>& edge_var) {
  for (std::size_t t = 0; t < n.size(2); ++t) {
    const std::size_t e0 = edge_var(n.face(2, 0, t));
    const std::size_t e1 = edge_var(n.face(2, 1, t));
    const std::size_t e2 = edge_var(n.face(2, 2, t));
    s.checks[std::max({e0, e1, e2})].push_back(
        [&A, e0, e1, e2](const Assign& x) { return A.add(x[e0], x[e2]) == x[e1]; });
  }
}

}  // namespace

TorsorClasses torsor_classes(const Nerve& n, const Complex2& x, const Limits& limits) {
  const Tables tb(x, limits);
  const std::size_t nv = n.size(0), ne = n.size(1);
  StateCounter counter(limits);
  // variables: b over V_0, then a over V_1
  Search s;
  s.counter = &counter;
  s.dom.assign(nv, &tb.B);
  s.dom.insert(s.dom.end(), ne, &tb.A);
  s.checks.resize(nv + ne);
  for (std::size_t e = 0; e < ne; ++e) {
    const std::size_t v0 = n.face(1, 0, e), v1 = n.face(1, 1, e), ve = nv + e;
    s.checks[ve].push_back(
        [&tb, v0, v1, ve](const Assign& a) { return a[v0] == tb.B.add(a[v1], tb.lambda[a[ve]]); });
  }
  add_triangle_checks(n, tb.A, s, [nv](std::size_t e) { return nv + e; });
  s.run();

  auto act_idx = [&](const Assign& c, const Assign& alpha) {
    Assign out = c;
    for (std::size_t v = 0; v < nv; ++v) out[v] = tb.B.add(c[v], tb.lambda[alpha[v]]);
    for (std::size_t e = 0; e < ne; ++e)
      out[nv + e] = tb.A.add(c[nv + e], tb.A.sub(alpha[n.face(1, 0, e)], alpha[n.face(1, 1, e)]));
    return out;
  };
  const Quotient q = quotient(s, tb.A, nv, act_idx, counter);

  TorsorClasses out;
  out.count = q.reps.size();
  out.group = q.group;
  out.cocycles = s.found.size();
  for (std::size_t r : q.reps) {
    const Assign& c = s.found[r];
    out.representatives.push_back({to_sections(tb.A, 1, c, nv, 1, ne), to_sections(tb.B, 0, c, 0, 1, nv)});
  }
  out.states = counter.count();
  return out;
}

UnitClasses unit_cocycles(const Nerve& n, const Complex2& x, const Limits& limits) {
  const Tables tb(x, limits);
  const std::size_t nv = n.size(0), ne = n.size(1);
  StateCounter counter(limits);
  // variables: a_φ(v), b(v) for each vertex, then a over V_1
  auto aphi = [](std::size_t v) { return 2 * v; };
  auto bv = [](std::size_t v) { return 2 * v + 1; };
  Search s;
  s.counter = &counter;
  for (std::size_t v = 0; v < nv; ++v) {
    s.dom.push_back(&tb.A);
    s.dom.push_back(&tb.B);
  }
  s.dom.insert(s.dom.end(), ne, &tb.A);
  s.checks.resize(2 * nv + ne);
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t p = aphi(v), b = bv(v);
    s.checks[b].push_back([&tb, p, b](const Assign& c) { return tb.lambda[c[p]] == c[b]; });
  }
  for (std::size_t e = 0; e < ne; ++e) {
    const std::size_t v0 = n.face(1, 0, e), v1 = n.face(1, 1, e), ve = 2 * nv + e;
    s.checks[ve].push_back([&tb, ve, p0 = aphi(v0), p1 = aphi(v1)](const Assign& c) {
      return c[ve] == tb.A.sub(c[p0], c[p1]);
    });
    s.checks[ve].push_back([&tb, ve, b0 = bv(v0), b1 = bv(v1)](const Assign& c) {
      return c[b0] == tb.B.add(c[b1], tb.lambda[c[ve]]);
    });
  }
  add_triangle_checks(n, tb.A, s, [nv](std::size_t e) { return 2 * nv + e; });
  s.run();

  auto act_idx = [&](const Assign& c, const Assign& alpha) {
    Assign out = c;
    for (std::size_t v = 0; v < nv; ++v) {
      out[aphi(v)] = tb.A.add(c[aphi(v)], alpha[v]);
      out[bv(v)] = tb.B.add(c[bv(v)], tb.lambda[alpha[v]]);
    }
    for (std::size_t e = 0; e < ne; ++e)
      out[2 * nv + e] = tb.A.add(c[2 * nv + e], tb.A.sub(alpha[n.face(1, 0, e)], alpha[n.face(1, 1, e)]));
    return out;
  };
  const Quotient q = quotient(s, tb.A, nv, act_idx, counter);

  UnitClasses out;
  out.count = q.reps.size();
  out.group = q.group;
  out.cocycles = s.found.size();
  for (std::size_t r : q.reps) {
    const Assign& c = s.found[r];
    out.representatives.push_back({to_sections(tb.A, 1, c, 2 * nv, 1, ne), to_sections(tb.A, 0, c, 0, 2, nv),
                                   to_sections(tb.B, 0, c, 1, 2, nv)});
  }
  out.states = counter.count();
  return out;
}

}  // namespace unital
