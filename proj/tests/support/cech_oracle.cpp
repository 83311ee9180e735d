#include "cech_oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oracle {

std::size_t TupleNerve::face(int n, int i, std::size_t x) const {
  std::vector<int> t = levels[static_cast<std::size_t>(n)][x];
  t.erase(t.begin() + i);
  const auto& lower = levels[static_cast<std::size_t>(n - 1)];
  auto it = std::find(lower.begin(), lower.end(), t);
  if (it == lower.end()) throw std::logic_error("face not in nerve");
  return static_cast<std::size_t>(it - lower.begin());
}

namespace {

TupleNerve build(int parts, bool (*meets)(int, int, int), int arcs) {
  TupleNerve n;
  for (int len = 1; len <= 4; ++len) {
    std::vector<std::vector<int>> lv;
    std::vector<int> t(static_cast<std::size_t>(len), 0);
    while (true) {
      std::set<int> s(t.begin(), t.end());
      bool ok = s.size() <= 2;
      if (ok && s.size() == 2) ok = meets(*s.begin(), *s.rbegin(), arcs);
      if (ok) lv.push_back(t);
      int p = len - 1;
      while (p >= 0 && t[static_cast<std::size_t>(p)] == parts - 1) t[static_cast<std::size_t>(p--)] = 0;
      if (p < 0) break;
      ++t[static_cast<std::size_t>(p)];
    }
    n.levels.push_back(lv);
  }
  return n;
}

bool never(int, int, int) { return false; }
bool adjacent(int i, int j, int arcs) { return j - i == 1 || (i == 0 && j == arcs - 1); }

int mod(long v, int m) { return static_cast<int>(((v % m) + m) % m); }

// odometer over (Z/m)^k
bool next(std::vector<int>& v, int m) {
  for (std::size_t p = v.size(); p-- > 0;) {
    if (++v[p] < m) return true;
    v[p] = 0;
  }
  return false;
}

}  // namespace

TupleNerve tuple_point() { return build(1, never, 1); }
TupleNerve tuple_circle(int arcs) { return build(arcs, adjacent, arcs); }

BruteTorsors brute_torsor_classes(const TupleNerve& n, int na, int nb, int lam) {
  const std::size_t v0 = n.levels[0].size(), v1 = n.levels[1].size(), v2 = n.levels[2].size();
  std::set<std::vector<int>> cocycles;
  std::vector<int> a(v1, 0);
  do {
    bool ok = true;
    for (std::size_t t = 0; t < v2 && ok; ++t)
      ok = mod(a[n.face(2, 0, t)] + a[n.face(2, 2, t)] - a[n.face(2, 1, t)], na) == 0;
    if (!ok) continue;
    std::vector<int> b(v0, 0);
    do {
      bool good = true;
      for (std::size_t e = 0; e < v1 && good; ++e)
        good = mod(b[n.face(1, 0, e)] - b[n.face(1, 1, e)] - static_cast<long>(lam) * a[e], nb) == 0;
      if (!good) continue;
      std::vector<int> key = a;
      key.insert(key.end(), b.begin(), b.end());
      cocycles.insert(key);
    } while (next(b, nb));
  } while (next(a, na));

  BruteTorsors out;
  out.cocycles = cocycles.size();
  std::set<std::vector<int>> seen;
  for (const auto& c : cocycles) {
    if (seen.count(c)) continue;
    ++out.classes;
    std::vector<int> alpha(v0, 0);
    do {
      std::vector<int> d = c;
      for (std::size_t e = 0; e < v1; ++e) d[e] = mod(d[e] + alpha[n.face(1, 0, e)] - alpha[n.face(1, 1, e)], na);
      for (std::size_t v = 0; v < v0; ++v) d[v1 + v] = mod(d[v1 + v] + static_cast<long>(lam) * alpha[v], nb);
      if (!cocycles.count(d)) throw std::logic_error("action leaves the cocycles");
      seen.insert(d);
    } while (next(alpha, na));
  }
  return out;
}

}  // namespace oracle
