#include "unital/crossed/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "unital/errors.hpp"

namespace unital {

using Elem = FiniteGroup::Elem;

FiniteGroup::FiniteGroup() : FiniteGroup({{0}}, "1") {}

FiniteGroup::FiniteGroup(std::vector<std::vector<Elem>> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InputError("group table is empty");
  if (n > max_order) throw CapExceeded("group order " + std::to_string(n) + " above " + std::to_string(max_order));
  for (const auto& row : table_) {
    if (row.size() != n) throw InputError("group table is not square");
    for (Elem x : row)
      if (x >= n) throw InputError("group table entry out of range");
  }
  for (Elem a = 0; a < n; ++a)
    if (table_[0][a] != a || table_[a][0] != a) throw InputError("element 0 is not the identity");
  inv_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    const auto it = std::find(table_[a].begin(), table_[a].end(), Elem{0});
    if (it == table_[a].end()) throw InputError("element " + std::to_string(a) + " has no inverse");
    inv_[a] = static_cast<Elem>(it - table_[a].begin());
    if (table_[inv_[a]][a] != 0) throw InputError("left and right inverses differ");
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InputError("group table is not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")");
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group of order 0");
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Elem>((a + b) % n);
  return FiniteGroup(std::move(t), "Z/" + std::to_string(n));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<std::size_t>>& gens) {
  using Perm = std::vector<std::size_t>;
  const std::size_t deg = gens.empty() ? 0 : gens.front().size();
  for (const auto& p : gens) {
    if (p.size() != deg) throw InputError("permutations of different degrees");
    Perm s = p;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < deg; ++i)
      if (s[i] != i) throw InputError("not a permutation");
  }
  // composition: (p*q)(i) = q(p(i)), apply p first
  auto compose = [](const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
  };
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, Elem> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Perm p = compose(elems[i], g);
      if (index.emplace(p, static_cast<Elem>(elems.size())).second) {
        elems.push_back(p);
        if (elems.size() > max_order) throw CapExceeded("permutation group too large");
      }
    }
  const std::size_t n = elems.size();
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  if (n < 2) throw InputError("dihedral group needs n >= 2");
  if (n == 2) {
    // rotation and reflection coincide on two points
    FiniteGroup v = product(cyclic(2), cyclic(2));
    v.name_ = "D2";
    return v;
  }
  std::vector<std::size_t> r(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  FiniteGroup g = from_permutations({r, s});
  g.name_ = "D" + std::to_string(n);
  return g;
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n == 0) throw InputError("symmetric group on no points");
  std::vector<std::vector<std::size_t>> gens;
  if (n >= 2) {
    std::vector<std::size_t> t(n), c(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (std::size_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens = {t, c};
  }
  FiniteGroup g = gens.empty() ? FiniteGroup() : from_permutations(gens);
  g.name_ = "S" + std::to_string(n);
  return g;
}

FiniteGroup FiniteGroup::quaternion() {
  // i and j acting on 8 points by left multiplication in Q8, coded as
  // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  const std::vector<std::size_t> i_perm{2, 3, 1, 0, 6, 7, 5, 4};
  const std::vector<std::size_t> j_perm{4, 5, 7, 6, 1, 0, 2, 3};
  FiniteGroup g = from_permutations({i_perm, j_perm});
  g.name_ = "Q8";
  return g;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.size() * h.size();
  if (n > max_order) throw CapExceeded("product group too large");
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem x = g.mul(static_cast<Elem>(a / h.size()), static_cast<Elem>(b / h.size()));
      const Elem y = h.mul(static_cast<Elem>(a % h.size()), static_cast<Elem>(b % h.size()));
      t[a][b] = static_cast<Elem>(x * h.size() + y);
    }
  return FiniteGroup(std::move(t), g.name_ + "x" + h.name_);
}

Elem FiniteGroup::power(Elem a, std::int64_t k) const {
  if (k < 0) return power(inv(a), -k);
  Elem r = 0;
  for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::order_of(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < size(); ++a)
    for (Elem b = 0; b < size(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Elem> FiniteGroup::generated(const std::vector<Elem>& gens) const {
  std::vector<bool> in(size(), false);
  std::vector<Elem> out{0};
  in[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem g : gens) {
      const Elem x = mul(out[i], g);
      if (!in[x]) {
        in[x] = true;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroup::is_normal(const std::vector<Elem>& sub) const {
  std::vector<bool> in(size(), false);
  for (Elem x : sub) in.at(x) = true;
  for (Elem x : sub)
    for (Elem h = 0; h < size(); ++h)
      if (!in[conj(x, h)]) return false;
  return true;
}

std::vector<Elem> FiniteGroup::center() const {
  std::vector<Elem> out;
  for (Elem a = 0; a < size(); ++a) {
    bool central = true;
    for (Elem b = 0; b < size() && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

Quotient quotient(const FiniteGroup& g, const std::vector<Elem>& normal) {
  if (g.generated(normal) != [&] {
        auto s = normal;
        std::sort(s.begin(), s.end());
        return s;
      }())
    throw InputError("quotient by a subset that is not a subgroup");
  if (!g.is_normal(normal)) throw InputError("quotient by a non-normal subgroup");
  const std::size_t n = g.size();
  std::vector<Elem> proj(n, static_cast<Elem>(-1));
  std::vector<Elem> section;
  for (Elem a = 0; a < n; ++a) {
    if (proj[a] != static_cast<Elem>(-1)) continue;
    const Elem c = static_cast<Elem>(section.size());
    section.push_back(a);
    for (Elem k : normal) proj[g.mul(a, k)] = c;
  }
  const std::size_t m = section.size();
  std::vector<std::vector<Elem>> t(m, std::vector<Elem>(m));
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) t[x][y] = proj[g.mul(section[x], section[y])];
  return {FiniteGroup(std::move(t)), std::move(proj), std::move(section)};
}

Subgroup subgroup(const FiniteGroup& g, const std::vector<Elem>& elems) {
  std::vector<Elem> s = elems;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty() || s[0] != 0 || g.generated(s) != s) throw InputError("not a subgroup");
  std::vector<Elem> pos(g.size(), static_cast<Elem>(-1));
  for (std::size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<Elem>(i);
  std::vector<std::vector<Elem>> t(s.size(), std::vector<Elem>(s.size()));
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) t[a][b] = pos[g.mul(s[a], s[b])];
  return {FiniteGroup(std::move(t)), s};
}

bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Elem>& f) {
  if (f.size() != g.size()) return false;
  for (Elem x : f)
    if (x >= h.size()) return false;
  for (Elem a = 0; a < g.size(); ++a)
    for (Elem b = 0; b < g.size(); ++b)
      if (f[g.mul(a, b)] != h.mul(f[a], f[b])) return false;
  return true;
}

}  // namespace unital
