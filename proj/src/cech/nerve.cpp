#include "unital/cech/nerve.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "unital/errors.hpp"

namespace unital {

Nerve::Nerve(std::vector<std::vector<Simplex>> levels, std::vector<std::vector<std::vector<std::size_t>>> faces)
    : levels_(std::move(levels)), faces_(std::move(faces)) {
  if (levels_.size() != top_level + 1 || faces_.size() != top_level)
    throw InputError("nerve needs levels 0.." + std::to_string(top_level));
  for (std::size_t n = 0; n < faces_.size(); ++n) {
    if (faces_[n].size() != n + 2) throw InputError("wrong number of face maps at level " + std::to_string(n + 1));
    for (const auto& d : faces_[n]) {
      if (d.size() != levels_[n + 1].size()) throw InputError("face map has the wrong domain size");
      for (std::size_t y : d)
        if (y >= levels_[n].size()) throw InputError("face map value out of range");
    }
  }
  if (auto v = simplicial_violation()) throw InputError("simplicial identity fails: " + *v);
}

bool Nerve::is_degenerate(int level, std::size_t x) const {
  const auto& p = simplex(level, x).parts;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] == p[i + 1]) return true;
  return false;
}

std::size_t Nerve::nondegenerate_count() const {
  std::size_t n = 0;
  for (int l = 0; l <= top_level; ++l)
    for (std::size_t x = 0; x < size(l); ++x) n += !is_degenerate(l, x);
  return n;
}

std::optional<std::string> Nerve::simplicial_violation() const {
  // level of x is n+2; d_j lands in n+1, then d_i in n
  for (int n = 0; n + 2 <= top_level; ++n)
    for (std::size_t x = 0; x < size(n + 2); ++x)
      for (std::size_t j = 1; j <= static_cast<std::size_t>(n + 2); ++j)
        for (std::size_t i = 0; i < j; ++i) {
          const std::size_t lhs = face(n + 1, i, face(n + 2, j, x));
          const std::size_t rhs = face(n + 1, j - 1, face(n + 2, i, x));
          if (lhs != rhs)
            return "d_" + std::to_string(i) + " d_" + std::to_string(j) + " != d_" + std::to_string(j - 1) + " d_" +
                   std::to_string(i) + " on " + label(n + 2, x);
        }
  return std::nullopt;
}

Nerve Nerve::relabeled(const std::vector<std::vector<std::size_t>>& perms) const {
  if (perms.size() != levels_.size()) throw InputError("relabeling needs one permutation per level");
  std::vector<std::vector<Simplex>> lv(levels_.size());
  for (std::size_t n = 0; n < levels_.size(); ++n) {
    if (perms[n].size() != levels_[n].size()) throw InputError("relabeling has the wrong size");
    lv[n].resize(levels_[n].size());
    std::vector<bool> hit(levels_[n].size());
    for (std::size_t x = 0; x < levels_[n].size(); ++x) {
      const std::size_t y = perms[n][x];
      if (y >= hit.size() || hit[y]) throw InputError("relabeling is not a permutation");
      hit[y] = true;
      lv[n][y] = levels_[n][x];
    }
  }
  auto fc = faces_;
  for (std::size_t n = 0; n < faces_.size(); ++n)
    for (std::size_t i = 0; i < faces_[n].size(); ++i)
      for (std::size_t x = 0; x < faces_[n][i].size(); ++x) fc[n][i][perms[n + 1][x]] = perms[n][faces_[n][i][x]];
  return Nerve(std::move(lv), std::move(fc));
}

std::string Nerve::label(int level, std::size_t x) const {
  const auto& s = simplex(level, x);
  std::string out = "(";
  for (std::size_t i = 0; i < s.parts.size(); ++i) out += (i ? "," : "") + std::to_string(s.parts[i]);
  out += ")";
  if (s.component) out += "#" + std::to_string(s.component);
  return out;
}

namespace {

using PartSet = std::vector<std::size_t>;

struct Table {
  std::map<PartSet, std::size_t> components;
  std::map<PartSet, std::vector<std::vector<std::size_t>>> parents;

  std::size_t count(const PartSet& s) const {
    if (s.size() == 1) return 1;
    auto it = components.find(s);
    return it == components.end() ? 0 : it->second;
  }
  std::size_t parent(const PartSet& s, std::size_t c, std::size_t removed) const {
    const auto pos = static_cast<std::size_t>(std::find(s.begin(), s.end(), removed) - s.begin());
    auto it = parents.find(s);
    if (it == parents.end() || it->second.empty()) return 0;
    return it->second.at(c).at(pos);
  }
};

PartSet support(const std::vector<std::size_t>& t) {
  PartSet s(t.begin(), t.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

Nerve cech_nerve(const Cover& cover, const Limits& limits) {
  const std::size_t k = cover.parts.size();
  if (k == 0) throw InputError("cover has no parts");
  Table table;
  for (const auto& in : cover.intersections) {
    if (in.parts.size() < 2) throw InputError("intersection needs at least two parts");
    if (!std::is_sorted(in.parts.begin(), in.parts.end()) ||
        std::adjacent_find(in.parts.begin(), in.parts.end()) != in.parts.end())
      throw InputError("intersection parts must be sorted and distinct");
    if (in.parts.back() >= k) throw InputError("intersection names an unknown part");
    if (in.parts.size() > Nerve::top_level + 1) continue;
    if (!table.components.emplace(in.parts, in.components).second)
      throw InputError("intersection listed twice");
    if (!in.parents.empty() && in.parents.size() != in.components)
      throw InputError("parents table needs one row per component");
    for (const auto& row : in.parents)
      if (row.size() != in.parts.size()) throw InputError("parents row needs one entry per part");
    table.parents[in.parts] = in.parents;
  }
  // consistency: every sub-intersection of a nonempty one is nonempty, parents in range
  for (const auto& [s, n] : table.components) {
    if (n == 0) continue;
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      PartSet sub = s;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(pos));
      const std::size_t m = table.count(sub);
      if (m == 0) throw InputError("inconsistent cover: a nonempty intersection has an empty sub-intersection");
      for (std::size_t c = 0; c < n; ++c)
        if (table.parent(s, c, s[pos]) >= m) throw InputError("parent component out of range");
    }
  }

  std::vector<std::vector<Simplex>> levels(Nerve::top_level + 1);
  std::vector<std::map<Simplex, std::size_t>> index(Nerve::top_level + 1);
  std::size_t nondeg = 0;
  for (int n = 0; n <= Nerve::top_level; ++n) {
    std::vector<std::size_t> t(static_cast<std::size_t>(n + 1), 0);
    while (true) {
      const PartSet s = support(t);
      for (std::size_t c = 0; c < table.count(s); ++c) {
        index[n].emplace(Simplex{t, c}, levels[n].size());
        levels[n].push_back({t, c});
        bool degenerate = false;
        for (std::size_t i = 0; i + 1 < t.size(); ++i) degenerate |= t[i] == t[i + 1];
        if (!degenerate && ++nondeg > limits.max_nerve_cells)
          throw CapExceeded("nerve has more than " + std::to_string(limits.max_nerve_cells) +
                            " nondegenerate simplices");
      }
      std::size_t p = t.size();
      while (p > 0 && t[p - 1] + 1 == k) t[--p] = 0;
      if (p == 0) break;
      ++t[p - 1];
    }
  }

  std::vector<std::vector<std::vector<std::size_t>>> faces(Nerve::top_level);
  for (int n = 1; n <= Nerve::top_level; ++n) {
    auto& fn = faces[static_cast<std::size_t>(n - 1)];
    fn.assign(static_cast<std::size_t>(n + 1), std::vector<std::size_t>(levels[n].size()));
    for (std::size_t x = 0; x < levels[n].size(); ++x) {
      const Simplex& sx = levels[n][x];
      const PartSet s = support(sx.parts);
      for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
        std::vector<std::size_t> t = sx.parts;
        const std::size_t dropped = t[i];
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
        const PartSet s2 = support(t);
        const std::size_t c = s2.size() == s.size() ? sx.component : table.parent(s, sx.component, dropped);
        fn[i][x] = index[n - 1].at(Simplex{t, c});
      }
    }
  }
  return Nerve(std::move(levels), std::move(faces));
}

Cover point_cover() { return Cover{{"U"}, {}}; }

Cover circle_cover(std::size_t arcs) {
  if (arcs < 3) throw InputError("a circle needs at least three arcs");
  Cover c;
  for (std::size_t i = 0; i < arcs; ++i) c.parts.push_back("arc" + std::to_string(i));
  for (std::size_t i = 0; i < arcs; ++i) {
    std::size_t a = i, b = (i + 1) % arcs;
    if (a > b) std::swap(a, b);
    c.intersections.push_back({{a, b}, 1, {}});
  }
  std::sort(c.intersections.begin(), c.intersections.end(),
            [](const Intersection& x, const Intersection& y) { return x.parts < y.parts; });
  return c;
}

Nerve point_nerve() { return cech_nerve(point_cover()); }
Nerve circle_nerve(std::size_t arcs) { return cech_nerve(circle_cover(arcs)); }

}  // namespace unital
