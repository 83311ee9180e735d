#include "unital/errors.hpp"
#include "unital/cech/cocycles.hpp"

namespace unital {

SheafSections SheafSections::zero(const FgAbGroup& g, int level, const Nerve& n) {
  return constant(g, level, n, g.zero());
}

SheafSections SheafSections::constant(const FgAbGroup& g, int level, const Nerve& n, const Coords& value) {
  g.check_shape(value);
  return {g, level, std::vector<Coords>(n.size(level), g.normalize(value))};
}

void check_sections(const Nerve& n, const SheafSections& s) {
  if (s.level < 0 || s.level > Nerve::top_level) throw InputError("sections at an unknown level");
  if (s.values.size() != n.size(s.level))
    throw InputError("sections over V_" + std::to_string(s.level) + " need " + std::to_string(n.size(s.level)) +
                     " values, got " + std::to_string(s.values.size()));
  for (const auto& v : s.values) s.group.check_shape(v);
}

SheafSections pullback(const Nerve& n, const SheafSections& s, std::size_t i) {
  if (s.level >= Nerve::top_level) throw InputError("cannot pull back past the top level");
  const int l = s.level + 1;
  SheafSections out{s.group, l, {}};
  out.values.reserve(n.size(l));
  for (std::size_t y = 0; y < n.size(l); ++y) out.values.push_back(s.values.at(n.face(l, i, y)));
  return out;
}

SheafSections apply(const GroupHom& f, const SheafSections& s) {
  if (!(f.source() == s.group)) throw GroupMismatch("sections are not in the source of the map");
  SheafSections out{f.target(), s.level, {}};
  for (const auto& v : s.values) out.values.push_back(f.apply(v));
  return out;
}

namespace {

template <class Op>
SheafSections zip(const SheafSections& x, const SheafSections& y, Op op) {
  if (!(x.group == y.group) || x.level != y.level || x.values.size() != y.values.size())
    throw GroupMismatch("sections live in different places");
  SheafSections out{x.group, x.level, {}};
  for (std::size_t i = 0; i < x.values.size(); ++i) out.values.push_back(op(x.values[i], y.values[i]));
  return out;
}

}  // namespace

SheafSections add(const SheafSections& x, const SheafSections& y) {
  return zip(x, y, [&](const Coords& a, const Coords& b) { return x.group.add(a, b); });
}

SheafSections sub(const SheafSections& x, const SheafSections& y) {
  return zip(x, y, [&](const Coords& a, const Coords& b) { return x.group.sub(a, b); });
}

SheafSections coboundary(const Nerve& n, const SheafSections& s) {
  SheafSections out = SheafSections::zero(s.group, s.level + 1, n);
  for (std::size_t i = 0; i <= static_cast<std::size_t>(s.level) + 1; ++i) {
    const auto p = pullback(n, s, i);
    out = i % 2 ? sub(out, p) : add(out, p);
  }
  return out;
}

namespace {

void expect(const Nerve& n, const SheafSections& s, const FgAbGroup& g, int level, const char* name) {
  if (!(s.group == g) || s.level != level)
    throw GroupMismatch(std::string(name) + " must be a section of " + g.to_string() + " over V_" +
                        std::to_string(level));
  check_sections(n, s);
}

// index of the first simplex where x and y differ
std::optional<std::size_t> first_difference(const SheafSections& x, const SheafSections& y) {
  for (std::size_t i = 0; i < x.values.size(); ++i)
    if (!x.group.is_zero(x.group.sub(x.values[i], y.values[i]))) return i;
  return std::nullopt;
}

void require_equal(const Nerve& n, const SheafSections& lhs, const SheafSections& rhs, const std::string& rel) {
  if (auto i = first_difference(lhs, rhs)) throw CocycleError(rel, n.label(lhs.level, *i));
}

}  // namespace

void validate_torsor_cocycle(const Nerve& n, const Complex2& x, const TorsorCocycle& c) {
  expect(n, c.a, x.A(), 1, "a");
  expect(n, c.b, x.B(), 0, "b");
  require_equal(n, add(pullback(n, c.a, 0), pullback(n, c.a, 2)), pullback(n, c.a, 1), relation::cocycle_a);
  require_equal(n, pullback(n, c.b, 0), add(pullback(n, c.b, 1), apply(x.lambda(), c.a)), relation::cocycle_b);
}

void validate_unit_cocycle(const Nerve& n, const Complex2& x, const UnitCocycle1& c) {
  expect(n, c.a_phi, x.A(), 0, "a_phi");
  validate_torsor_cocycle(n, x, {c.a, c.b});
  require_equal(n, c.a, sub(pullback(n, c.a_phi, 0), pullback(n, c.a_phi, 1)), relation::transition);
  require_equal(n, apply(x.lambda(), c.a_phi), c.b, relation::unit);
}

TorsorCocycle act(const Nerve& n, const Complex2& x, const TorsorCocycle& c, const SheafSections& alpha) {
  expect(n, alpha, x.A(), 0, "alpha");
  return {add(c.a, coboundary(n, alpha)), add(c.b, apply(x.lambda(), alpha))};
}

UnitCocycle1 act(const Nerve& n, const Complex2& x, const UnitCocycle1& c, const SheafSections& alpha) {
  const TorsorCocycle t = act(n, x, TorsorCocycle{c.a, c.b}, alpha);
  return {t.a, add(c.a_phi, alpha), t.b};
}

}  // namespace unital
