#include "unital/abelian/smith.hpp"
#include "unital/cech/cocycles.hpp"
#include "unital/complexes/units.hpp"
#include "unital/errors.hpp"
#include "unital/guards.hpp"

namespace unital {

std::vector<std::size_t> TotalComplex::cells(int level) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < nerve_.size(level); ++x)
    if (!normalized_ || !nerve_.is_degenerate(level, x)) out.push_back(x);
  return out;
}

namespace {

// naive differential conjugated into canonical coordinates; transform
// entries can be large, so multiply exactly and reduce by the target moduli
IntMatrix to_canonical_hom(const CanonicalQuotient& src, const CanonicalQuotient& dst, const IntMatrix& naive) {
  const BigMatrix m = BigMatrix(dst.to_canonical) * BigMatrix(naive) * BigMatrix(src.from_canonical);
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Int e = dst.group.modulus(i);
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_int(e ? BigInt(m(i, j) % e) : m(i, j));
  }
  return out;
}

// x -> reduced(T x), with per-row moduli (0 = no reduction)
std::vector<Int> transform(const IntMatrix& t, const std::vector<Int>& x, const std::vector<Int>& moduli) {
  std::vector<Int> out(t.rows());
  for (std::size_t r = 0; r < t.rows(); ++r) {
    BigInt acc = 0;
    for (std::size_t c = 0; c < x.size(); ++c) acc += BigInt(t(r, c)) * x[c];
    if (moduli[r]) acc %= moduli[r];
    out[r] = to_int(acc);
  }
  return out;
}

}  // namespace

TotalComplex::TotalComplex(const Nerve& n, const Complex& x, bool normalized)
    : nerve_(n), x_(x), normalized_(normalized) {
  const int len = static_cast<int>(x.length());
  if (len == 0) throw InputError("empty coefficient complex");
  std::vector<std::vector<std::size_t>> cell(Nerve::top_level + 1);
  for (int l = 0; l <= Nerve::top_level; ++l) cell[static_cast<std::size_t>(l)] = cells(l);

  for (int t = -1; t <= 1; ++t) {
    Layout lay;
    std::vector<Int> moduli;
    for (int j = 0; j < len; ++j) {
      const int p = t + j;
      lay.offset.push_back(lay.dim);
      if (p < 0 || p > Nerve::top_level) {
        lay.level.push_back(-1);
        continue;
      }
      lay.level.push_back(p);
      const FgAbGroup& g = x.term(-j);
      for (std::size_t c = 0; c < cell[static_cast<std::size_t>(p)].size(); ++c)
        for (std::size_t k = 0; k < g.num_generators(); ++k) moduli.push_back(g.modulus(k));
      lay.dim += cell[static_cast<std::size_t>(p)].size() * g.num_generators();
    }
    std::size_t torsion = 0;
    for (Int m : moduli) torsion += m != 0;
    IntMatrix rel(lay.dim, torsion);
    std::size_t col = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i)
      if (moduli[i]) rel(i, col++) = moduli[i];
    lay.cq = canonical_quotient(rel);
    lay.moduli = moduli;
    layouts_.push_back(std::move(lay));
  }

  // position of each simplex within its level's cell list
  std::vector<std::vector<std::ptrdiff_t>> slot(Nerve::top_level + 1);
  for (int l = 0; l <= Nerve::top_level; ++l) {
    slot[static_cast<std::size_t>(l)].assign(n.size(l), -1);
    const auto& cl = cell[static_cast<std::size_t>(l)];
    for (std::size_t i = 0; i < cl.size(); ++i) slot[static_cast<std::size_t>(l)][cl[i]] = static_cast<std::ptrdiff_t>(i);
  }

  std::vector<FgAbGroup> terms;
  std::vector<GroupHom> diffs;
  for (const auto& lay : layouts_) terms.push_back(lay.cq.group);
  for (int t = -1; t <= 0; ++t) {
    const Layout& s = layout(t);
    const Layout& d = layout(t + 1);
    IntMatrix naive(d.dim, s.dim);
    for (int j = 0; j < len; ++j) {
      const int p = s.level[static_cast<std::size_t>(j)];
      if (p < 0) continue;
      const FgAbGroup& g = x.term(-j);
      const std::size_t gn = g.num_generators();
      const auto& src_cells = cell[static_cast<std::size_t>(p)];
      // Čech part into block j at level p+1
      const int p1 = d.level[static_cast<std::size_t>(j)];
      if (p1 >= 0) {
        const auto& dst_cells = cell[static_cast<std::size_t>(p1)];
        for (std::size_t yi = 0; yi < dst_cells.size(); ++yi)
          for (std::size_t i = 0; i <= static_cast<std::size_t>(p1); ++i) {
            const std::ptrdiff_t xi = slot[static_cast<std::size_t>(p)][n.face(p1, i, dst_cells[yi])];
            if (xi < 0) continue;
            const Int sign = i % 2 ? -1 : 1;
            for (std::size_t k = 0; k < gn; ++k)
              naive(d.offset[static_cast<std::size_t>(j)] + yi * gn + k,
                    s.offset[static_cast<std::size_t>(j)] + static_cast<std::size_t>(xi) * gn + k) += sign;
          }
      }
      // complex part into block j-1, same level
      if (j >= 1 && d.level[static_cast<std::size_t>(j - 1)] == p) {
        const IntMatrix& dx = x.diff(-j).matrix();
        const std::size_t hn = x.term(1 - j).num_generators();
        const Int sign = p % 2 ? -1 : 1;
        for (std::size_t c = 0; c < src_cells.size(); ++c)
          for (std::size_t r = 0; r < hn; ++r)
            for (std::size_t k = 0; k < gn; ++k)
              naive(d.offset[static_cast<std::size_t>(j - 1)] + c * hn + r,
                    s.offset[static_cast<std::size_t>(j)] + c * gn + k) += sign * dx(r, k);
      }
    }
    diffs.emplace_back(s.cq.group, d.cq.group, to_canonical_hom(s.cq, d.cq, naive));
  }
  cochains_ = Complex(std::move(terms), std::move(diffs));
}

std::vector<SheafSections> TotalComplex::decode(int t, const Coords& v) const {
  const Layout& lay = layout(t);
  cochains_.term(t - 1).check_shape(v);
  const std::vector<Int> naive = transform(lay.cq.from_canonical, v, lay.moduli);
  std::vector<SheafSections> out;
  for (std::size_t j = 0; j < lay.level.size(); ++j) {
    const int p = lay.level[j];
    const FgAbGroup& g = x_.term(-static_cast<int>(j));
    if (p < 0) {
      out.push_back({FgAbGroup(), -1, {}});
      continue;
    }
    SheafSections s = SheafSections::zero(g, p, nerve_);
    const auto cl = cells(p);
    const std::size_t gn = g.num_generators();
    for (std::size_t c = 0; c < cl.size(); ++c) {
      Coords val(gn);
      for (std::size_t k = 0; k < gn; ++k) val[k] = naive[lay.offset[j] + c * gn + k];
      s.values[cl[c]] = g.normalize(val);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Coords TotalComplex::encode(int t, const std::vector<SheafSections>& blocks) const {
  const Layout& lay = layout(t);
  if (blocks.size() != lay.level.size()) throw InputError("wrong number of cochain blocks");
  Coords naive(lay.dim, 0);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const int p = lay.level[j];
    if (p < 0) continue;
    const SheafSections& s = blocks[j];
    const FgAbGroup& g = x_.term(-static_cast<int>(j));
    if (!(s.group == g) || s.level != p) throw GroupMismatch("cochain block in the wrong group or level");
    check_sections(nerve_, s);
    const std::size_t gn = g.num_generators();
    const auto cl = cells(p);
    if (normalized_)
      for (std::size_t y = 0; y < nerve_.size(p); ++y)
        if (nerve_.is_degenerate(p, y) && !g.is_zero(s.values[y]))
          throw InputError("normalized cochain is nonzero on a degenerate simplex");
    for (std::size_t c = 0; c < cl.size(); ++c)
      for (std::size_t k = 0; k < gn; ++k) naive[lay.offset[j] + c * gn + k] = s.values[cl[c]][k];
  }
  const FgAbGroup& tg = cochains_.term(t - 1);
  std::vector<Int> mods(tg.num_generators());
  for (std::size_t r = 0; r < mods.size(); ++r) mods[r] = tg.modulus(r);
  return tg.normalize(transform(lay.cq.to_canonical, naive, mods));
}

FgAbGroup TotalComplex::h0() const { return homology(cochains_, -1); }

FgAbGroup classify_h0(const Nerve& n, const Complex& x, const Limits& limits, bool normalized) {
  for (const auto& g : x.terms()) require_enumerable(g, limits, "coefficient group");
  return TotalComplex(n, x, normalized).h0();
}

void validate_total_cocycle(const Nerve& n, const TotalCocycle& c) {
  const TotalComplex tot(n, c.complex, c.normalized);
  const Coords v = tot.encode(0, c.components);
  const Coords dv = tot.cochains().diff(-1).apply(v);
  if (tot.cochains().term(0).is_zero(dv)) return;
  const auto blocks = tot.decode(1, dv);
  for (std::size_t j = 0; j < blocks.size(); ++j)
    for (std::size_t y = 0; y < blocks[j].values.size(); ++y)
      if (!blocks[j].group.is_zero(blocks[j].values[y]))
        throw CocycleError("total differential", "degree " + std::to_string(-static_cast<int>(j)) + " over " +
                                                     n.label(blocks[j].level, y));
  throw CocycleError("total differential", "unknown block");
}

TotalCocycle to_total(const Nerve& n, const Complex2& x, const UnitCocycle1& c) {
  validate_unit_cocycle(n, x, c);
  const UnitComplex1 u = unit_complex_1(x);
  SheafSections k{u.complex.B(), 0, {}};
  for (std::size_t v = 0; v < n.size(0); ++v) {
    const auto pre = preimage(u.witness, u.ambient.pack({c.a_phi.at(v), c.b.at(v)}));
    if (!pre) throw CocycleError(relation::unit, n.label(0, v));
    k.values.push_back(*pre);
  }
  return {u.complex, {k, c.a}, false};
}

UnitCocycle1 cocycle_of_unit(const Nerve& n, const Complex2& x, const SaavedraUnit& s) {
  if (!is_saavedra_unit(PicardModel1(x), s)) throw InputError("not a Saavedra unit: " + to_string(s));
  return {SheafSections::zero(x.A(), 1, n), SheafSections::constant(x.A(), 0, n, s.a_phi),
          SheafSections::constant(x.B(), 0, n, s.e)};
}

TotalCocycle cocycle_of_unit(const Nerve& n, const Complex3& x, const JKUnit& s) {
  if (!is_jk_unit(PicardModel2(x), s)) throw InputError("not a Joyal-Kock unit: " + to_string(s));
  const UnitComplex2 u = unit_complex_2(x);
  const auto k = preimage(u.witness, u.BC.pack({s.phi, s.e}));
  if (!k) throw Error("unit outside the unit complex");
  return {u.complex,
          {SheafSections::constant(u.complex.C(), 0, n, *k), SheafSections::zero(u.complex.B(), 1, n),
           SheafSections::zero(u.complex.A(), 2, n)},
          false};
}

SaavedraDescent unit_of_cocycle(const Nerve& n, const Complex2& x, const UnitCocycle1& c) {
  validate_unit_cocycle(n, x, c);
  if (n.size(0) == 0) throw InputError("nerve has no vertices");
  const SaavedraUnit unit{c.b.at(0), c.a_phi.at(0)};
  // alpha = a_φ(v_0) - a_φ moves a_φ to the constant value; a and b follow
  const SheafSections alpha = sub(SheafSections::constant(x.A(), 0, n, unit.a_phi), c.a_phi);
  if (!(act(n, x, c, alpha) == cocycle_of_unit(n, x, unit))) throw Error("descent did not reach the constant cocycle");
  return {unit, alpha};
}

JKDescent unit_of_cocycle(const Nerve& n, const Complex3& x, const TotalCocycle& c) {
  const UnitComplex2 u = unit_complex_2(x);
  if (!(c.complex == static_cast<const Complex&>(u.complex)))
    throw GroupMismatch("cocycle coefficients are not the unit complex");
  validate_total_cocycle(n, c);
  if (n.size(0) == 0) throw InputError("nerve has no vertices");
  const Coords bc = u.witness.apply(c.components.at(0).at(0));
  const JKUnit unit{u.BC.component(bc, 1), u.BC.component(bc, 0)};
  const TotalCocycle target = cocycle_of_unit(n, x, unit);
  const TotalComplex tot(n, c.complex, c.normalized);
  const Coords diff = tot.cochains().term(-1).sub(tot.encode(0, c.components), tot.encode(0, target.components));
  const auto y = preimage(tot.cochains().diff(-2), diff);
  if (!y) throw Error("cocycle is not cohomologous to a constant one");
  return {unit, tot.decode(-1, *y)};
}

}  // namespace unital
