#include "unital/picard/models.hpp"

#include <algorithm>
#include <sstream>

#include "unital/errors.hpp"
#include "unital/guards.hpp"

namespace unital {

std::string to_string(const Coords& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  os << ')';
  return os.str();
}

std::string to_string(const SaavedraUnit& u) { return "(e=" + to_string(u.e) + ", a_phi=" + to_string(u.a_phi) + ")"; }
std::string to_string(const JKUnit& u) { return "(e=" + to_string(u.e) + ", phi=" + to_string(u.phi) + ")"; }

namespace {

// x + k for every k in ker(f), sorted.
std::vector<Coords> coset(const GroupHom& f, const Coords& x0) {
  const KernelResult k = kernel(f);
  std::vector<Coords> out;
  for (const auto& y : k.group.elements()) out.push_back(f.source().add(x0, k.incl.apply(y)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------- 2-term

PicardModel1::PicardModel1(Complex2 base) : base_(std::move(base)) {}

bool PicardModel1::is_morphism(const Coords& a, const Coords& b, const Coords& b2) const {
  return lambda(a) == B().sub(b, b2);
}

Morphism1 PicardModel1::morphism(const Coords& a, const Coords& b, const Coords& b2) const {
  if (!is_morphism(a, b, b2))
    throw InputError(to_string(a) + " is not a morphism " + to_string(b) + " -> " + to_string(b2));
  return {B().normalize(b), B().normalize(b2), A().normalize(a)};
}

Morphism1 PicardModel1::identity(const Coords& b) const { return morphism(A().zero(), b, b); }

Morphism1 PicardModel1::compose(const Morphism1& f, const Morphism1& g) const {
  if (f.target != g.source) throw InputError("composing morphisms with mismatched endpoints");
  return morphism(A().add(f.a, g.a), f.source, g.target);
}

Morphism1 PicardModel1::tensor(const Morphism1& f, const Morphism1& g) const {
  return morphism(A().add(f.a, g.a), B().add(f.source, g.source), B().add(f.target, g.target));
}

std::vector<Morphism1> PicardModel1::hom(const Coords& b, const Coords& b2) const {
  const auto a0 = preimage(base_.lambda(), B().sub(b, b2));
  if (!a0) return {};
  std::vector<Morphism1> out;
  for (const auto& a : coset(base_.lambda(), *a0)) out.push_back(morphism(a, b, b2));
  return out;
}

bool is_saavedra_unit(const PicardModel1& m, const SaavedraUnit& s) {
  return m.B().normalize(s.e) == s.e && m.A().normalize(s.a_phi) == s.a_phi && m.lambda(s.a_phi) == s.e;
}

std::vector<SaavedraUnit> enumerate_units_1(const PicardModel1& m, const Limits& limits) {
  require_enumerable(m.A(), limits, "A");
  require_enumerable(m.B(), limits, "B");
  std::vector<SaavedraUnit> out;
  for (const auto& a : m.A().elements()) out.push_back({m.lambda(a), a});
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Morphism1, Morphism1> unit_square_1(const PicardModel1& m, const SaavedraUnit& s, const SaavedraUnit& t,
                                              const Coords& u) {
  const Morphism1 U = m.morphism(u, s.e, t.e);
  const Morphism1 phi_s = m.morphism(s.a_phi, m.B().add(s.e, s.e), s.e);
  const Morphism1 phi_t = m.morphism(t.a_phi, m.B().add(t.e, t.e), t.e);
  return {m.compose(m.tensor(U, U), phi_t), m.compose(phi_s, U)};
}

std::vector<UnitMorphism1> unit_morphisms_1(const PicardModel1& m, const SaavedraUnit& s, const SaavedraUnit& t) {
  if (!is_saavedra_unit(m, s) || !is_saavedra_unit(m, t)) throw InputError("not a Saavedra unit");
  std::vector<UnitMorphism1> out;
  for (const auto& h : m.hom(s.e, t.e)) {
    const auto [p1, p2] = unit_square_1(m, s, t, h.a);
    if (p1 == p2) out.push_back({s, t, h.a});
  }
  return out;
}

SaavedraUnit tensor_units_1(const PicardModel1& m, const SaavedraUnit& s, const SaavedraUnit& t) {
  SaavedraUnit r{m.B().add(s.e, t.e), m.A().add(s.a_phi, t.a_phi)};
  if (!is_saavedra_unit(m, r)) throw Error("tensor of units is not a unit");
  return r;
}

SaavedraUnit tensor_units_1_composite(const PicardModel1& m, const SaavedraUnit& s, const SaavedraUnit& t) {
  const FgAbGroup& B = m.B();
  const Coords x = s.e;
  const Coords y = t.e;
  // (xy)(xy) -> x(y(xy)) -> x((yx)y) -> x((xy)y) -> x(x(yy)) -> (xx)(yy)
  // Associators and the symmetry are identities on the summed object.
  const Coords xy = B.add(x, y);
  const Coords yx = B.add(y, x);
  const Coords xx = B.add(x, x);
  const Coords yy = B.add(y, y);
  const std::vector<std::pair<Coords, Coords>> steps = {
      {B.add(xy, xy), B.add(x, B.add(y, xy))}, {B.add(x, B.add(y, xy)), B.add(x, B.add(yx, y))},
      {B.add(x, B.add(yx, y)), B.add(x, B.add(xy, y))}, {B.add(x, B.add(xy, y)), B.add(x, B.add(x, yy))},
      {B.add(x, B.add(x, yy)), B.add(xx, yy)}};
  Morphism1 acc = m.identity(B.add(xy, xy));
  for (const auto& [from, to] : steps) acc = m.compose(acc, m.morphism(m.A().zero(), from, to));
  const Morphism1 last = m.tensor(m.morphism(s.a_phi, xx, x), m.morphism(t.a_phi, yy, y));
  const Morphism1 phi = m.compose(acc, last);
  if (phi.target != xy) throw Error("tensor composite lands in the wrong object");
  return {xy, phi.a};
}

SaavedraUnit canonical_unit(const PicardModel1& m) { return {m.B().zero(), m.A().zero()}; }

VerificationReport verify_contractible_1(const PicardModel1& m, const Limits& limits) {
  require_enumerable(m.A(), limits, "A");
  require_enumerable(m.B(), limits, "B");
  VerificationReport rep;
  StateCounter states(limits);
  const IndexedGroup A(m.A());
  const IndexedGroup B(m.B());
  const auto lam = hom_table(m.base().lambda());
  const std::uint32_t nA = A.size();

  // Units: (λa, a) for every a; a_φ determines the unit.
  std::vector<std::uint32_t> unit_phi;
  for (std::uint32_t a = 0; a < nA; ++a) unit_phi.push_back(a);
  rep.counts["units"] = unit_phi.size();
  rep.add("units nonempty", !unit_phi.empty());
  rep.add("unit count equals |A|", unit_phi.size() == nA, std::to_string(unit_phi.size()));
  rep.add("canonical unit (0,0) present", lam[0] == 0);

  // u[s][t] : the unique unit morphism, found by scanning all of A.
  states.add(static_cast<std::uint64_t>(nA) * nA * nA);
  std::vector<std::uint32_t> u(static_cast<std::size_t>(nA) * nA);
  std::uint64_t pairs_ok = 0;
  std::string bad_pair;
  for (std::uint32_t s = 0; s < nA; ++s) {
    for (std::uint32_t t = 0; t < nA; ++t) {
      const std::uint32_t es = lam[s];
      const std::uint32_t et = lam[t];
      std::uint32_t found = 0;
      std::uint32_t which = 0;
      for (std::uint32_t x = 0; x < nA; ++x) {
        if (lam[x] != B.sub(es, et)) continue;
        // (x⊗x);a_t == a_s;x
        if (A.add(A.add(x, x), t) == A.add(s, x)) {
          ++found;
          which = x;
        }
      }
      if (found == 1 && which == A.sub(s, t)) {
        ++pairs_ok;
        u[static_cast<std::size_t>(s) * nA + t] = which;
      } else if (bad_pair.empty()) {
        bad_pair = to_string(SaavedraUnit{B.element(es), A.element(s)}) + " -> " +
                   to_string(SaavedraUnit{B.element(et), A.element(t)}) + ": " + std::to_string(found) + " morphisms";
      }
    }
  }
  const std::uint64_t npairs = static_cast<std::uint64_t>(nA) * nA;
  rep.counts["morphisms"] = pairs_ok;
  rep.counts["ordered_pairs"] = npairs;
  rep.add("exactly one morphism per ordered pair", pairs_ok == npairs, bad_pair);

  std::string bad_triple;
  if (pairs_ok == npairs) {
    states.add(static_cast<std::uint64_t>(nA) * nA * nA);
    for (std::uint32_t s = 0; s < nA && bad_triple.empty(); ++s)
      for (std::uint32_t t = 0; t < nA && bad_triple.empty(); ++t)
        for (std::uint32_t r = 0; r < nA; ++r) {
          const std::uint32_t st = u[static_cast<std::size_t>(s) * nA + t];
          const std::uint32_t tr = u[static_cast<std::size_t>(t) * nA + r];
          const std::uint32_t sr = u[static_cast<std::size_t>(s) * nA + r];
          if (A.add(st, tr) != sr) {
            bad_triple = "units " + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(r);
            break;
          }
        }
    rep.counts["triples"] = static_cast<std::uint64_t>(nA) * nA * nA;
  }
  rep.add("composition coherent", pairs_ok == npairs && bad_triple.empty(), bad_triple);
  rep.counts["states"] = states.count();
  return rep;
}

// ---------------------------------------------------------------- 3-term

PicardModel2::PicardModel2(Complex3 base) : base_(std::move(base)) {}

Cell1 PicardModel2::cell1(const Coords& b, const Coords& c, const Coords& c2) const {
  if (lambda(b) != C().sub(c, c2)) throw InputError(to_string(b) + " is not a 1-cell " + to_string(c) + " -> " + to_string(c2));
  return {C().normalize(c), C().normalize(c2), B().normalize(b)};
}

Cell2 PicardModel2::cell2(const Coords& alpha, const Cell1& f, const Cell1& g) const {
  if (f.source != g.source || f.target != g.target) throw InputError("2-cell between non-parallel 1-cells");
  if (delta(alpha) != B().sub(f.b, g.b))
    throw InputError(to_string(alpha) + " is not a 2-cell " + to_string(f.b) + " => " + to_string(g.b));
  return {f, g, A().normalize(alpha)};
}

Cell1 PicardModel2::identity1(const Coords& c) const { return cell1(B().zero(), c, c); }
Cell2 PicardModel2::identity2(const Cell1& f) const { return cell2(A().zero(), f, f); }

Cell1 PicardModel2::compose(const Cell1& f, const Cell1& g) const {
  if (f.target != g.source) throw InputError("composing 1-cells with mismatched endpoints");
  return cell1(B().add(f.b, g.b), f.source, g.target);
}

Cell1 PicardModel2::tensor(const Cell1& f, const Cell1& g) const {
  return cell1(B().add(f.b, g.b), C().add(f.source, g.source), C().add(f.target, g.target));
}

Cell2 PicardModel2::vcompose(const Cell2& alpha, const Cell2& beta) const {
  if (alpha.target != beta.source) throw InputError("vertical composite of non-matching 2-cells");
  return cell2(A().add(alpha.alpha, beta.alpha), alpha.source, beta.target);
}

Cell2 PicardModel2::hcompose(const Cell2& alpha, const Cell2& beta) const {
  return cell2(A().add(alpha.alpha, beta.alpha), compose(alpha.source, beta.source), compose(alpha.target, beta.target));
}

Cell2 PicardModel2::tensor(const Cell2& alpha, const Cell2& beta) const {
  return cell2(A().add(alpha.alpha, beta.alpha), tensor(alpha.source, beta.source), tensor(alpha.target, beta.target));
}

bool is_jk_unit(const PicardModel2& m, const JKUnit& u) {
  return m.C().normalize(u.e) == u.e && m.B().normalize(u.phi) == u.phi && m.lambda(u.phi) == u.e;
}

std::vector<JKUnit> enumerate_units_2(const PicardModel2& m, const Limits& limits) {
  require_enumerable(m.A(), limits, "A");
  require_enumerable(m.B(), limits, "B");
  require_enumerable(m.C(), limits, "C");
  std::vector<JKUnit> out;
  for (const auto& b : m.B().elements()) out.push_back({m.lambda(b), b});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Cell1 phi_cell(const PicardModel2& m, const JKUnit& u) { return m.cell1(u.phi, m.C().add(u.e, u.e), u.e); }

}  // namespace

std::pair<Cell1, Cell1> unit_morphism_paths(const PicardModel2& m, const JKUnit& s, const JKUnit& t, const Coords& f) {
  const Cell1 F = m.cell1(f, s.e, t.e);
  return {m.compose(m.tensor(F, F), phi_cell(m, t)), m.compose(phi_cell(m, s), F)};
}

bool is_unit_morphism(const PicardModel2& m, const UnitMorphism2& mor) {
  if (!is_jk_unit(m, mor.source) || !is_jk_unit(m, mor.target)) return false;
  if (m.lambda(mor.f) != m.C().sub(mor.source.e, mor.target.e)) return false;
  const auto [p1, p2] = unit_morphism_paths(m, mor.source, mor.target, mor.f);
  return m.delta(mor.theta) == m.B().sub(p1.b, p2.b);
}

std::vector<UnitMorphism2> unit_1morphisms(const PicardModel2& m, const JKUnit& s, const JKUnit& t) {
  if (!is_jk_unit(m, s) || !is_jk_unit(m, t)) throw InputError("not a Joyal-Kock unit");
  std::vector<UnitMorphism2> out;
  const auto f0 = preimage(m.base().lambda(), m.C().sub(s.e, t.e));
  if (!f0) return out;
  for (const auto& f : coset(m.base().lambda(), *f0)) {
    const auto [p1, p2] = unit_morphism_paths(m, s, t, f);
    const auto th0 = preimage(m.base().delta(), m.B().sub(p1.b, p2.b));
    if (!th0) continue;
    for (const auto& th : coset(m.base().delta(), *th0)) {
      m.cell2(th, p1, p2);
      out.push_back({s, t, f, th});
    }
  }
  return out;
}

std::pair<Cell2, Cell2> pastings(const PicardModel2& m, const UnitMorphism2& m1, const UnitMorphism2& m2,
                                 const Coords& gamma) {
  const JKUnit& s = m1.source;
  const JKUnit& t = m1.target;
  const Cell1 F = m.cell1(m1.f, s.e, t.e);
  const Cell1 G = m.cell1(m2.f, s.e, t.e);
  const Cell1 Ps = phi_cell(m, s);
  const Cell1 Pt = phi_cell(m, t);
  const Cell2 Gam = m.cell2(gamma, F, G);
  const Cell2 Tf = m.cell2(m1.theta, m.compose(m.tensor(F, F), Pt), m.compose(Ps, F));
  const Cell2 Tg = m.cell2(m2.theta, m.compose(m.tensor(G, G), Pt), m.compose(Ps, G));
  const Cell2 left = m.vcompose(m.hcompose(m.tensor(Gam, Gam), m.identity2(Pt)), Tg);
  const Cell2 right = m.vcompose(Tf, m.hcompose(m.identity2(Ps), Gam));
  return {left, right};
}

std::vector<Unit2Morphism> unit_2morphisms(const PicardModel2& m, const UnitMorphism2& m1, const UnitMorphism2& m2) {
  if (!(m1.source == m2.source) || !(m1.target == m2.target)) throw InputError("unit 1-morphisms are not parallel");
  if (!is_unit_morphism(m, m1) || !is_unit_morphism(m, m2)) throw InputError("not a unit 1-morphism");
  std::vector<Unit2Morphism> out;
  const auto g0 = preimage(m.base().delta(), m.B().sub(m1.f, m2.f));
  if (!g0) return out;
  for (const auto& g : coset(m.base().delta(), *g0)) {
    const auto [left, right] = pastings(m, m1, m2, g);
    if (left == right) out.push_back({m1, m2, g});
  }
  return out;
}

UnitMorphism2 compose_unit_morphisms(const PicardModel2& m, const UnitMorphism2& a, const UnitMorphism2& b) {
  if (!(a.target == b.source)) throw InputError("composing unit morphisms with mismatched endpoints");
  const Cell1 Fa = m.cell1(a.f, a.source.e, a.target.e);
  const Cell1 Fb = m.cell1(b.f, b.source.e, b.target.e);
  const auto [pa1, pa2] = unit_morphism_paths(m, a.source, a.target, a.f);
  const auto [pb1, pb2] = unit_morphism_paths(m, b.source, b.target, b.f);
  const Cell2 Ta = m.cell2(a.theta, pa1, pa2);
  const Cell2 Tb = m.cell2(b.theta, pb1, pb2);
  // (Fa⊗Fa);(Fb⊗Fb);φ_r => (Fa⊗Fa);φ_t;Fb => φ_s;Fa;Fb
  const Cell2 step1 = m.hcompose(m.identity2(m.tensor(Fa, Fa)), Tb);
  const Cell2 step2 = m.hcompose(Ta, m.identity2(Fb));
  const Cell2 theta = m.vcompose(step1, step2);
  UnitMorphism2 r{a.source, b.target, m.compose(Fa, Fb).b, theta.alpha};
  if (!is_unit_morphism(m, r)) throw Error("composite of unit morphisms is not a unit morphism");
  return r;
}

JKUnit tensor_units_2(const PicardModel2& m, const JKUnit& s, const JKUnit& t) {
  JKUnit r{m.C().add(s.e, t.e), m.B().add(s.phi, t.phi)};
  if (!is_jk_unit(m, r)) throw Error("tensor of units is not a unit");
  return r;
}

JKUnit canonical_unit(const PicardModel2& m) { return {m.C().zero(), m.B().zero()}; }

VerificationReport verify_contractible_2(const PicardModel2& m, const Limits& limits) {
  require_enumerable(m.A(), limits, "A");
  require_enumerable(m.B(), limits, "B");
  require_enumerable(m.C(), limits, "C");
  VerificationReport rep;
  StateCounter states(limits);
  const IndexedGroup A(m.A());
  const IndexedGroup B(m.B());
  const IndexedGroup C(m.C());
  const auto del = hom_table(m.base().delta());
  const auto lam = hom_table(m.base().lambda());
  const std::uint32_t nA = A.size();
  const std::uint32_t nB = B.size();

  // preimages under δ and λ, by target index
  std::vector<std::vector<std::uint32_t>> del_pre(nB);
  for (std::uint32_t a = 0; a < nA; ++a) del_pre[del[a]].push_back(a);
  std::vector<std::vector<std::uint32_t>> lam_pre(C.size());
  for (std::uint32_t b = 0; b < nB; ++b) lam_pre[lam[b]].push_back(b);

  // Unit φ ranges over B; e = λφ.
  rep.counts["units"] = nB;
  rep.add("units nonempty", nB > 0);
  rep.add("canonical unit (0,0) present", lam[0] == 0);

  std::uint64_t unit_pairs_ok = 0;
  std::uint64_t one_morphisms = 0;
  std::uint64_t parallel_pairs = 0;
  std::uint64_t parallel_ok = 0;
  std::string bad_pair;
  std::string bad_parallel;
  std::string bad_coherence;
  bool witness_ok = true;

  struct Mor {
    std::uint32_t f;
    std::uint32_t theta;
  };
  std::vector<Mor> mors;
  std::vector<std::uint32_t> base_gamma;
  for (std::uint32_t s = 0; s < nB; ++s) {
    for (std::uint32_t t = 0; t < nB; ++t) {
      const std::uint32_t es = lam[s];
      const std::uint32_t et = lam[t];
      mors.clear();
      for (std::uint32_t f : lam_pre[C.sub(es, et)]) {
        // δθ = f + φ_t - φ_s
        for (std::uint32_t th : del_pre[B.sub(B.add(f, t), s)]) mors.push_back({f, th});
      }
      states.add(1 + static_cast<std::uint64_t>(mors.size()) * mors.size());
      one_morphisms += mors.size();
      if (!mors.empty()) ++unit_pairs_ok;
      else if (bad_pair.empty()) bad_pair = "phi " + std::to_string(s) + " -> phi " + std::to_string(t);
      const std::uint32_t wf = B.sub(s, t);
      if (!std::any_of(mors.begin(), mors.end(), [&](const Mor& x) { return x.f == wf && x.theta == 0; })) witness_ok = false;

      // unique γ : m1 => m2 for every parallel pair; base point is mors[0]
      auto unique_gamma = [&](const Mor& m1, const Mor& m2, std::uint32_t& out) {
        std::uint32_t found = 0;
        for (std::uint32_t g : del_pre[B.sub(m1.f, m2.f)]) {
          // (γ⊗γ);φ_t then θ_g  ==  θ_f then φ_s;γ
          if (A.add(A.add(g, g), m2.theta) == A.add(m1.theta, g)) {
            ++found;
            out = g;
          }
        }
        return found;
      };
      const std::size_t n = mors.size();
      base_gamma.assign(n, 0);
      for (std::size_t j = 0; j < n; ++j) unique_gamma(mors[0], mors[j], base_gamma[j]);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          ++parallel_pairs;
          std::uint32_t g = 0;
          const std::uint32_t found = unique_gamma(mors[i], mors[j], g);
          if (found == 1) {
            ++parallel_ok;
            if (A.add(base_gamma[i], g) != base_gamma[j] && bad_coherence.empty())
              bad_coherence = "f=" + std::to_string(mors[i].f) + " theta=" + std::to_string(mors[i].theta);
          } else if (bad_parallel.empty()) {
            bad_parallel = std::to_string(found) + " 2-morphisms between (" + std::to_string(mors[i].f) + "," +
                           std::to_string(mors[i].theta) + ") and (" + std::to_string(mors[j].f) + "," +
                           std::to_string(mors[j].theta) + ")";
          }
        }
      }
    }
  }
  const std::uint64_t npairs = static_cast<std::uint64_t>(nB) * nB;
  rep.counts["unit_pairs"] = npairs;
  rep.counts["one_morphisms"] = one_morphisms;
  rep.counts["parallel_pairs"] = parallel_pairs;
  rep.add("every unit pair has a 1-morphism", unit_pairs_ok == npairs, bad_pair);
  rep.add("witness (phi_s - phi_t, 0) is a unit 1-morphism", witness_ok);
  rep.add("exactly one 2-morphism per parallel pair", parallel_ok == parallel_pairs, bad_parallel);
  rep.add("2-morphism composition coherent", bad_coherence.empty(), bad_coherence);

  // Composites of the witness 1-morphisms are unit 1-morphisms.
  std::string bad_comp;
  for (std::uint32_t s = 0; s < nB && bad_comp.empty(); ++s)
    for (std::uint32_t t = 0; t < nB && bad_comp.empty(); ++t)
      for (std::uint32_t r = 0; r < nB; ++r) {
        const std::uint32_t f = B.add(B.sub(s, t), B.sub(t, r));
        const bool ok = lam[f] == C.sub(lam[s], lam[r]) && del[0] == B.sub(B.add(f, r), s);
        if (!ok) {
          bad_comp = std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(r);
          break;
        }
      }
  rep.add("1-morphism composition closed", bad_comp.empty(), bad_comp);
  rep.counts["states"] = states.count();
  return rep;
}

}  // namespace unital
