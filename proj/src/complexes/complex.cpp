#include "unital/complexes/complex.hpp"

#include <sstream>
#include <utility>

#include "unital/errors.hpp"

namespace unital {

Complex::Complex(std::vector<FgAbGroup> terms, std::vector<GroupHom> diffs)
    : terms_(std::move(terms)), diffs_(std::move(diffs)) {
  if (terms_.empty()) throw InputError("complex with no terms");
  if (diffs_.size() + 1 != terms_.size()) throw InputError("complex: need one differential between consecutive terms");
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    if (!(diffs_[i].source() == terms_[i]) || !(diffs_[i].target() == terms_[i + 1]))
      throw GroupMismatch("differential " + std::to_string(i) + " does not match the terms");
  }
  for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
    if (!compose(diffs_[i + 1], diffs_[i]).is_zero())
      throw InputError("differentials do not compose to zero in degree " + std::to_string(min_degree() + static_cast<int>(i)));
  }
}

std::size_t Complex::pos(int degree) const {
  if (degree > 0 || degree < min_degree())
    throw InputError("degree " + std::to_string(degree) + " outside [" + std::to_string(min_degree()) + ", 0]");
  return static_cast<std::size_t>(degree - min_degree());
}

const FgAbGroup& Complex::term(int degree) const { return terms_[pos(degree)]; }

const GroupHom& Complex::diff(int degree) const {
  const std::size_t p = pos(degree);
  if (p >= diffs_.size()) throw InputError("no differential leaves degree 0");
  return diffs_[p];
}

std::string Complex::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " --" << diffs_[i - 1].matrix().to_string() << "--> ";
    os << terms_[i].to_string();
  }
  return os.str();
}

Complex2::Complex2(const GroupHom& lambda) : Complex({lambda.source(), lambda.target()}, {lambda}) {}

Complex2::Complex2(const Complex& c) : Complex(c) {
  if (length() != 2) throw InputError("expected a 2-term complex");
}

Complex3::Complex3(const GroupHom& delta, const GroupHom& lambda)
    : Complex({delta.source(), delta.target(), lambda.target()}, {delta, lambda}) {}

Complex3::Complex3(const Complex& c) : Complex(c) {
  if (length() != 3) throw InputError("expected a 3-term complex");
}

StrictMorphism::StrictMorphism(Complex source, Complex target, std::vector<GroupHom> maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
  const std::size_t n = source_.length();
  if (target_.length() != n || maps_.size() != n) throw InputError("strict morphism: lengths differ");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(maps_[i].source() == source_.terms()[i]) || !(maps_[i].target() == target_.terms()[i]))
      throw GroupMismatch("strict morphism: map " + std::to_string(i) + " does not match the terms");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(compose(maps_[i + 1], source_.diffs()[i]) == compose(target_.diffs()[i], maps_[i])))
      throw InputError("strict morphism: square does not commute in degree " +
                       std::to_string(source_.min_degree() + static_cast<int>(i)));
  }
}

StrictMorphism StrictMorphism::identity(const Complex& x) {
  std::vector<GroupHom> maps;
  for (const auto& t : x.terms()) maps.push_back(GroupHom::identity(t));
  return {x, x, std::move(maps)};
}

const GroupHom& StrictMorphism::at(int degree) const {
  if (degree > 0 || degree < source_.min_degree()) throw InputError("degree out of range");
  return maps_[static_cast<std::size_t>(degree - source_.min_degree())];
}

StrictMorphism compose(const StrictMorphism& g, const StrictMorphism& f) {
  if (!(f.target() == g.source())) throw GroupMismatch("cannot compose strict morphisms");
  std::vector<GroupHom> maps;
  for (std::size_t i = 0; i < f.maps().size(); ++i) maps.push_back(compose(g.maps()[i], f.maps()[i]));
  return {f.source(), g.target(), std::move(maps)};
}

bool is_isomorphism(const StrictMorphism& f) {
  for (const auto& m : f.maps())
    if (!m.is_iso()) return false;
  return true;
}

Coords HomologyData::class_of(const Coords& cycle) const {
  const auto z = preimage(cycles.incl, cycle);
  if (!z) throw InputError("not a cycle in degree " + std::to_string(degree));
  return proj.apply(*z);
}

Coords HomologyData::any_representative(const Coords& cls) const {
  const auto z = preimage(proj, cls);
  if (!z) throw Error("homology projection is not surjective");
  return cycles.incl.apply(*z);
}

Coords HomologyData::representative(const Coords& cls) const {
  const Coords r = any_representative(cls);
  const FgAbGroup& X = cycles.incl.target();
  if (!X.is_finite() || X.order() > (1u << 16)) return r;
  // Same class iff the difference is a cycle with zero class.
  for (std::uint64_t i = 0; i < X.order(); ++i) {
    const Coords x = X.element_at(i);
    const auto z = preimage(cycles.incl, X.sub(x, r));
    if (z && proj.target().is_zero(proj.apply(*z))) return x;
  }
  return r;
}

HomologyData homology_data(const Complex& x, int degree) {
  const FgAbGroup& X = x.term(degree);
  const FgAbGroup zero_group;
  const GroupHom d_out = degree < 0 ? x.diff(degree) : GroupHom::zero(X, zero_group);
  const GroupHom d_in = degree > x.min_degree() ? x.diff(degree - 1) : GroupHom::zero(zero_group, X);
  KernelResult z = kernel(d_out);
  CokernelResult h = cokernel(lift_through(d_in, z.incl));
  return {degree, std::move(h.group), std::move(z), std::move(h.proj)};
}

FgAbGroup homology(const Complex& x, int degree) { return homology_data(x, degree).group; }

bool is_acyclic(const Complex& x) {
  for (int d = x.min_degree(); d <= 0; ++d)
    if (!homology(x, d).is_trivial()) return false;
  return true;
}

GroupHom induced_map(const StrictMorphism& f, int degree) {
  const HomologyData hx = homology_data(f.source(), degree);
  const HomologyData hy = homology_data(f.target(), degree);
  IntMatrix m(hy.group.num_generators(), hx.group.num_generators());
  for (std::size_t j = 0; j < hx.group.num_generators(); ++j) {
    const Coords cls = hy.class_of(f.at(degree).apply(hx.any_representative(hx.group.generator(j))));
    for (std::size_t i = 0; i < cls.size(); ++i) m(i, j) = cls[i];
  }
  return {hx.group, hy.group, std::move(m)};
}

QuasiIsoResult is_quasi_isomorphism(const StrictMorphism& f) {
  QuasiIsoResult r;
  for (int d = f.source().min_degree(); d <= 0; ++d) {
    r.induced.push_back(induced_map(f, d));
    if (!r.induced.back().is_iso()) {
      r.is_qiso = false;
      r.failing_degrees.push_back(d);
    }
  }
  return r;
}

Complex3 cone(const StrictMorphism& f) {
  const Complex2 X(f.source());
  const Complex2 Y(f.target());
  const DirectSum mid(X.B(), Y.A());
  const GroupHom d0 = mid.hom_into({-X.lambda(), f.maps()[0]});
  const GroupHom d1 = mid.hom_from({f.maps()[1], Y.lambda()});
  return Complex3(d0, d1);
}

Truncation truncate_shift(const Complex3& x) {
  KernelResult k = kernel(x.lambda());
  return {Complex2(lift_through(x.delta(), k.incl)), std::move(k.incl)};
}

}  // namespace unital
