#include "unital/abelian/hom.hpp"

#include <sstream>
#include <utility>

#include "unital/abelian/smith.hpp"
#include "unital/errors.hpp"

namespace unital {

namespace {

// Columns d_i e_i for the torsion generators of g.
IntMatrix relation_matrix(const FgAbGroup& g) {
  const auto& d = g.invariant_factors();
  IntMatrix r(g.num_generators(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) r(i, i) = d[i];
  return r;
}

}  // namespace

GroupHom::GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.num_generators() || matrix_.cols() != source_.num_generators()) {
    throw GroupMismatch("homomorphism matrix is " + std::to_string(matrix_.rows()) + "x" +
                        std::to_string(matrix_.cols()) + ", expected " + std::to_string(target_.num_generators()) +
                        "x" + std::to_string(source_.num_generators()));
  }
  for (std::size_t j = 0; j < matrix_.cols(); ++j) {
    const Int d = source_.modulus(j);
    for (std::size_t i = 0; i < matrix_.rows(); ++i) {
      const Int e = target_.modulus(i);
      Int& m = matrix_(i, j);
      if (e != 0) m = mod_floor(m, e);
      if (d == 0 || m == 0) continue;
      if (e == 0 || checked_mul(d, m) % e != 0) {
        throw IllDefinedHom("generator " + std::to_string(j) + " of order " + std::to_string(d) +
                            " cannot map to coordinate value " + std::to_string(m) + " in " + target_.to_string());
      }
    }
  }
}

GroupHom GroupHom::identity(const FgAbGroup& g) { return {g, g, IntMatrix::identity(g.num_generators())}; }

GroupHom GroupHom::zero(const FgAbGroup& source, const FgAbGroup& target) {
  return {source, target, IntMatrix(target.num_generators(), source.num_generators())};
}

GroupHom GroupHom::scalar(const FgAbGroup& g, Int k) {
  IntMatrix m(g.num_generators(), g.num_generators());
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = k;
  return {g, g, std::move(m)};
}

Coords GroupHom::apply(const Coords& x) const {
  source_.check_shape(x);
  return target_.normalize(matrix_ * std::span<const Int>(x));
}

GroupElem GroupHom::apply(const GroupElem& x) const {
  if (!(x.group() == source_)) throw GroupMismatch("applying a map on " + source_.to_string() + " to an element of " + x.group().to_string());
  return {target_, apply(x.coords())};
}

GroupHom GroupHom::operator+(const GroupHom& rhs) const {
  if (!(source_ == rhs.source_) || !(target_ == rhs.target_)) throw GroupMismatch("sum of homomorphisms with different ends");
  return {source_, target_, matrix_ + rhs.matrix_};
}

GroupHom GroupHom::operator-(const GroupHom& rhs) const {
  if (!(source_ == rhs.source_) || !(target_ == rhs.target_)) throw GroupMismatch("difference of homomorphisms with different ends");
  return {source_, target_, matrix_ - rhs.matrix_};
}

GroupHom GroupHom::operator-() const { return {source_, target_, -matrix_}; }

bool GroupHom::is_zero() const { return matrix_.is_zero(); }
bool GroupHom::is_injective() const { return kernel(*this).group.is_trivial(); }
bool GroupHom::is_surjective() const { return cokernel(*this).group.is_trivial(); }

std::string GroupHom::to_string() const {
  std::ostringstream os;
  os << source_.to_string() << " -> " << target_.to_string() << " " << matrix_.to_string();
  return os.str();
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!(f.target() == g.source()))
    throw GroupMismatch("cannot compose: " + f.target().to_string() + " vs " + g.source().to_string());
  return {f.source(), g.target(), g.matrix() * f.matrix()};
}

Coords apply(const GroupHom& f, const Coords& x) { return f.apply(x); }

KernelResult kernel(const GroupHom& f) {
  const FgAbGroup& S = f.source();
  const FgAbGroup& T = f.target();
  const std::size_t n = S.num_generators();
  // x with F x in im(D_T): integer kernel of [F | -D_T], keep the x part.
  const IntMatrix sys = f.matrix().hcat(-relation_matrix(T));
  const BigMatrix full = integer_kernel_basis_big(sys);
  // keep the x part; the source relations lie in the kernel, so adding them
  // lets the echelon form keep torsion coordinates below their moduli
  const IntMatrix RS = relation_matrix(S);
  BigMatrix gens(n, full.cols() + RS.cols());
  for (std::size_t j = 0; j < full.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const Int m = S.modulus(i);
      gens(i, j) = m ? BigInt(full(i, j) % m) : full(i, j);
    }
  for (std::size_t j = 0; j < RS.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i) gens(i, full.cols() + j) = RS(i, j);
  const IntMatrix B = column_echelon(gens).h.to_int();
  // Source relations expressed in the basis B.
  IntMatrix rel(B.cols(), RS.cols());
  for (std::size_t j = 0; j < RS.cols(); ++j) {
    const auto c = solve_integer(B, RS.col(j));
    if (!c) throw Error("kernel: source relation outside the kernel lattice");
    for (std::size_t i = 0; i < c->size(); ++i) rel(i, j) = (*c)[i];
  }
  CanonicalQuotient q = canonical_quotient(rel);
  GroupHom incl(q.group, S, B * q.from_canonical);
  return {std::move(q.group), std::move(incl)};
}

CokernelResult cokernel(const GroupHom& f) {
  const FgAbGroup& T = f.target();
  CanonicalQuotient q = canonical_quotient(relation_matrix(T).hcat(f.matrix()));
  GroupHom proj(T, q.group, std::move(q.to_canonical));
  return {std::move(q.group), std::move(proj)};
}

KernelResult image(const GroupHom& f) { return kernel(cokernel(f).proj); }

std::optional<Coords> preimage(const GroupHom& f, const Coords& y) {
  f.target().check_shape(y);
  const std::size_t n = f.source().num_generators();
  const auto sol = solve_integer(f.matrix().hcat(relation_matrix(f.target())), y);
  if (!sol) return std::nullopt;
  return f.source().normalize(Coords(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(n)));
}

GroupHom lift_through(const GroupHom& g, const GroupHom& incl) {
  if (!(g.target() == incl.target())) throw GroupMismatch("lift_through: targets differ");
  IntMatrix m(incl.source().num_generators(), g.source().num_generators());
  for (std::size_t j = 0; j < g.source().num_generators(); ++j) {
    const Coords y = g.apply(g.source().generator(j));
    const auto x = preimage(incl, y);
    if (!x) throw InputError("lift_through: image not contained in the subgroup");
    for (std::size_t i = 0; i < x->size(); ++i) m(i, j) = (*x)[i];
  }
  GroupHom h(g.source(), incl.source(), std::move(m));
  if (!(compose(incl, h) == g)) throw InputError("lift_through: lift is not unique");
  return h;
}

DirectSum::DirectSum(std::vector<FgAbGroup> summands) : summands_(std::move(summands)) {
  std::size_t s = 0;
  std::size_t t = 0;
  for (const auto& g : summands_) {
    s += g.num_generators();
    t += g.invariant_factors().size();
  }
  IntMatrix rel(s, t);
  std::vector<std::size_t> offset;
  std::size_t r = 0;
  std::size_t c = 0;
  for (const auto& g : summands_) {
    offset.push_back(r);
    const auto& d = g.invariant_factors();
    for (std::size_t i = 0; i < d.size(); ++i) rel(r + i, c + i) = d[i];
    r += g.num_generators();
    c += d.size();
  }
  CanonicalQuotient q = canonical_quotient(rel);
  group_ = q.group;
  for (std::size_t k = 0; k < summands_.size(); ++k) {
    const std::size_t nk = summands_[k].num_generators();
    inj_.emplace_back(summands_[k], group_, q.to_canonical.col_range(offset[k], nk));
    proj_.emplace_back(group_, summands_[k], q.from_canonical.row_range(offset[k], nk));
  }
}

Coords DirectSum::pack(const std::vector<Coords>& parts) const {
  if (parts.size() != summands_.size()) throw GroupMismatch("pack: wrong number of components");
  Coords x = group_.zero();
  for (std::size_t k = 0; k < parts.size(); ++k) x = group_.add(x, inj_[k].apply(parts[k]));
  return x;
}

std::vector<Coords> DirectSum::unpack(const Coords& x) const {
  std::vector<Coords> out;
  for (const auto& p : proj_) out.push_back(p.apply(x));
  return out;
}

GroupHom DirectSum::hom_from(const std::vector<GroupHom>& maps) const {
  if (maps.size() != summands_.size() || maps.empty()) throw GroupMismatch("hom_from: wrong number of maps");
  GroupHom h = compose(maps[0], proj_[0]);
  for (std::size_t k = 1; k < maps.size(); ++k) h = h + compose(maps[k], proj_[k]);
  return h;
}

GroupHom DirectSum::hom_into(const std::vector<GroupHom>& maps) const {
  if (maps.size() != summands_.size() || maps.empty()) throw GroupMismatch("hom_into: wrong number of maps");
  GroupHom h = compose(inj_[0], maps[0]);
  for (std::size_t k = 1; k < maps.size(); ++k) h = h + compose(inj_[k], maps[k]);
  return h;
}

DirectSum direct_sum(const FgAbGroup& g, const FgAbGroup& h) { return DirectSum(g, h); }

IndexedGroup::IndexedGroup(const FgAbGroup& g) : group_(g) {
  const std::uint64_t n = g.order();
  if (n > (1u << 24)) throw CapExceeded("group of order " + std::to_string(n) + " too large to index");
  n_ = static_cast<std::uint32_t>(n);
  neg_.resize(n_);
  for (std::uint32_t i = 0; i < n_; ++i) neg_[i] = index(g.neg(g.element_at(i)));
  if (n_ <= 1024) {
    table_.resize(static_cast<std::size_t>(n_) * n_);
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = 0; j < n_; ++j) table_[static_cast<std::size_t>(i) * n_ + j] = add_slow(i, j);
  }
}

std::uint32_t IndexedGroup::add_slow(std::uint32_t i, std::uint32_t j) const {
  const auto& d = group_.invariant_factors();
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::size_t k = d.size(); k-- > 0;) {
    const auto m = static_cast<std::uint32_t>(d[k]);
    out += ((i % m + j % m) % m) * place;
    place *= m;
    i /= m;
    j /= m;
  }
  return out;
}

std::vector<std::uint32_t> hom_table(const GroupHom& f) {
  const std::uint64_t n = f.source().order();
  std::vector<std::uint32_t> t(n);
  for (std::uint64_t i = 0; i < n; ++i)
    t[i] = static_cast<std::uint32_t>(f.target().index_of(f.apply(f.source().element_at(i))));
  return t;
}

}  // namespace unital
