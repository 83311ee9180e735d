#include "unital/abelian/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "unital/abelian/smith.hpp"
#include "unital/errors.hpp"

namespace unital {

CanonicalQuotient canonical_quotient(const IntMatrix& relations) {
  const std::size_t s = relations.rows();
  const std::size_t t = relations.cols();
  const SmithDecomposition snf = smith_normal_form(relations);

  std::vector<std::size_t> torsion;
  std::vector<std::size_t> free;
  std::vector<Int> factors;
  for (std::size_t i = 0; i < s; ++i) {
    const Int e = i < std::min(s, t) ? to_int(snf.D(i, i)) : 0;
    if (e == 0) {
      free.push_back(i);
    } else if (e >= 2) {
      torsion.push_back(i);
      factors.push_back(e);
    }
  }
  std::vector<std::size_t> selected = torsion;
  selected.insert(selected.end(), free.begin(), free.end());

  // representatives of the canonical generators, shortened modulo the relations
  const Echelon ech = column_echelon(BigMatrix(relations));
  IntMatrix to(selected.size(), s);
  IntMatrix from(s, selected.size());
  for (std::size_t k = 0; k < selected.size(); ++k) {
    const std::size_t i = selected[k];
    const Int m = k < factors.size() ? factors[k] : 0;
    std::vector<BigInt> col(s);
    for (std::size_t j = 0; j < s; ++j) {
      to(k, j) = m ? to_int(BigInt(snf.U(i, j) % m + m) % m) : to_int(snf.U(i, j));
      col[j] = snf.U_inv(j, i);
    }
    reduce_mod_lattice(ech, col);
    for (std::size_t j = 0; j < s; ++j) from(j, k) = to_int(col[j]);
  }
  return {FgAbGroup(FgAbGroup::CanonicalTag{}, std::move(factors), free.size()), std::move(to), std::move(from)};
}

FgAbGroup::FgAbGroup(const std::vector<Int>& cyclic_orders, std::size_t free_rank) {
  const std::size_t n = cyclic_orders.size();
  IntMatrix rel(n + free_rank, n);
  for (std::size_t i = 0; i < n; ++i) rel(i, i) = cyclic_orders[i] < 0 ? -cyclic_orders[i] : cyclic_orders[i];
  *this = canonical_quotient(rel).group;
}

std::uint64_t FgAbGroup::order() const {
  require_finite("order");
  std::uint64_t n = 1;
  for (Int d : factors_) {
    if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(d), &n)) throw OverflowError("group order overflow");
  }
  return n;
}

void FgAbGroup::require_finite(const char* what) const {
  if (!is_finite()) throw FinitenessError(std::string(what) + " requires a finite group, got " + to_string());
}

Coords FgAbGroup::generator(std::size_t i) const {
  Coords g = zero();
  g.at(i) = 1;
  return normalize(std::move(g));
}

void FgAbGroup::check_shape(const Coords& x) const {
  if (x.size() != num_generators())
    throw GroupMismatch("element with " + std::to_string(x.size()) + " coordinates does not belong to " + to_string());
}

Coords FgAbGroup::normalize(Coords x) const {
  check_shape(x);
  for (std::size_t i = 0; i < factors_.size(); ++i) x[i] = mod_floor(x[i], factors_[i]);
  return x;
}

Coords FgAbGroup::add(const Coords& x, const Coords& y) const {
  check_shape(x);
  check_shape(y);
  Coords r(x.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(x[i], y[i]);
  return normalize(std::move(r));
}

Coords FgAbGroup::sub(const Coords& x, const Coords& y) const {
  check_shape(x);
  check_shape(y);
  Coords r(x.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_sub(x[i], y[i]);
  return normalize(std::move(r));
}

Coords FgAbGroup::neg(const Coords& x) const { return sub(zero(), x); }

Coords FgAbGroup::scale(Int k, const Coords& x) const {
  check_shape(x);
  Coords r(x.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_mul(k, x[i]);
  return normalize(std::move(r));
}

bool FgAbGroup::is_zero(const Coords& x) const {
  const Coords r = normalize(x);
  return std::all_of(r.begin(), r.end(), [](Int v) { return v == 0; });
}

std::vector<Coords> FgAbGroup::elements() const {
  const std::uint64_t n = order();
  std::vector<Coords> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

std::uint64_t FgAbGroup::index_of(const Coords& x) const {
  require_finite("index_of");
  const Coords r = normalize(x);
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * static_cast<std::uint64_t>(factors_[i]) + static_cast<std::uint64_t>(r[i]);
  return idx;
}

Coords FgAbGroup::element_at(std::uint64_t index) const {
  require_finite("element_at");
  Coords c(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto d = static_cast<std::uint64_t>(factors_[i]);
    c[i] = static_cast<Int>(index % d);
    index /= d;
  }
  return c;
}

std::uint64_t FgAbGroup::element_order(const Coords& x) const {
  require_finite("element_order");
  const Coords r = normalize(x);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Int d = factors_[i];
    const auto local = static_cast<std::uint64_t>(d / std::gcd(r[i], d));
    ord = std::lcm(ord, local);
  }
  return ord;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (Int d : factors_) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (free_rank_ > 0) os << (first ? "" : " + ") << "Z^" << free_rank_;
  return os.str();
}

GroupElem::GroupElem(FgAbGroup group, Coords coords)
    : group_(std::move(group)), coords_(group_.normalize(std::move(coords))) {}

GroupElem GroupElem::operator+(const GroupElem& rhs) const {
  if (!(group_ == rhs.group_)) throw GroupMismatch("adding elements of " + group_.to_string() + " and " + rhs.group_.to_string());
  return {group_, group_.add(coords_, rhs.coords_)};
}

GroupElem GroupElem::operator-(const GroupElem& rhs) const {
  if (!(group_ == rhs.group_))
    throw GroupMismatch("subtracting elements of " + group_.to_string() + " and " + rhs.group_.to_string());
  return {group_, group_.sub(coords_, rhs.coords_)};
}

GroupElem GroupElem::operator-() const { return {group_, group_.neg(coords_)}; }

std::string GroupElem::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

GroupElem add(const GroupElem& x, const GroupElem& y) { return x + y; }
GroupElem neg(const GroupElem& x) { return -x; }
GroupElem normalize(const FgAbGroup& group, Coords coords) { return {group, std::move(coords)}; }

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

FgAbGroup group_from_order_census(const std::vector<std::uint64_t>& orders) {
  const std::uint64_t n = orders.size();
  if (n == 0) throw InputError("empty order census");
  // Exponents of the p-primary cyclic factors, per prime, in decreasing order.
  std::vector<std::vector<unsigned>> primary;
  std::vector<std::uint64_t> primes = prime_factors(n);
  for (std::uint64_t p : primes) {
    std::vector<unsigned> counts_at_least;  // counts_at_least[k-1] = #{i : e_i >= k}
    std::uint64_t prev = 1;
    for (unsigned k = 1;; ++k) {
      const std::uint64_t pk = ipow(p, k);
      const auto ck = static_cast<std::uint64_t>(
          std::count_if(orders.begin(), orders.end(), [&](std::uint64_t o) { return pk % o == 0; }));
      if (ck == prev) break;
      if (ck % prev != 0) throw InputError("order census is not that of an abelian group");
      std::uint64_t ratio = ck / prev;
      unsigned m = 0;
      while (ratio > 1) {
        if (ratio % p != 0) throw InputError("order census is not that of an abelian group");
        ratio /= p;
        ++m;
      }
      counts_at_least.push_back(m);
      prev = ck;
    }
    if (prev != [&] {
          std::uint64_t part = 1;
          std::uint64_t rest = n;
          while (rest % p == 0) {
            part *= p;
            rest /= p;
          }
          return part;
        }())
      throw InputError("order census is not that of an abelian group");
    std::vector<unsigned> exps;
    const unsigned count = counts_at_least.empty() ? 0 : counts_at_least.front();
    for (unsigned i = 0; i < count; ++i) {
      unsigned e = 0;
      while (e < counts_at_least.size() && counts_at_least[e] > i) ++e;
      exps.push_back(e);
    }
    primary.push_back(std::move(exps));
  }
  std::size_t len = 0;
  for (const auto& e : primary) len = std::max(len, e.size());
  std::vector<Int> factors(len, 1);
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    // Largest exponent pairs with the last invariant factor.
    for (std::size_t j = 0; j < primary[pi].size(); ++j)
      factors[len - 1 - j] *= static_cast<Int>(ipow(primes[pi], primary[pi][j]));
  }
  return FgAbGroup(FgAbGroup::CanonicalTag{}, std::move(factors), 0);
}

}  // namespace unital
